#include "qse/integrals/partition.hpp"

#include <algorithm>
#include <string>

#include "qse/errors.hpp"

namespace qse::integrals {

void OrbitalPartition::validate(int n_spatial) const {
  std::vector<int> seen(static_cast<std::size_t>(std::max(n_spatial, 0)), 0);
  auto mark = [&](const std::vector<int>& set, const char* name) {
    for (int p : set) {
      if (p < 0 || p >= n_spatial) {
        throw PartitionError(std::string(name) + " orbital " + std::to_string(p) + " outside [0, " +
                             std::to_string(n_spatial) + ")");
      }
      if (seen[p]++) throw PartitionError("orbital " + std::to_string(p) + " listed more than once");
    }
  };
  mark(core, "core");
  mark(active, "active");
  mark(virtuals, "virtual");
  if (active_excited) {
    for (int p : *active_excited) {
      if (std::find(active.begin(), active.end(), p) == active.end()) {
        throw PartitionError("excited-active orbital " + std::to_string(p) + " is not in the active set");
      }
    }
  }
}

Space OrbitalPartition::space_of(int spatial) const {
  auto in = [spatial](const std::vector<int>& v) { return std::find(v.begin(), v.end(), spatial) != v.end(); };
  if (in(core)) return Space::Core;
  if (in(active)) return Space::Active;
  if (in(virtuals)) return Space::Virtual;
  return Space::None;
}

OrbitalPartition OrbitalPartition::from_counts(int n_core, int n_active, int n_virtual, int n_spatial) {
  if (n_core < 0 || n_active < 0) throw PartitionError("negative orbital count");
  if (n_virtual < 0) n_virtual = n_spatial - n_core - n_active;
  if (n_core + n_active + n_virtual > n_spatial || n_virtual < 0) {
    throw PartitionError("partition needs " + std::to_string(n_core + n_active + n_virtual) + " orbitals, basis has " +
                         std::to_string(n_spatial));
  }
  OrbitalPartition p;
  int next = 0;
  for (int i = 0; i < n_core; ++i) p.core.push_back(next++);
  for (int i = 0; i < n_active; ++i) p.active.push_back(next++);
  for (int i = 0; i < n_virtual; ++i) p.virtuals.push_back(next++);
  return p;
}

SpinPartition SpinPartition::from(const OrbitalPartition& partition, int n_spatial) {
  partition.validate(n_spatial);
  SpinPartition s;
  s.n_spin_orbitals = 2 * n_spatial;
  s.label.assign(s.n_spin_orbitals, Space::None);
  s.active_local.assign(s.n_spin_orbitals, -1);
  auto expand = [](const std::vector<int>& spatial) {
    std::vector<int> out;
    for (int p : spatial) {
      out.push_back(alpha_of(p));
      out.push_back(beta_of(p));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  s.core = expand(partition.core);
  s.active = expand(partition.active);
  s.virtuals = expand(partition.virtuals);
  s.active_excited = partition.active_excited ? expand(*partition.active_excited) : s.active;
  for (int i : s.core) s.label[i] = Space::Core;
  for (int i : s.virtuals) s.label[i] = Space::Virtual;
  for (std::size_t k = 0; k < s.active.size(); ++k) {
    s.label[s.active[k]] = Space::Active;
    s.active_local[s.active[k]] = static_cast<int>(k);
  }
  return s;
}

}  // namespace qse::integrals
