#include "qse/wick/contraction.hpp"

#include <memory>
#include <string>

#include "qse/errors.hpp"

namespace qse::wick {

void check_labels(const LabeledString& s, const integrals::SpinPartition& partition) {
  for (const auto& op : s.ops) {
    if (op.index < 0 || op.index >= partition.n_spin_orbitals) {
      throw LabelError("spin orbital " + std::to_string(op.index) + " outside the partition");
    }
    if (op.label != Space::Active && op.label != Space::Virtual) {
      throw LabelError("operator labels must be ACTIVE or VIRTUAL");
    }
    if (partition.label[op.index] != op.label) {
      throw LabelError("label of spin orbital " + std::to_string(op.index) + " contradicts the partition");
    }
  }
}

int separation_sign(std::span<const bool> is_virtual) {
  int active_seen = 0, parity = 0;
  for (bool v : is_virtual) {
    if (v) {
      parity ^= active_seen & 1;
    } else {
      ++active_seen;
    }
  }
  return parity ? -1 : 1;
}

namespace {

// Recursive leftmost contraction over positions `rest` (indices into dagger).
void pair_up(std::span<const bool> dagger, std::vector<int> rest, int sign,
             std::vector<std::pair<int, int>>& pairs, std::vector<Pattern::Pairing>& out) {
  if (rest.empty()) {
    out.push_back({sign, pairs});
    return;
  }
  const int x = rest.front();
  if (dagger[x]) return;  // a leading creator annihilates the bra vacuum
  for (std::size_t j = 1; j < rest.size(); ++j) {
    const int y = rest[j];
    if (!dagger[y]) continue;
    std::vector<int> next;
    next.reserve(rest.size() - 2);
    for (std::size_t m = 1; m < rest.size(); ++m)
      if (m != j) next.push_back(rest[m]);
    pairs.emplace_back(x, y);
    pair_up(dagger, std::move(next), (j - 1) % 2 ? -sign : sign, pairs, out);
    pairs.pop_back();
  }
}

}  // namespace

double Pattern::virtual_factor(std::span<const int> indices) const {
  double total = 0.0;
  for (const auto& p : pairings) {
    bool ok = true;
    for (const auto& [a, c] : p.pairs) {
      if (indices[a] != indices[c]) {
        ok = false;
        break;
      }
    }
    if (ok) total += p.sign;
  }
  return separation_sign * total;
}

Pattern make_pattern(std::span<const bool> dagger, std::span<const bool> is_virtual) {
  if (dagger.size() != is_virtual.size()) throw ShapeError("pattern flag lengths differ");
  Pattern p;
  p.separation_sign = separation_sign(is_virtual);
  int n_cre = 0, n_ann = 0;
  for (std::size_t i = 0; i < dagger.size(); ++i) {
    if (is_virtual[i]) {
      p.virtual_positions.push_back(static_cast<int>(i));
      (dagger[i] ? n_cre : n_ann)++;
    } else {
      p.active_positions.push_back(static_cast<int>(i));
    }
  }
  if (n_cre != n_ann) return p;  // no complete pairing exists
  std::vector<std::pair<int, int>> pairs;
  pair_up(dagger, p.virtual_positions, 1, pairs, p.pairings);
  return p;
}

double vacuum_expectation(std::span<const fci::LadderOp> ops) {
  const std::size_t n = ops.size();
  std::unique_ptr<bool[]> dag(new bool[n]), virt(new bool[n]);
  std::vector<int> idx(n);
  for (std::size_t i = 0; i < n; ++i) {
    dag[i] = ops[i].dagger;
    virt[i] = true;
    idx[i] = ops[i].index;
  }
  return make_pattern(std::span<const bool>(dag.get(), n), std::span<const bool>(virt.get(), n)).virtual_factor(idx);
}

ContractionResult contract_virtuals(const LabeledString& s, const integrals::SpinPartition& partition) {
  check_labels(s, partition);
  const std::size_t n = s.ops.size();
  std::unique_ptr<bool[]> dag(new bool[n]), virt(new bool[n]);
  std::vector<int> idx(n);
  for (std::size_t i = 0; i < n; ++i) {
    dag[i] = s.ops[i].dagger;
    virt[i] = s.ops[i].label == Space::Virtual;
    idx[i] = s.ops[i].index;
  }
  const Pattern p = make_pattern(std::span<const bool>(dag.get(), n), std::span<const bool>(virt.get(), n));
  ContractionResult out;
  const double f = p.virtual_factor(idx);
  if (f == 0.0) return out;
  ContractionTerm t{s.coefficient * f, {}};
  for (int pos : p.active_positions) t.active.push_back({idx[pos], dag[pos]});
  out.terms.push_back(std::move(t));
  return out;
}

}  // namespace qse::wick
