#include "qse/vqse/pool.hpp"

#include <algorithm>

#include "qse/errors.hpp"

namespace qse::vqse {

fci::OperatorString ExpansionOperator::ops() const {
  switch (kind) {
    case OpKind::Identity:
      return {};
    case OpKind::Single:
      return {fci::cre(i), fci::ann(p)};
    case OpKind::Double:
      return {fci::cre(mu), fci::ann(q), fci::cre(nu), fci::ann(r)};
  }
  return {};
}

int ExpansionOperator::delta_sz2() const {
  auto s = [](int x) { return x % 2 == 0 ? 1 : -1; };
  switch (kind) {
    case OpKind::Identity:
      return 0;
    case OpKind::Single:
      return s(i) - s(p);
    case OpKind::Double:
      return s(mu) + s(nu) - s(q) - s(r);
  }
  return 0;
}

std::string ExpansionOperator::to_string() const {
  switch (kind) {
    case OpKind::Identity:
      return "I";
    case OpKind::Single:
      return "a+" + std::to_string(i) + " a" + std::to_string(p);
    case OpKind::Double:
      return "a+" + std::to_string(mu) + " a" + std::to_string(q) + " a+" + std::to_string(nu) + " a" + std::to_string(r);
  }
  return "?";
}

std::vector<ExpansionOperator> build_pool(const integrals::SpinPartition& partition, const PoolOptions& options) {
  if (partition.active.empty()) throw DomainError("build_pool: empty active space");
  std::vector<int> excited = options.restrict_to ? *options.restrict_to : partition.active_excited;
  for (int a : excited) {
    if (std::find(partition.active.begin(), partition.active.end(), a) == partition.active.end()) {
      throw DomainError("build_pool: restriction contains a non-active spin orbital");
    }
  }
  std::sort(excited.begin(), excited.end());
  excited.erase(std::unique(excited.begin(), excited.end()), excited.end());

  std::vector<ExpansionOperator> pool;
  pool.push_back(ExpansionOperator::identity());
  if (!options.include_identity) pool.clear();
  if (excited.empty()) return pool;

  if (options.singles) {
    std::vector<int> targets = excited;
    targets.insert(targets.end(), partition.virtuals.begin(), partition.virtuals.end());
    std::sort(targets.begin(), targets.end());
    for (int i : targets)
      for (int p : excited) pool.push_back(ExpansionOperator::single(i, p));
  }
  if (options.doubles) {
    const auto& v = partition.virtuals;
    for (std::size_t a = 0; a < v.size(); ++a)
      for (std::size_t b = a + 1; b < v.size(); ++b)
        for (int q : excited)
          for (int r : excited) pool.push_back(ExpansionOperator::double_(v[a], q, v[b], r));
  }
  return pool;
}

std::vector<ExpansionOperator> prune_spin_violating(const std::vector<ExpansionOperator>& pool) {
  std::vector<ExpansionOperator> out;
  for (const auto& op : pool)
    if (op.delta_sz2() == 0) out.push_back(op);
  return out;
}

}  // namespace qse::vqse
