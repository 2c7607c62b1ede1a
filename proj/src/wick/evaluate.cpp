#include "qse/wick/evaluate.hpp"

#include <cstdio>
#include <ostream>

#include "qse/errors.hpp"

namespace qse::wick {

Complex evaluate(const LabeledString& s, ActiveExpectation& active, const integrals::SpinPartition& partition) {
  const ContractionResult r = contract_virtuals(s, partition);
  Complex total{};
  std::vector<fci::LadderOp> local;
  for (const auto& t : r.terms) {
    local.clear();
    for (const auto& op : t.active) local.push_back({partition.active_local[op.index], op.dagger});
    total += t.coefficient * active(local);
  }
  return total;
}

Complex evaluate(const LabeledString& s, const rdm::RdmSet& rdms, const integrals::SpinPartition& partition) {
  if (rdms.n != partition.n_active()) throw ShapeError("RDM size differs from the active spin-orbital count");
  ActiveExpectation active(rdms);
  return evaluate(s, active, partition);
}

LabeledString label(std::span<const fci::LadderOp> ops, const integrals::SpinPartition& partition, Complex coefficient) {
  LabeledString s;
  s.coefficient = coefficient;
  for (const auto& op : ops) {
    if (op.index < 0 || op.index >= partition.n_spin_orbitals) throw LabelError("spin orbital outside the partition");
    s.ops.push_back({op.index, op.dagger, partition.label[op.index]});
  }
  return s;
}

void dump(const ContractionResult& result, std::ostream& out) {
  char buf[64];
  for (const auto& t : result.terms) {
    for (const auto& n : normal_order(t.active)) {
      const Complex c = t.coefficient * n.coefficient;
      if (c.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.12g", c.real());
      } else {
        std::snprintf(buf, sizeof buf, "(%.12g,%.12g)", c.real(), c.imag());
      }
      out << buf << " * D[";
      for (std::size_t i = 0; i < n.upper.size(); ++i) out << (i ? " " : "") << n.upper[i];
      out << '|';
      for (std::size_t i = 0; i < n.lower.size(); ++i) out << (i ? " " : "") << n.lower[i];
      out << "]\n";
    }
  }
}

}  // namespace qse::wick
