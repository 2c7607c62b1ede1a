#include "qse/rdm/composite.hpp"

#include <cmath>

#include "qse/errors.hpp"
#include "qse/rdm/wedge.hpp"

namespace qse::rdm {
namespace {

Rdm embed(const Rdm& local, const std::vector<int>& to_global, int n) {
  Rdm out(local.rank(), n);
  const int k = local.rank();
  std::vector<int> u(k), p(k);
  for (std::size_t a = 0; a < local.n_tuples(); ++a)
    for (std::size_t b = 0; b < local.n_tuples(); ++b) {
      const Complex v = local.matrix()(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      if (v == Complex{}) continue;
      for (int j = 0; j < k; ++j) {
        u[j] = to_global[local.tuples()[a][j]];
        p[j] = to_global[local.tuples()[b][j]];
      }
      out.set(u, p, v);
    }
  return out;
}

}  // namespace

CompositeRdms composite_full_rdms(const Rdm& active_d1, const Rdm& active_d2,
                                  const integrals::OrbitalPartition& partition, int n_spatial) {
  const auto sp = integrals::SpinPartition::from(partition, n_spatial);
  if (active_d1.rank() != 1 || active_d2.rank() != 2) throw ShapeError("expected an active 1-RDM and 2-RDM");
  if (active_d1.n() != sp.n_active() || active_d2.n() != sp.n_active()) {
    throw ShapeError("active RDM size differs from the active spin-orbital count");
  }
  const int n = sp.n_spin_orbitals;
  const int n_core = static_cast<int>(sp.core.size());

  Rdm c1(1, n);
  for (int c : sp.core) {
    const int i[] = {c};
    c1.set(i, i, 1.0);
  }
  const Rdm a1 = embed(active_d1, sp.active, n);
  const Rdm a2 = embed(active_d2, sp.active, n);

  CompositeRdms out{c1 + a1, Rdm(2, n)};
  // d2 = c1^c1 + 2 c1^a1 + a2/2 in the d_k = D_k / k! normalization.
  Rdm d2 = wedge(c1, c1) + 2.0 * wedge(c1, a1) + 0.5 * a2;
  out.d2 = 2.0 * d2;
  const int n_act_e = active_d1.n_electrons >= 0 ? active_d1.n_electrons
                                                 : static_cast<int>(std::lround(active_d1.trace().real()));
  out.d1.n_electrons = out.d2.n_electrons = n_core + n_act_e;
  return out;
}

}  // namespace qse::rdm
