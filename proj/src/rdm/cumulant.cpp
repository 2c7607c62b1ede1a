#include "qse/rdm/cumulant.hpp"

#include <cmath>

#include "qse/errors.hpp"
#include "qse/rdm/wedge.hpp"

namespace qse::rdm {
namespace {

void check_inputs(const Rdm& d1, const Rdm& d2) {
  if (d1.rank() != 1 || d2.rank() != 2) throw ShapeError("expected a 1-RDM and a 2-RDM");
  if (d1.n() != d2.n()) throw ShapeError("1-RDM and 2-RDM over different orbital counts");
}

Rdm delta2_of(const Rdm& d1, const Rdm& d2) { return 0.5 * d2 - wedge(d1, d1); }

}  // namespace

Rdm reconstruct_3rdm(const Rdm& d1, const Rdm& d2) {
  check_inputs(d1, d2);
  const Rdm delta2 = delta2_of(d1, d2);
  Rdm d3 = wedge(wedge(d1, d1), d1) + 3.0 * wedge(delta2, d1);
  d3 *= 6.0;
  d3.n_electrons = d1.n_electrons;
  return d3;
}

Rdm cumulant_4rdm(const Rdm& d1, const Rdm& d2, int truncation_rank, const Rdm* d3) {
  check_inputs(d1, d2);
  if (truncation_rank != 2 && truncation_rank != 3) throw DomainError("truncation rank must be 2 or 3");
  const Rdm delta2 = delta2_of(d1, d2);
  const Rdm d11 = wedge(d1, d1);
  Rdm d4 = wedge(d11, d11) + 6.0 * wedge(delta2, d11) + 3.0 * wedge(delta2, delta2);
  if (truncation_rank == 3) {
    if (!d3) throw MissingDataError(3);
    if (d3->n() != d1.n()) throw ShapeError("3-RDM over a different orbital count");
    const Rdm delta3 = (1.0 / 6.0) * *d3 - wedge(d11, d1) - 3.0 * wedge(delta2, d1);
    d4 += 4.0 * wedge(delta3, d1);
  }
  d4 *= 24.0;
  d4.n_electrons = d1.n_electrons;
  return d4;
}

CumulantSet compute_cumulants(const RdmSet& rdms) {
  const Rdm& d1 = rdms.get(1);
  const Rdm& d2 = rdms.get(2);
  check_inputs(d1, d2);
  CumulantSet c{d1, delta2_of(d1, d2), std::nullopt, std::nullopt};
  const Rdm d11 = wedge(d1, d1);
  if (rdms.has(3)) {
    c.delta3 = (1.0 / 6.0) * rdms.get(3) - wedge(d11, d1) - 3.0 * wedge(c.delta2, d1);
    if (rdms.has(4)) {
      c.delta4 = (1.0 / 24.0) * rdms.get(4) - wedge(d11, d11) - 6.0 * wedge(c.delta2, d11) -
                 3.0 * wedge(c.delta2, c.delta2) - 4.0 * wedge(*c.delta3, d1);
    }
  }
  return c;
}

double reconstruction_error(const Rdm& approx, const Rdm& exact) {
  if (approx.rank() != exact.rank() || approx.n() != exact.n()) throw ShapeError("RDM rank or size mismatch");
  double fact = 1.0;
  for (int j = 2; j <= approx.rank(); ++j) fact *= j;
  // Each canonical element stands for (k!)^2 ordered index tuples.
  return fact * (approx.matrix() - exact.matrix()).norm();
}

}  // namespace qse::rdm
