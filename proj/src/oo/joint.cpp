#include "qse/oo/joint.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <limits>
#include <memory>

#include "qse/errors.hpp"
#include "qse/oo/energy.hpp"

namespace qse::oo {
namespace {

struct Objective {
  const integrals::MolecularIntegrals* mo;
  const rdm::SpatialRdms* rdms;
  RotationParameters trial;
  int evaluations = 0;
  int budget = 0;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_angles;
};

double evaluate(const gsl_vector* x, void* params) {
  auto* obj = static_cast<Objective*>(params);
  for (std::size_t k = 0; k < obj->trial.angles.size(); ++k) obj->trial.angles[k] = gsl_vector_get(x, k);
  if (obj->evaluations >= obj->budget) return obj->best;  // frozen once exhausted
  ++obj->evaluations;
  const double e = rdm::contract_energy(integrals::rotate_orbitals(*obj->mo, obj->trial.unitary()), *obj->rdms);
  if (e < obj->best) {
    obj->best = e;
    obj->best_angles = obj->trial.angles;
  }
  return e;
}

}  // namespace

RelaxationResult joint_optimize(const integrals::MolecularIntegrals& mo, const rdm::SpatialRdms& rdms,
                                const integrals::OrbitalPartition& partition, const RotationParameters& start,
                                const JointOptions& options) {
  partition.validate(mo.n_spatial);
  if (options.budget < 0) throw DomainError("negative optimizer budget");
  const int n = mo.n_spatial;

  Objective obj;
  obj.mo = &mo;
  obj.rdms = &rdms;
  obj.trial = RotationParameters::identity(n);
  obj.trial.base = start.unitary();
  require_unitary(obj.trial.base, n);
  obj.trial.pairs = rotation_pairs(partition, options.include_active_active);
  obj.trial.angles.assign(obj.trial.pairs.size(), 0.0);
  obj.budget = options.budget;

  RelaxationResult res;
  auto& rep = res.report;
  rep.initial_energy = rdm::contract_energy(integrals::rotate_orbitals(mo, obj.trial.base), rdms);
  rep.energy_trace.push_back(rep.initial_energy);
  obj.best = rep.initial_energy;
  obj.best_angles = obj.trial.angles;

  const std::size_t dim = obj.trial.pairs.size();
  if (options.budget > 0 && dim > 0) {
    gsl_set_error_handler_off();
    gsl_multimin_function fn{&evaluate, dim, &obj};
    std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> x(gsl_vector_calloc(dim), gsl_vector_free);
    std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> step(gsl_vector_alloc(dim), gsl_vector_free);
    gsl_vector_set_all(step.get(), options.initial_step);
    std::unique_ptr<gsl_multimin_fminimizer, decltype(&gsl_multimin_fminimizer_free)> s(
        gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim), gsl_multimin_fminimizer_free);
    gsl_multimin_fminimizer_set(s.get(), &fn, x.get(), step.get());
    while (obj.evaluations < obj.budget) {
      if (gsl_multimin_fminimizer_iterate(s.get()) != GSL_SUCCESS) break;
      ++rep.sweeps;
      rep.energy_trace.push_back(obj.best);
      if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s.get()), options.size_tol) == GSL_SUCCESS) {
        rep.converged = true;
        break;
      }
    }
    rep.budget_exhausted = !rep.converged && obj.evaluations >= obj.budget;
  } else {
    rep.converged = dim == 0;
    rep.budget_exhausted = dim > 0;
  }

  res.rotation = obj.trial;
  res.rotation.angles = obj.best_angles;
  for (auto& t : res.rotation.angles) t = wrap_angle(t);
  for (std::size_t k = 0; k < dim; ++k) rep.angles.push_back({0, res.rotation.pairs[k], res.rotation.angles[k], obj.best});
  rep.evaluations = obj.evaluations;
  rep.final_energy = obj.best;
  return res;
}

}  // namespace qse::oo
