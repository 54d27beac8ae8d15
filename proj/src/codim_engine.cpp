#include "germforge/codim_engine.hpp"

#include "germforge/errors.hpp"

namespace germforge {

Dimension aecod_damon(const LiftIdeal& lift) {
  std::vector<Polynomial> gens = lift.ideal.local_presentation();
  gens.push_back(lift.parameter());
  return quotient_dimension(standard_basis(gens));
}

Dimension aecod_damon(const OnePSU& unfolding) { return aecod_damon(lift_ideal(unfolding)); }

Dimension augmentation_codim(const LiftIdeal& lift, const FunctionGerm& g) {
  const RingContext& lr = lift.ring();
  const std::size_t p = lr.nvars() - 1;
  // Joint ring: base target variables, then the variables of g (renamed away
  // from clashes).
  std::vector<std::string> names(lr.names().begin(), lr.names().begin() + static_cast<std::ptrdiff_t>(p));
  std::vector<std::string> taken = lr.names();
  std::map<std::string, std::string> rename;
  for (const auto& z : g.ring().names()) {
    const std::string fresh = fresh_name(z, taken);
    taken.push_back(fresh);
    names.push_back(fresh);
    rename.emplace(z, fresh);
  }
  const RingContext joint(names, MonomialOrder::negdegrevlex());

  std::map<std::string, Polynomial> g_vars;
  for (const auto& [from, to] : rename) g_vars.emplace(from, Polynomial::variable(joint, to));
  const Polynomial gj = substitute(g.poly(), g_vars, joint);

  std::map<std::string, Polynomial> assign;
  for (std::size_t i = 0; i < p; ++i) assign.emplace(lr.name(i), Polynomial::variable(joint, i));
  assign.emplace(lr.name(p), gj);

  std::vector<Polynomial> gens;
  for (const auto& h : lift.ideal.local_presentation()) {
    Polynomial s = substitute(h, assign, joint);
    if (!s.is_zero()) gens.push_back(std::move(s));
  }
  for (std::size_t i = p; i < joint.nvars(); ++i) {
    Polynomial d = gj.derivative(i);
    if (!d.is_zero()) gens.push_back(std::move(d));
  }
  if (gens.empty()) return Dimension::infinite();
  return quotient_dimension(standard_basis(gens));
}

Dimension augmentation_codim(const OnePSU& unfolding, const FunctionGerm& g) {
  return augmentation_codim(lift_ideal(unfolding), g);
}

UnfoldingData analyze_unfolding(const OnePSU& unfolding, unsigned bound) {
  LiftIdeal lift = lift_ideal(unfolding);
  Dimension aecod = aecod_damon(lift);
  SubstantialityDegree delta = substantiality_degree(lift, bound);
  return UnfoldingData{std::move(lift), aecod, delta};
}

FunctionData analyze_function(const FunctionGerm& g) {
  FunctionData d;
  d.mu = milnor_number(g).value();
  d.tau = tjurina_number(g).value();
  d.bs = briancon_skoda(g);
  return d;
}

BoundsReport bounds_report(const UnfoldingData& f, const FunctionGerm& g, const std::string& label) {
  BoundsReport r;
  r.label = label;
  r.aecod_f = f.aecod.value();
  const FunctionData gd = analyze_function(g);
  r.mu_g = gd.mu;
  r.tau_g = gd.tau;
  r.bs_g = gd.bs;
  r.delta_f = f.delta;
  r.codim_aug = augmentation_codim(f.lift, g).value();
  r.lower = r.aecod_f * r.tau_g;
  r.upper = r.aecod_f * r.mu_g;
  r.refined = r.aecod_f * r.tau_g + r.mu_g - r.tau_g;
  r.lower_equality = r.codim_aug == r.lower;
  r.upper_equality = r.codim_aug == r.upper;
  r.g_quasihom = r.mu_g == r.tau_g;
  r.f_substantial = f.delta.value && *f.delta.value == 1;
  const std::string where = label.empty() ? std::string() : " (" + label + ")";
  if (r.lower > r.codim_aug || r.codim_aug > r.upper)
    throw InternalError("codimension " + std::to_string(r.codim_aug) + " outside [" + std::to_string(r.lower) + ", " +
                        std::to_string(r.upper) + "]" + where);
  if (r.lower_equality != (r.g_quasihom || r.f_substantial))
    throw InternalError("lower-bound equality does not match (mu = tau or delta = 1)" + where);
  if (r.g_quasihom && !r.upper_equality) throw InternalError("mu = tau but the upper bound is not attained" + where);
  return r;
}

BoundsReport bounds_report(const OnePSU& unfolding, const FunctionGerm& g, const std::string& label) {
  return bounds_report(analyze_unfolding(unfolding), g, label);
}

MondCheck mond_inequality_check(const OnePSU& unfolding, const FunctionGerm& g, std::size_t image_milnor_f) {
  MondCheck c;
  c.lhs = augmentation_codim(unfolding, g).value();
  c.rhs = image_milnor_f * milnor_number(g).value();
  c.holds = c.lhs <= c.rhs;
  return c;
}

}  // namespace germforge
