#include "germforge/germ_model.hpp"

#include <algorithm>

#include "germforge/errors.hpp"

namespace germforge {

namespace {

// Identity images for every variable of `from` that also exists in `to`.
std::map<std::string, Polynomial> identity_on(const RingContext& from, const RingContext& to) {
  std::map<std::string, Polynomial> out;
  for (const auto& n : from.names())
    if (to.index_of(n)) out.emplace(n, Polynomial::variable(to, n));
  return out;
}

}  // namespace

MapGerm::MapGerm(RingContext source, std::vector<Polynomial> components)
    : source_(std::move(source)), components_(std::move(components)) {
  if (components_.empty()) throw DomainError("map-germ needs at least one component");
  for (auto& c : components_) {
    if (c.ring() != source_) c = c.in_ring(source_);
    if (c.constant_term() != 0) throw DomainError("map-germ component does not vanish at the origin: " + c.to_string());
  }
}

std::string MapGerm::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ", ";
    out += components_[i].to_string();
  }
  return out + ")";
}

OnePSU::OnePSU(MapGerm unfolding) : unfolding_(std::move(unfolding)) {
  const RingContext& r = unfolding_.source();
  if (r.nvars() < 1 || unfolding_.target_dim() < 2)
    throw DomainError("a one-parameter unfolding needs a parameter and at least one other component");
  const Polynomial lambda = Polynomial::variable(r, r.nvars() - 1);
  if (unfolding_.components().back() != lambda)
    throw DomainError("the last component of an unfolding must be its parameter '" + r.names().back() + "'");
}

MapGerm OnePSU::base() const {
  const RingContext& r = unfolding_.source();
  std::vector<std::string> names(r.names().begin(), r.names().end() - 1);
  const RingContext target(names, r.order());
  auto assign = identity_on(r, target);
  assign.emplace(parameter(), Polynomial(target));
  std::vector<Polynomial> comps;
  for (std::size_t j = 0; j + 1 < unfolding_.target_dim(); ++j)
    comps.push_back(substitute(unfolding_.components()[j], assign, target));
  return MapGerm(target, std::move(comps));
}

namespace {

std::vector<std::string> augmented_names(const OnePSU& f, const FunctionGerm& g) {
  const auto& fn = f.unfolding().source().names();
  std::vector<std::string> names(fn.begin(), fn.end() - 1);
  for (const auto& z : g.ring().names()) {
    if (std::find(fn.begin(), fn.end(), z) != fn.end())
      throw DomainError("augmenting variable '" + z + "' collides with a variable of the unfolding");
    names.push_back(z);
  }
  return names;
}

}  // namespace

MapGerm augment(const OnePSU& unfolding, const FunctionGerm& g) {
  const RingContext target(augmented_names(unfolding, g));
  const RingContext& src = unfolding.unfolding().source();
  auto assign = identity_on(src, target);
  assign.erase(unfolding.parameter());
  assign.emplace(unfolding.parameter(), g.poly().in_ring(target));
  std::vector<Polynomial> comps;
  const auto& uc = unfolding.unfolding().components();
  for (std::size_t j = 0; j + 1 < uc.size(); ++j) comps.push_back(substitute(uc[j], assign, target));
  for (const auto& z : g.ring().names()) comps.push_back(Polynomial::variable(target, z));
  return MapGerm(target, std::move(comps));
}

OnePSU natural_opsu(const OnePSU& unfolding, const FunctionGerm& g) {
  std::vector<std::string> names = augmented_names(unfolding, g);
  const std::string lambda = fresh_name(unfolding.parameter(), names);
  names.push_back(lambda);
  const RingContext target(names);
  const RingContext& src = unfolding.unfolding().source();
  auto assign = identity_on(src, target);
  assign.erase(unfolding.parameter());
  assign.emplace(unfolding.parameter(), g.poly().in_ring(target) + Polynomial::variable(target, lambda));
  std::vector<Polynomial> comps;
  const auto& uc = unfolding.unfolding().components();
  for (std::size_t j = 0; j + 1 < uc.size(); ++j) comps.push_back(substitute(uc[j], assign, target));
  for (const auto& z : g.ring().names()) comps.push_back(Polynomial::variable(target, z));
  comps.push_back(Polynomial::variable(target, lambda));
  return OnePSU(MapGerm(target, std::move(comps)));
}

OnePSU normal_form_opsu(const MapGerm& f, const VectorTuple& gamma, const std::vector<Polynomial>& s,
                        const std::vector<Polynomial>& q, const std::string& parameter) {
  const std::size_t p = f.target_dim();
  if (gamma.rank() != p) throw DomainError("gamma must have one entry per component of f");
  if (s.size() != q.size()) throw DomainError("s and q must have the same length");
  std::string lambda = parameter;
  if (!q.empty()) {
    if (q.front().ring().nvars() != 1) throw DomainError("q must live in a one-variable ring");
    lambda = q.front().ring().name(0);
  }
  if (f.source().index_of(lambda)) throw DomainError("parameter '" + lambda + "' collides with a source variable");
  std::vector<std::string> names = f.source().names();
  names.push_back(lambda);
  const RingContext target(names);
  const auto lift = identity_on(f.source(), target);

  std::vector<Polynomial> fl;
  for (const auto& c : f.components()) fl.push_back(substitute(c, lift, target));
  Polynomial factor = Polynomial::constant(target, 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].ring().nvars() != p) throw DomainError("s_i must live in a ring with one variable per component of f");
    if (s[i].constant_term() != 0) throw DomainError("s_i must vanish at the origin");
    std::map<std::string, Polynomial> at_f;
    for (std::size_t j = 0; j < p; ++j) at_f.emplace(s[i].ring().name(j), fl[j]);
    const Polynomial qi = substitute(q[i], {{lambda, Polynomial::variable(target, lambda)}}, target);
    factor += qi * substitute(s[i], at_f, target);
  }
  const Polynomial lv = Polynomial::variable(target, lambda);
  std::vector<Polynomial> comps;
  for (std::size_t j = 0; j < p; ++j) {
    const Polynomial gj = gamma.components[j].in_ring(f.source());
    comps.push_back(fl[j] + factor * lv * substitute(gj, lift, target));
  }
  comps.push_back(lv);
  return OnePSU(MapGerm(target, std::move(comps)));
}

PlaneCurveReport plane_curve_report(const FunctionGerm& g, std::size_t branches) {
  if (g.nvars() != 2) throw DomainError("plane curve needs a function of two variables");
  if (branches < 1) throw DomainError("branch count must be at least 1");
  PlaneCurveReport rep;
  rep.mu = milnor_number(g).value();
  rep.tau = tjurina_number(g).value();
  rep.branches = branches;
  if ((rep.mu + branches - 1) % 2 != 0)
    throw DomainError("mu + r - 1 is odd: branch count " + std::to_string(branches) + " is inconsistent with mu = " +
                      std::to_string(rep.mu));
  rep.delta = (rep.mu + branches - 1) / 2;
  rep.image_milnor = rep.mu - rep.delta;
  if (rep.tau <= rep.delta) throw MathRefusal("tau = delta: the parametrization has codimension 0");
  rep.aecod = rep.tau - rep.delta;
  rep.quotient = Rational(static_cast<long>(rep.image_milnor), static_cast<long>(rep.aecod));
  rep.quotient.canonicalize();
  return rep;
}

Conjecture2Bound conjecture2_bound(unsigned n) {
  if (n < 2) throw DomainError("conjecture2_bound needs n >= 2");
  Conjecture2Bound out;
  out.n = n;
  for (unsigned k = 1; k + 1 <= n; ++k) {
    const unsigned long v = static_cast<unsigned long>(k + 1) * (n - k);
    out.values.emplace_back(k, v);
    out.max = std::max(out.max, v);
  }
  out.bound = Rational(static_cast<long>((n + 1) * (n + 1)), 4);
  out.bound.canonicalize();
  out.attained = Rational(static_cast<long>(out.max)) == out.bound;
  return out;
}

}  // namespace germforge
