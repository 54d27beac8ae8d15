#include "germforge/liftable_fields.hpp"

#include <cstdlib>

#include "germforge/errors.hpp"
#include "germforge/linear_algebra.hpp"

namespace germforge {

DerlogModule derlog(const HypersurfaceEquation& h, DerlogScope scope) {
  const Polynomial& H = h.poly;
  const RingContext& ring = H.ring();
  const std::size_t m = ring.nvars();
  std::vector<VectorTuple> columns;
  for (std::size_t i = 0; i < m; ++i) columns.push_back(VectorTuple{{H.derivative(i)}});
  columns.push_back(VectorTuple{{-H}});
  const MonomialOrder order =
      scope == DerlogScope::Local ? MonomialOrder::negdegrevlex() : MonomialOrder::degrevlex();
  const auto syz = module_syzygies(columns, order, SyzygyOutput::Generators);

  DerlogModule out{h, {}, {}};
  const RingContext work = ring.with_order(order);
  const Polynomial Hw = H.in_ring(work);
  for (const auto& s : syz) {
    VectorTuple eta;
    eta.components.assign(s.components.begin(), s.components.begin() + static_cast<std::ptrdiff_t>(m));
    const Polynomial& a = s.components[m];
    Polynomial lhs(work);
    for (std::size_t i = 0; i < m; ++i) lhs += eta.components[i] * Hw.derivative(i);
    if (lhs != a * Hw) throw InternalError("derlog: generator fails eta(H) = a*H");
    out.generators.push_back(std::move(eta));
    out.cofactors.push_back(a);
  }
  return out;
}

std::vector<std::string> unfolding_target_names(const OnePSU& unfolding) {
  const MapGerm& u = unfolding.unfolding();
  std::vector<std::string> taken = u.source().names();
  std::vector<std::string> out;
  for (std::size_t j = 0; j + 1 < u.target_dim(); ++j) {
    std::string n = fresh_name("X" + std::to_string(j + 1), taken);
    taken.push_back(n);
    out.push_back(n);
  }
  out.push_back(fresh_name("L", taken));
  return out;
}

LiftIdeal lift_ideal(const OnePSU& unfolding) {
  const HypersurfaceEquation h = defining_equation(unfolding.unfolding(), unfolding_target_names(unfolding));
  DerlogModule d = derlog(h);
  const RingContext local = h.ring().with_order(MonomialOrder::negdegrevlex());
  std::vector<Polynomial> last;
  for (const auto& g : d.generators) last.push_back(g.components.back().in_ring(local));
  if (last.empty()) last.push_back(Polynomial(local));
  IdealBasis ideal = standard_basis(last);
  return LiftIdeal{std::move(d), std::move(ideal)};
}

std::string SubstantialityDegree::to_string() const {
  if (value) return std::to_string(*value);
  if (!leading_power) return "INFINITE";
  return ">=" + std::to_string(bound + 1);
}

unsigned default_substantiality_bound() {
  if (const char* env = std::getenv("GERMFORGE_BOUND")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 100000) return static_cast<unsigned>(v);
  }
  return 32;
}

SubstantialityDegree substantiality_degree(const LiftIdeal& lift, unsigned bound) {
  SubstantialityDegree out;
  out.bound = bound;
  const std::size_t l = lift.parameter_index();
  for (const auto& lm : lift.ideal.leading_monomials())
    if (lm.degree() == lm[l] && (!out.leading_power || lm[l] < *out.leading_power)) out.leading_power = lm[l];
  // m^K lies in the ideal, so L^K does too.
  if (auto k = lift.ideal.noether(); k && (!out.leading_power || *k < *out.leading_power)) out.leading_power = *k;
  if (!out.leading_power) return out;
  const Polynomial lambda = lift.parameter();
  for (unsigned m = std::max(1u, *out.leading_power); m <= bound; ++m) {
    if (lift.ideal.contains(lambda.pow(m))) {
      out.value = m;
      break;
    }
  }
  return out;
}

SubstantialityDegree substantiality_degree(const OnePSU& unfolding, unsigned bound) {
  return substantiality_degree(lift_ideal(unfolding), bound);
}

namespace {

Polynomial last_base_variable(const RingContext& ring) {
  if (ring.nvars() < 2) throw DomainError("no base target variable besides the parameter");
  return Polynomial::variable(ring, ring.nvars() - 2);
}

}  // namespace

bool is_cross_substantial(const LiftIdeal& lift) { return lift.ideal.contains(last_base_variable(lift.ring())); }

bool is_cross_substantial(const OnePSU& unfolding) { return is_cross_substantial(lift_ideal(unfolding)); }

std::optional<CrossWitness> cross_substantiality_witness(const LiftIdeal& lift) {
  if (!is_cross_substantial(lift)) return std::nullopt;
  const auto& gens = lift.derlog.generators;
  const RingContext ring = lift.derlog.divisor.ring().with_order(MonomialOrder::negdegrevlex());
  const Polynomial xp = last_base_variable(ring);
  std::vector<VectorTuple> columns{VectorTuple{{xp}}};
  for (const auto& g : gens) columns.push_back(VectorTuple{{g.components.back().in_ring(ring)}});
  for (const auto& s : module_syzygies(columns, ring.order())) {
    if (s.components[0].constant_term() == 0) continue;
    CrossWitness w{{}, -s.components[0], {}};
    w.coefficients.assign(s.components.begin() + 1, s.components.end());
    const std::size_t rank = gens.front().rank();
    w.field.components.assign(rank, Polynomial(ring));
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t k = 0; k < rank; ++k)
        w.field.components[k] += w.coefficients[i] * gens[i].components[k].in_ring(ring);
    if (w.field.components.back() != w.unit * xp)
      throw InternalError("cross-substantiality witness has the wrong last component");
    return w;
  }
  throw InternalError("X_p lies in the lift ideal but no syzygy with a unit coefficient was found");
}

bool jxh_test(const HypersurfaceEquation& h) {
  const RingContext local = h.ring().with_order(MonomialOrder::negdegrevlex());
  const Polynomial H = h.poly.in_ring(local);
  const std::size_t m = local.nvars();
  if (m < 2) throw DomainError("jxh_test needs a parameter and at least one base variable");
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i + 1 < m; ++i) partials.push_back(H.derivative(i));
  return standard_basis(partials).contains(Polynomial::variable(local, m - 2));
}

std::size_t isosingular_dimension(const MapGerm& t) {
  const DerlogModule d = derlog(defining_equation(t));
  RationalMatrix rows;
  for (const auto& g : d.generators) {
    std::vector<Rational> row;
    for (const auto& c : g.components) row.push_back(c.constant_term());
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows));
}

bool augmentation_certificate(const MapGerm& t, std::size_t p, std::size_t s) {
  return isosingular_dimension(t) + s >= p;
}

}  // namespace germforge
