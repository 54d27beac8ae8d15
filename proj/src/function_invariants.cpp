#include "germforge/function_invariants.hpp"

#include "germforge/errors.hpp"
#include "germforge/linear_algebra.hpp"
#include "germforge/parse.hpp"

namespace germforge {

FunctionGerm::FunctionGerm(Polynomial poly) : poly_(std::move(poly)) {
  if (poly_.constant_term() != 0) throw DomainError("function germ must vanish at the origin");
}

Polynomial FunctionGerm::local() const {
  return poly_.in_ring(poly_.ring().with_order(MonomialOrder::negdegrevlex()));
}

std::vector<Polynomial> FunctionGerm::jacobian() const {
  const Polynomial g = local();
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < nvars(); ++i) {
    Polynomial d = g.derivative(i);
    if (!d.is_zero()) out.push_back(std::move(d));
  }
  if (out.empty()) throw DomainError("function germ is constant");
  return out;
}

Dimension milnor_number(const FunctionGerm& g) { return quotient_dimension(standard_basis(g.jacobian())); }

Dimension tjurina_number(const FunctionGerm& g) {
  auto gens = g.jacobian();
  gens.push_back(g.local());
  return quotient_dimension(standard_basis(gens));
}

unsigned briancon_skoda(const FunctionGerm& g) {
  const IdealBasis jac = standard_basis(g.jacobian());
  if (quotient_dimension(jac).is_infinite()) throw MathRefusal("non-isolated singularity: Milnor number is infinite");
  const Polynomial f = g.local();
  Polynomial power = f;
  const unsigned d = static_cast<unsigned>(g.nvars());
  for (unsigned r = 1; r <= std::max(d, 1u); ++r) {
    if (jac.contains(power)) return r;
    power = power * f;
  }
  throw InternalError("Briancon-Skoda exponent exceeds the number of variables");
}

std::optional<MapWeights> quasihomogeneous_map_weights(const std::vector<Polynomial>& components) {
  if (components.empty()) return std::nullopt;
  const std::size_t n = components.front().ring().nvars();
  const std::size_t p = components.size();
  // Unknowns: s_i = w_i - 1 >= 0 for the source, then d_j >= 0.
  RationalMatrix a;
  std::vector<Rational> b;
  for (std::size_t j = 0; j < p; ++j)
    for (const auto& t : components[j].terms()) {
      std::vector<Rational> row(n + p);
      for (std::size_t i = 0; i < n; ++i) row[i] = t.mono[i];
      row[n + j] = -1;
      a.push_back(std::move(row));
      b.push_back(-Rational(t.mono.degree()));
    }
  auto x = nonnegative_solution(a, b);
  if (!x) return std::nullopt;
  MapWeights w;
  for (std::size_t i = 0; i < n; ++i) w.source.push_back((*x)[i] + 1);
  for (std::size_t j = 0; j < p; ++j) w.degrees.push_back((*x)[n + j]);
  return w;
}

std::optional<WeightVector> quasihomogeneous_weights(const FunctionGerm& g) {
  if (g.poly().is_zero()) return std::nullopt;
  auto mw = quasihomogeneous_map_weights({g.poly()});
  if (!mw) return std::nullopt;
  const Rational degree = mw->degrees.front();
  WeightVector out;
  for (const auto& w : mw->source) out.weights.push_back(w / degree);
  return out;
}

bool is_quasihomogeneous_up_to_R(const FunctionGerm& g) {
  const IdealBasis jac = standard_basis(g.jacobian());
  if (quotient_dimension(jac).is_infinite()) throw MathRefusal("non-isolated singularity: Milnor number is infinite");
  return jac.contains(g.local());
}

FunctionGerm family_DG(int k) {
  if (k < 3) throw DomainError("DG_k needs k >= 3");
  const RingContext r({"u", "v"});
  const std::string ks = std::to_string(k);
  return FunctionGerm(parse_polynomial("u^" + std::to_string(2 * k + 1) + "+u^" + ks + "*v^" + std::to_string(k + 1) +
                                           "+v^" + std::to_string(2 * k),
                                       r));
}

FunctionGerm family_malgrange() {
  return FunctionGerm(parse_polynomial("(u*v*w)^2+u^8+v^8+w^8", RingContext({"u", "v", "w"})));
}

FunctionGerm family_Ak(int k) {
  if (k < 1) throw DomainError("A_k needs k >= 1");
  return FunctionGerm(parse_polynomial("z^" + std::to_string(k + 1), RingContext({"z"})));
}

}  // namespace germforge
