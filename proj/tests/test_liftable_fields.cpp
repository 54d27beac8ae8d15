#include <doctest.h>

#include "germforge/discriminant_geometry.hpp"
#include "germforge/errors.hpp"
#include "germforge/liftable_fields.hpp"
#include "germforge/parse.hpp"

using namespace germforge;

namespace {

MapGerm M(const std::vector<std::string>& comps, std::vector<std::string> vars) {
  const RingContext r(std::move(vars));
  std::vector<Polynomial> c;
  for (const auto& s : comps) c.push_back(parse_polynomial(s, r));
  return MapGerm(r, std::move(c));
}

OnePSU U(const std::vector<std::string>& comps, std::vector<std::string> vars) { return OnePSU(M(comps, std::move(vars))); }

HypersurfaceEquation divisor(const std::string& h, std::vector<std::string> vars) {
  const RingContext r(std::move(vars));
  const Polynomial p = parse_polynomial(h, r);
  std::vector<Polynomial> id;
  for (std::size_t i = 0; i < r.nvars(); ++i) id.push_back(Polynomial::variable(r, i));
  return HypersurfaceEquation{p, MapGerm(r, id), true, true};
}

// eta(H) - a H, computed independently of the module code.
bool tangent(const DerlogModule& d) {
  const Polynomial& h = d.divisor.poly;
  for (std::size_t k = 0; k < d.generators.size(); ++k) {
    const auto& eta = d.generators[k].components;
    const RingContext& r = eta.front().ring();
    const Polynomial hr = h.in_ring(r);
    Polynomial acc(r);
    for (std::size_t i = 0; i < eta.size(); ++i) acc += eta[i] * hr.derivative(i);
    if (acc != d.cofactors[k].in_ring(r) * hr) return false;
  }
  return true;
}

bool has_constant_multiple(const DerlogModule& d, const std::vector<std::string>& field) {
  const RingContext& r = d.generators.front().components.front().ring();
  for (const auto& g : d.generators) {
    std::optional<Rational> ratio;
    bool ok = true;
    for (std::size_t i = 0; i < field.size() && ok; ++i) {
      const Polynomial want = parse_polynomial(field[i], r);
      const Polynomial& have = g.components[i];
      if (want.is_zero() || have.is_zero()) {
        ok = want.is_zero() && have.is_zero();
        continue;
      }
      const Rational q = have.leading_coefficient() / want.leading_coefficient();
      ok = have == want * q && (!ratio || *ratio == q);
      ratio = q;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("Derlog of the cusp contains the Euler field") {
  for (auto scope : {DerlogScope::Local, DerlogScope::Global}) {
    const DerlogModule d = derlog(divisor("Y^2 - X^3", {"X", "Y"}), scope);
    CHECK(tangent(d));
    CHECK(has_constant_multiple(d, {"2*X", "3*Y"}));
    CHECK(d.generators.size() == 2);
  }
}

TEST_CASE("Derlog of a smooth divisor") {
  const DerlogModule d = derlog(divisor("X", {"X", "Y", "Z"}), DerlogScope::Global);
  CHECK(tangent(d));
  CHECK(has_constant_multiple(d, {"X", "0", "0"}));
  CHECK(has_constant_multiple(d, {"0", "1", "0"}));
  CHECK(has_constant_multiple(d, {"0", "0", "1"}));
}

TEST_CASE("Derlog generators of catalog discriminants are tangent") {
  for (const auto& f : {U({"x", "y^4 + x*y^2 + x^2*y + l*y", "l"}, {"x", "y", "l"}),
                        U({"y^2", "y^5 + l*y", "l"}, {"y", "l"}),
                        U({"x", "y^2", "x*y^3 + x^3*y + l*y", "l"}, {"x", "y", "l"})}) {
    const DerlogModule d = derlog(defining_equation(f.unfolding()));
    CAPTURE(f.unfolding().to_string());
    CHECK(tangent(d));
    CHECK(d.generators.size() >= f.unfolding().target_dim());
  }
}

TEST_CASE("lift ideals and substantiality") {
  const OnePSU cusp = U({"y^2", "y^3 + l*y", "l"}, {"y", "l"});
  const LiftIdeal lc = lift_ideal(cusp);
  CHECK(lc.ideal.contains(lc.parameter()));
  CHECK(substantiality_degree(lc).value == 1u);

  const OnePSU f2 = U({"y^2", "y^5 + l*y", "l"}, {"y", "l"});
  CHECK(substantiality_degree(f2).value == 1u);
  CHECK(is_cross_substantial(f2));
  CHECK(jxh_test(lift_ideal(f2).derlog.divisor));

  const OnePSU r115 = U({"x", "y^4 + x*y^2 + x^2*y + l*y", "l"}, {"x", "y", "l"});
  const LiftIdeal l115 = lift_ideal(r115);
  CHECK_FALSE(l115.ideal.contains(l115.parameter()));
  CHECK(l115.ideal.contains(l115.parameter().pow(2)));
  const SubstantialityDegree d = substantiality_degree(l115);
  CHECK(d.value == 2u);
  CHECK(d.to_string() == "2");
  REQUIRE(d.leading_power.has_value());
  CHECK(*d.leading_power <= 2u);
  CHECK_FALSE(is_cross_substantial(l115));
  CHECK_FALSE(jxh_test(l115.derlog.divisor));
  CHECK_FALSE(cross_substantiality_witness(l115).has_value());
}

TEST_CASE("a search bound below delta reports a lower bound") {
  const LiftIdeal l = lift_ideal(U({"x", "y^4 + x*y^2 + x^2*y + l*y", "l"}, {"x", "y", "l"}));
  const SubstantialityDegree d = substantiality_degree(l, 1);
  CHECK_FALSE(d.value.has_value());
  CHECK_FALSE(d.is_infinite());
  CHECK(d.to_string() == ">=2");
}

TEST_CASE("cross-substantiality witness") {
  const LiftIdeal l = lift_ideal(U({"y^2", "y^5 + l*y", "l"}, {"y", "l"}));
  const auto w = cross_substantiality_witness(l);
  REQUIRE(w.has_value());
  CHECK(w->unit.constant_term() != 0);
  const auto& last = w->field.components.back();
  CHECK(last == w->unit * Polynomial::variable(last.ring(), l.ring().nvars() - 2));
}

TEST_CASE("jxh with a unit partial") {
  CHECK(jxh_test(divisor("L^2 - X", {"X", "L"})));
}

TEST_CASE("isosingular loci of trivializers") {
  const MapGerm edge = M({"X^3 + X*Y", "Y", "Z"}, {"X", "Y", "Z"});
  const MapGerm t1 = M({"Y1", "Y2", "X^3 + X*Y1 + Z^3", "X"}, {"X", "Y1", "Y2", "Z"});
  const MapGerm t2 = M({"Y1", "Y2", "X^3 + X*Y1 + Z^3"}, {"X", "Y1", "Y2", "Z"});
  CHECK(isosingular_dimension(edge) == 1);
  CHECK(isosingular_dimension(t1) == 3);
  CHECK(isosingular_dimension(t2) == 1);
  CHECK_FALSE(augmentation_certificate(edge, 3, 1));
  CHECK(augmentation_certificate(t1, 4, 1));
  CHECK_FALSE(augmentation_certificate(t2, 4, 2));
}
