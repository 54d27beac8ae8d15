#include <doctest.h>

#include "germforge/errors.hpp"
#include "germforge/germ_model.hpp"
#include "germforge/parse.hpp"

using namespace germforge;

namespace {

MapGerm M(const std::vector<std::string>& comps, std::vector<std::string> vars) {
  const RingContext r(std::move(vars));
  std::vector<Polynomial> c;
  for (const auto& s : comps) c.push_back(parse_polynomial(s, r));
  return MapGerm(r, std::move(c));
}

FunctionGerm G(const std::string& s, std::vector<std::string> vars) {
  return FunctionGerm(parse_polynomial(s, RingContext(std::move(vars))));
}

// Sets every listed variable to zero and drops it from the ring.
MapGerm restrict_to_zero(const MapGerm& f, const std::vector<std::string>& zero, std::size_t drop_tail) {
  std::vector<std::string> keep;
  for (const auto& n : f.source().names())
    if (std::find(zero.begin(), zero.end(), n) == zero.end()) keep.push_back(n);
  const RingContext r(keep);
  std::map<std::string, Polynomial> assign;
  for (const auto& n : f.source().names())
    assign.emplace(n, std::find(zero.begin(), zero.end(), n) == zero.end() ? Polynomial::variable(r, n)
                                                                            : Polynomial(r));
  std::vector<Polynomial> c;
  for (std::size_t j = 0; j + drop_tail < f.components().size(); ++j)
    c.push_back(substitute(f.components()[j], assign, r));
  return MapGerm(r, std::move(c));
}

}  // namespace

TEST_CASE("map-germ and unfolding invariants") {
  CHECK_THROWS_AS(M({"y^2 + 1"}, {"y"}), DomainError);
  CHECK_THROWS_AS(OnePSU(M({"y^2", "y^3"}, {"y", "l"})), DomainError);
  const OnePSU f(M({"y^2", "y^5 + l*y", "l"}, {"y", "l"}));
  CHECK(f.parameter() == "l");
  CHECK(f.base() == M({"y^2", "y^5"}, {"y"}));
  CHECK_FALSE(f.stability_verified());
  CHECK(f.unfolding().to_string() == "(y^2, y^5+y*l, l)");
}

TEST_CASE("augmentation") {
  const OnePSU f(M({"y^2", "y^5 + l*y", "l"}, {"y", "l"}));
  // F_4 up to the order of the target components.
  CHECK(augment(f, G("x^3", {"x"})) == M({"y^2", "y^5 + x^3*y", "x"}, {"y", "x"}));
  const OnePSU s(M({"y^2", "y^3 + l*y", "l"}, {"y", "l"}));
  CHECK(augment(s, G("x^4", {"x"})) == M({"y^2", "y^3 + x^4*y", "x"}, {"y", "x"}));
  // A smooth augmenting function just renames the parameter.
  CHECK(augment(f, G("z", {"z"})) == M({"y^2", "y^5 + z*y", "z"}, {"y", "z"}));
  CHECK_THROWS_AS(augment(f, G("y^3", {"y"})), DomainError);
}

TEST_CASE("augmentation at z = 0 recovers the base germ") {
  const OnePSU f(M({"x", "y^4 + x*y^2 + x^2*y + l*y", "l"}, {"x", "y", "l"}));
  const MapGerm a = augment(f, G("u^7 + u^3*v^4 + v^6", {"u", "v"}));
  CHECK(restrict_to_zero(a, {"u", "v"}, 2) == f.base());
}

TEST_CASE("natural unfolding of an augmentation") {
  const OnePSU f(M({"y^2", "y^5 + l*y", "l"}, {"y", "l"}));
  const FunctionGerm g = G("x^3", {"x"});
  const OnePSU n = natural_opsu(f, g);
  CHECK(n.unfolding() == M({"y^2", "y^5 + (x^3 + l)*y", "x", "l"}, {"y", "x", "l"}));
  CHECK(n.base() == augment(f, g));
  const OnePSU c(M({"y^2", "y^3 + l*y", "l"}, {"y", "l"}));
  CHECK(natural_opsu(c, G("x^2", {"x"})).base() == augment(c, G("x^2", {"x"})));
  // g = 0 appends a trivial factor.
  CHECK(natural_opsu(f, G("0", {"z"})).unfolding() == M({"y^2", "y^5 + l*y", "z", "l"}, {"y", "z", "l"}));
}

TEST_CASE("normal form of an unfolding") {
  const MapGerm f = M({"y^2", "y^5"}, {"y"});
  const RingContext y({"y"});
  const VectorTuple gamma{{Polynomial(y), Polynomial::variable(y, "y")}};
  const RingContext s({"X1", "X2"});
  const RingContext q({"l"});
  CHECK(normal_form_opsu(f, gamma, {}, {}).unfolding() == M({"y^2", "y^5 + l*y", "l"}, {"y", "l"}));
  CHECK(normal_form_opsu(f, gamma, {parse_polynomial("X1", s)}, {parse_polynomial("1", q)}).unfolding() ==
        M({"y^2", "y^5 + (1 + y^2)*l*y", "l"}, {"y", "l"}));
  CHECK(normal_form_opsu(f, gamma, {parse_polynomial("X1", s)}, {parse_polynomial("l", q)}).unfolding() ==
        M({"y^2", "y^5 + (1 + l*y^2)*l*y", "l"}, {"y", "l"}));
  CHECK_THROWS_AS(normal_form_opsu(f, gamma, {parse_polynomial("X1", s)}, {}), DomainError);
}

TEST_CASE("plane curves") {
  const auto cusp = plane_curve_report(G("y^2 - x^3", {"x", "y"}));
  CHECK(cusp.mu == 2);
  CHECK(cusp.tau == 2);
  CHECK(cusp.delta == 1);
  CHECK(cusp.image_milnor == 1);
  CHECK(cusp.aecod == 1);
  CHECK(cusp.quotient == 1);
  const auto e6 = plane_curve_report(G("x^3 + y^4", {"x", "y"}));
  CHECK(e6.mu == 6);
  CHECK(e6.delta == 3);
  CHECK(e6.quotient == 1);
  // The node has tau = delta, so its parametrization is stable.
  CHECK_THROWS_AS(plane_curve_report(G("x*y", {"x", "y"}), 2), MathRefusal);
  const auto tacnode = plane_curve_report(G("y^2 - x^4", {"x", "y"}), 2);
  CHECK(tacnode.delta == 2);
  CHECK(tacnode.aecod == 1);
  CHECK_THROWS_AS(plane_curve_report(G("y^2 - x^3", {"x", "y"}), 2), DomainError);
  CHECK_THROWS_AS(plane_curve_report(G("x^2", {"x"})), DomainError);
}

TEST_CASE("field equations of plane-curve reports") {
  for (const char* s : {"y^2 - x^5", "x^3 + y^7", "x^4 + y^5", "u^7 + u^3*v^4 + v^6"}) {
    const std::string text(s);
    const std::vector<std::string> vars = text[0] == 'u' ? std::vector<std::string>{"u", "v"}
                                                         : std::vector<std::string>{"x", "y"};
    const auto r = plane_curve_report(G(s, vars));
    CHECK(r.mu == 2 * r.delta - r.branches + 1);
    CHECK(r.image_milnor == r.mu - r.delta);
    CHECK(r.aecod == r.tau - r.delta);
    Rational q(static_cast<long>(r.image_milnor), static_cast<long>(r.aecod));
    q.canonicalize();
    CHECK(r.quotient == q);
    CHECK(r.quotient < 2);
  }
}

TEST_CASE("quotient bound arithmetic for augmentations") {
  const auto three = conjecture2_bound(3);
  CHECK(three.values == std::vector<std::pair<unsigned, unsigned long>>{{1, 4}, {2, 3}});
  CHECK(three.max == 4);
  CHECK(three.bound == 4);
  CHECK(three.attained);
  const auto two = conjecture2_bound(2);
  CHECK(two.max == 2);
  CHECK(two.bound == Rational(9, 4));
  CHECK_FALSE(two.attained);
  CHECK(conjecture2_bound(5).max == 9);
  CHECK_THROWS_AS(conjecture2_bound(1), DomainError);
}
