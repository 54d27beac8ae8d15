#include <doctest.h>

#include <functional>

#include "germforge/discriminant_geometry.hpp"
#include "germforge/errors.hpp"
#include "germforge/parse.hpp"

using namespace germforge;

namespace {

MapGerm M(const std::vector<std::string>& comps, std::vector<std::string> vars) {
  const RingContext r(std::move(vars));
  std::vector<Polynomial> c;
  for (const auto& s : comps) c.push_back(parse_polynomial(s, r));
  return MapGerm(r, std::move(c));
}

// H composed with the map.
Polynomial compose(const HypersurfaceEquation& h, const MapGerm& f) {
  std::map<std::string, Polynomial> assign;
  for (std::size_t j = 0; j < f.target_dim(); ++j) assign.emplace(h.ring().name(j), f.components()[j]);
  return substitute(h.poly, assign, f.source());
}

// Maximal minors of the Jacobian of f.
std::vector<Polynomial> critical_ideal(const MapGerm& f) {
  const std::size_t n = f.source_dim(), p = f.target_dim();
  std::vector<Polynomial> out;
  std::vector<std::size_t> cols(p);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t start) {
    if (k == p) {
      std::vector<std::vector<Polynomial>> m(p);
      for (std::size_t j = 0; j < p; ++j)
        for (std::size_t c : cols) m[j].push_back(f.components()[j].derivative(c));
      out.push_back(determinant(m));
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cols[k] = i;
      rec(k + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

TEST_CASE("image of the cusp") {
  const MapGerm f = M({"y^2", "y^3"}, {"y"});
  const HypersurfaceEquation h = image_equation(f);
  CHECK(h.poly.monic() == parse_polynomial("X2^2 - X1^3", h.ring()).monic());
  CHECK(compose(h, f).is_zero());
  CHECK(h.vanishing);
}

TEST_CASE("images of unfoldings compose to zero") {
  for (const auto& [comps, vars] : std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>{
           {{"y^2", "y^5 + l*y", "l"}, {"y", "l"}},
           {{"y^2", "y^3 + l*y", "l"}, {"y", "l"}},
           {{"y^2", "y^7 + l*y", "l"}, {"y", "l"}},
           {{"x", "y^2", "x*y^3 + x^3*y + l*y", "l"}, {"x", "y", "l"}},
           {{"x", "y^2", "y^3 + x^2*y + l*y", "l"}, {"x", "y", "l"}},
           {{"x", "y^2", "y^5 + x^3*y + l*y", "l"}, {"x", "y", "l"}}}) {
    const MapGerm f = M(comps, vars);
    const HypersurfaceEquation h = image_equation(f);
    CAPTURE(f.to_string());
    CHECK(compose(h, f).is_zero());
    CHECK(is_squarefree(h.poly));
  }
  // The defining equation of (y^2, y^5 + l*y, l) is Y^2 = X(X^2 + L)^2 up to scale.
  const MapGerm f = M({"y^2", "y^5 + l*y", "l"}, {"y", "l"});
  const HypersurfaceEquation h = image_equation(f, {"X", "Y", "L"});
  CHECK(h.poly.monic() == parse_polynomial("Y^2 - X*(X^2 + L)^2", h.ring()).monic());
}

TEST_CASE("cusp discriminant") {
  const MapGerm f = M({"x", "l^3 + x*l"}, {"x", "l"});
  const HypersurfaceEquation h = discriminant_equation(f, {"X", "Y"});
  CHECK(h.poly.monic() == parse_polynomial("4*X^3 + 27*Y^2", h.ring()).monic());
  // The critical parametrization x = -3t^2, y = -2t^3 lands on it.
  const RingContext t({"t"});
  std::map<std::string, Polynomial> at{{"X", parse_polynomial("-3*t^2", t)}, {"Y", parse_polynomial("-2*t^3", t)}};
  CHECK(substitute(h.poly, at, t).is_zero());
}

TEST_CASE("discriminants vanish on the critical locus") {
  for (const auto& [comps, vars] : std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>{
           {{"x", "y^4 + x*y^2 + x^2*y + l*y", "l"}, {"x", "y", "l"}},
           {{"x", "y^3 + x*y"}, {"x", "y"}},
           {{"x", "y", "z^4 + x*z + y*z^2"}, {"x", "y", "z"}}}) {
    const MapGerm f = M(comps, vars);
    const HypersurfaceEquation h = discriminant_equation(f);
    const IdealBasis crit = standard_basis(critical_ideal(f));
    CAPTURE(f.to_string());
    CHECK(crit.contains(compose(h, f)));
  }
}

TEST_CASE("refusals and degenerate cases") {
  // A line in 3-space is not a hypersurface.
  CHECK_THROWS_AS(image_equation(M({"x", "0", "0"}, {"x", "y"})), MathRefusal);
  CHECK_THROWS_AS(image_equation(M({"x", "y"}, {"x", "y"})), DomainError);
  // The identity has no critical points.
  const HypersurfaceEquation id = discriminant_equation(M({"x"}, {"x"}));
  CHECK_FALSE(id.vanishing);
  CHECK(id.poly.is_constant());
}

TEST_CASE("source variable order changes H by a constant") {
  const MapGerm a = M({"x", "y^4 + x*y^2 + x^2*y + l*y", "l"}, {"x", "y", "l"});
  const MapGerm b = M({"x", "y^4 + x*y^2 + x^2*y + l*y", "l"}, {"l", "y", "x"});
  const HypersurfaceEquation ha = discriminant_equation(a, {"X", "Y", "L"});
  const HypersurfaceEquation hb = discriminant_equation(b, {"X", "Y", "L"});
  CHECK(ha.poly.monic() == hb.poly.monic());
}

TEST_CASE("determinants") {
  const RingContext r({"a", "b"});
  const Polynomial a = parse_polynomial("a", r), b = parse_polynomial("b", r);
  CHECK(determinant({{a, b}, {b, a}}) == a * a - b * b);
  CHECK_THROWS_AS(determinant({{a, b}}), DomainError);
}
