#include <doctest.h>

#include <random>

#include "germforge/errors.hpp"
#include "germforge/parse.hpp"
#include "germforge/standard_basis.hpp"
#include "oracles.hpp"

using namespace germforge;

namespace {

std::vector<Polynomial> polys(const std::vector<std::string>& src, const RingContext& r) {
  std::vector<Polynomial> out;
  for (const auto& s : src) out.push_back(parse_polynomial(s, r));
  return out;
}

}  // namespace

TEST_CASE("global Groebner bases") {
  const RingContext r({"x", "y"});
  const IdealBasis b = standard_basis(polys({"x^2", "y^3"}, r));
  CHECK_THROWS_AS(quotient_dimension(b), DomainError);
  CHECK(b.contains(parse_polynomial("x^2*y + y^4", r)));
  CHECK_FALSE(b.contains(parse_polynomial("x*y^2", r)));
  // Twisted cubic style ideal with a known reduced basis.
  const IdealBasis c = standard_basis(polys({"x^2 - y", "x^3 - 1"}, r));
  CHECK(c.contains(parse_polynomial("y^3 - 1", r)));
  CHECK(c.reduced());
  CHECK(standard_basis(polys({"x", "x + 1"}, r)).is_unit_ideal());
  CHECK(quotient_dimension(standard_basis(polys({"x*y"}, r), MonomialOrder::negdegrevlex())).is_infinite());
}

TEST_CASE("local standard bases") {
  const RingContext r({"x", "y"}, MonomialOrder::negdegrevlex());
  // x + x^2 is x times a unit: locally the ideal is <x, y^2>.
  const IdealBasis b = standard_basis(polys({"x + x^2", "y^2"}, r));
  CHECK(quotient_dimension(b).value() == 2);
  CHECK(b.contains(parse_polynomial("x", r)));
  // A unit generates the whole local ring.
  CHECK(standard_basis(polys({"1 + x"}, r)).is_unit_ideal());
  // Globally x^2 - x^3 has two points; locally only the double point at 0.
  const RingContext g({"x"});
  CHECK_FALSE(standard_basis(polys({"x^2 - x^3"}, g)).contains(parse_polynomial("x^2", g)));
  CHECK(quotient_dimension(standard_basis(polys({"x^2 - x^3"}, g), MonomialOrder::negdegrevlex())).value() == 2);
}

TEST_CASE("local quotient dimensions agree with truncated jets") {
  std::mt19937 rng(2024);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 2;
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(n);
    const RingContext r(names, MonomialOrder::negdegrevlex());
    std::vector<Polynomial> gens;
    // Pure powers keep the ideal zero-dimensional; random terms perturb it.
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial g = Polynomial::monomial(r, Monomial::variable(i, static_cast<Exponent>(2 + rng() % 3)));
      gens.push_back(g + oracle::random_polynomial(r, rng, 2, 2, 4));
    }
    if (trial % 3 == 0) gens.push_back(oracle::random_polynomial(r, rng, 3, 2, 3));
    const Dimension d = quotient_dimension(standard_basis(gens));
    const auto jet = oracle::jet_quotient_dimension(gens, 30);
    if (!jet) continue;
    ++compared;
    REQUIRE(d.is_finite());
    CHECK(d.value() == *jet);
  }
  CHECK(compared >= 20);
}

TEST_CASE("standard monomials count the quotient") {
  const RingContext r({"x", "y"}, MonomialOrder::negdegrevlex());
  const IdealBasis b = standard_basis(polys({"x^3 + y^4", "x*y"}, r));
  CHECK(standard_monomials(b).size() == quotient_dimension(b).value());
  CHECK(quotient_dimension(b).value() == 7);
}

TEST_CASE("elimination") {
  const RingContext r({"t", "X", "Y"});
  const auto out = eliminate(polys({"X - t^2", "Y - t^3"}, r), {"t"});
  REQUIRE(out.size() == 1);
  CHECK(out[0].monic() == parse_polynomial("X^3 - Y^2", out[0].ring()).monic());
  CHECK(out[0].ring().nvars() == 2);
}

TEST_CASE("syzygies are exact") {
  const RingContext r({"x", "y", "z"});
  const std::vector<Polynomial> f = polys({"x*y", "y*z", "x*z"}, r);
  std::vector<VectorTuple> cols;
  for (const auto& p : f) cols.push_back(VectorTuple{{p}});
  for (auto output : {SyzygyOutput::StandardBasis, SyzygyOutput::Generators}) {
    for (const auto& order : {MonomialOrder::degrevlex(), MonomialOrder::negdegrevlex()}) {
      const auto syz = module_syzygies(cols, order, output);
      CHECK(syz.size() >= 2);
      for (const auto& s : syz) {
        REQUIRE(s.rank() == 3);
        Polynomial acc(s.components[0].ring());
        for (std::size_t i = 0; i < 3; ++i) acc += s.components[i] * f[i].in_ring(acc.ring());
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("dimension values") {
  CHECK(Dimension::finite(4).value() == 4);
  CHECK(Dimension::infinite().to_string() == "INFINITE");
  CHECK_THROWS_AS(Dimension::infinite().value(), MathRefusal);
}
