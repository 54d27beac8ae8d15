#include <doctest.h>

#include <random>

#include "germforge/errors.hpp"
#include "germforge/function_invariants.hpp"
#include "germforge/parse.hpp"
#include "oracles.hpp"

using namespace germforge;

namespace {

FunctionGerm G(const std::string& s, std::vector<std::string> vars) {
  return FunctionGerm(parse_polynomial(s, RingContext(std::move(vars))));
}

std::vector<Polynomial> tjurina_generators(const FunctionGerm& g) {
  std::vector<Polynomial> gens = g.jacobian();
  gens.push_back(g.local());
  return gens;
}

}  // namespace

TEST_CASE("simple singularities") {
  for (int k = 1; k <= 6; ++k) {
    const FunctionGerm a = family_Ak(k);
    CHECK(milnor_number(a).value() == static_cast<std::size_t>(k));
    CHECK(tjurina_number(a).value() == static_cast<std::size_t>(k));
    CHECK(briancon_skoda(a) == 1);
  }
  const FunctionGerm e6 = G("x^3 + y^4", {"x", "y"});
  CHECK(milnor_number(e6).value() == 6);
  CHECK(tjurina_number(e6).value() == 6);
  const FunctionGerm d4 = G("x^2*y + y^3", {"x", "y"});
  CHECK(milnor_number(d4).value() == 4);
}

TEST_CASE("Dimca-Greuel DG_3") {
  const FunctionGerm g = family_DG(3);
  CHECK(milnor_number(g).value() == 30);
  CHECK(tjurina_number(g).value() == 27);
  CHECK(briancon_skoda(g) == 2);
  CHECK_FALSE(is_quasihomogeneous_up_to_R(g));
  CHECK_FALSE(quasihomogeneous_weights(g).has_value());
  CHECK_THROWS_AS(family_DG(2), DomainError);
}

TEST_CASE("non-quasihomogeneous curve with mu > tau") {
  // x^5 + y^5 + x^2*y^2: mu 11, tau 10.
  const FunctionGerm g = G("x^5 + y^5 + x^2*y^2", {"x", "y"});
  CHECK(milnor_number(g).value() == 11);
  CHECK(tjurina_number(g).value() == 10);
  CHECK(milnor_number(g).value() == *oracle::jet_quotient_dimension(g.jacobian()));
  CHECK(tjurina_number(g).value() == *oracle::jet_quotient_dimension(tjurina_generators(g)));
}

TEST_CASE("weights") {
  const auto w = quasihomogeneous_weights(G("x^3 + x*y^2", {"x", "y"}));
  REQUIRE(w.has_value());
  CHECK(w->weights[0] == Rational(1, 3));
  CHECK(w->weights[1] == Rational(1, 3));
  const auto e = quasihomogeneous_weights(G("x^2*y + y^4", {"x", "y"}));
  REQUIRE(e.has_value());
  CHECK(e->weights[1] == Rational(1, 4));
  CHECK(e->weights[0] == Rational(3, 8));
  // R-equivalent to a quasi-homogeneous germ without being one in these coordinates.
  const FunctionGerm shifted = G("x^2 + y^3 + x*y^3", {"x", "y"});
  CHECK_FALSE(quasihomogeneous_weights(shifted).has_value());
  CHECK(is_quasihomogeneous_up_to_R(shifted));
}

TEST_CASE("map weights") {
  const RingContext r({"y", "l"});
  const auto w = quasihomogeneous_map_weights(
      {parse_polynomial("y^2", r), parse_polynomial("y^5 + l*y", r), parse_polynomial("l", r)});
  REQUIRE(w.has_value());
  CHECK(w->source[1] == 4 * w->source[0]);
  CHECK_FALSE(quasihomogeneous_map_weights({parse_polynomial("y^2 + y^3", r)}).has_value());
}

TEST_CASE("non-isolated singularities are refused") {
  const FunctionGerm g = G("x^2", {"x", "y"});
  CHECK(milnor_number(g).is_infinite());
  CHECK_THROWS_AS(briancon_skoda(g), MathRefusal);
}

TEST_CASE("random functions satisfy mu >= tau, mu <= d tau, BS <= d and match the jet oracle") {
  std::mt19937 rng(99);
  int accepted = 0;
  for (int trial = 0; accepted < 20 && trial < 200; ++trial) {
    const std::size_t d = 2 + trial % 2;
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(d);
    const RingContext r(names);
    Polynomial p(r);
    for (std::size_t i = 0; i < d; ++i)
      p += Polynomial::monomial(r, Monomial::variable(i, static_cast<Exponent>(2 + rng() % 4)));
    p += oracle::random_polynomial(r, rng, 3, 3, 5);
    const FunctionGerm g(p);
    const Dimension mu = milnor_number(g);
    if (mu.is_infinite() || mu.value() > 30) continue;
    ++accepted;
    const std::size_t tau = tjurina_number(g).value();
    const unsigned bs = briancon_skoda(g);
    CAPTURE(p.to_string());
    CHECK(mu.value() >= tau);
    CHECK(mu.value() <= d * tau);
    CHECK(bs >= 1);
    CHECK(bs <= d);
    CHECK((mu.value() == tau) == is_quasihomogeneous_up_to_R(g));
    CHECK(mu.value() == *oracle::jet_quotient_dimension(g.jacobian()));
    CHECK(tau == *oracle::jet_quotient_dimension(tjurina_generators(g)));
  }
  CHECK(accepted == 20);
}
