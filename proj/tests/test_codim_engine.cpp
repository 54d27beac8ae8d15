#include <doctest.h>

#include "germforge/catalog.hpp"
#include "germforge/codim_engine.hpp"
#include "germforge/errors.hpp"
#include "germforge/parse.hpp"
#include "germforge/report.hpp"

using namespace germforge;

namespace {

FunctionGerm G(const std::string& s, std::vector<std::string> vars) {
  return FunctionGerm(parse_polynomial(s, RingContext(std::move(vars))));
}

OnePSU opsu(const std::string& label) { return catalog_entry(label).spec.unfolding(); }

}  // namespace

TEST_CASE("codimensions of catalog germs") {
  for (const char* label : {"f_1", "f_2", "f_3", "11_5", "C_3", "S_2", "S_3", "F_4", "F_6"}) {
    const CatalogEntry& e = catalog_entry(label);
    CAPTURE(label);
    REQUIRE(e.aecod.has_value());
    CHECK(aecod_damon(e.spec.unfolding()).value() == *e.aecod);
  }
}

TEST_CASE("augmenting by a submersion gives the stable unfolding") {
  const OnePSU f = opsu("11_5");
  CHECK(augmentation_codim(f, G("z", {"z"})).value() == 0);
}

TEST_CASE("augmentations by cubes") {
  // 11_5 and 5_2 augmented by a cube both have codimension 4.
  CHECK(augmentation_codim(opsu("11_5"), G("z^3", {"z"})).value() == 4);
  CHECK(augmentation_codim(opsu("5_2"), G("t^3", {"t"})).value() == 4);
  // (y^2, y^5) by z^3 and z^4: F_4 and F_6.
  CHECK(augmentation_codim(opsu("f_2"), G("z^3", {"z"})).value() == 4);
  CHECK(augmentation_codim(opsu("f_2"), G("z^4", {"z"})).value() == 6);
}

TEST_CASE("bounds inequalities and the equality criterion") {
  const UnfoldingData f = analyze_unfolding(opsu("11_5"));
  CHECK(f.aecod.value() == 2);
  CHECK(f.delta.value == 2u);
  for (const auto& [poly, vars] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"u^2", {"u"}},
           {"u^3", {"u"}},
           {"u^2 + v^2", {"u", "v"}},
           {"u^5 + v^5 + u^2*v^2", {"u", "v"}},
           {"u^7 + u^3*v^4 + v^6", {"u", "v"}}}) {
    const FunctionGerm g = G(poly, vars);
    const BoundsReport r = bounds_report(f, g, poly);
    CAPTURE(poly);
    CHECK(r.lower <= r.codim_aug);
    CHECK(r.codim_aug <= r.upper);
    CHECK(r.lower_equality == (r.mu_g == r.tau_g || r.f_substantial));
    CHECK(r.refined == r.lower + r.mu_g - r.tau_g);
  }
}

TEST_CASE("Morse augmentations collapse the bounds") {
  for (const char* label : {"11_5", "5_2", "P_3^2"}) {
    const UnfoldingData f = analyze_unfolding(opsu(label));
    for (const auto& g : {G("z^2", {"z"}), G("z^2 + t^2", {"z", "t"})}) {
      const BoundsReport r = bounds_report(f, g);
      CAPTURE(label);
      CHECK(r.lower == r.codim_aug);
      CHECK(r.codim_aug == r.upper);
      CHECK(r.codim_aug == f.aecod.value());
    }
  }
}

TEST_CASE("Mond inequality for augmentations of the cusp family") {
  // The image Milnor number of (y^2, y^(2k+1)) is k.
  const MondCheck c = mond_inequality_check(opsu("f_2"), G("z^3", {"z"}), 2);
  CHECK(c.lhs == 4);
  CHECK(c.rhs == 4);
  CHECK(c.holds);
}

TEST_CASE("non-isolated augmenting functions are refused") {
  const FunctionGerm g = G("u^2*v", {"u", "v"});
  CHECK_THROWS_AS(bounds_report(opsu("f_1"), g), MathRefusal);
}

TEST_CASE("function data") {
  const FunctionData d = analyze_function(family_malgrange());
  CHECK(d.mu == 215);
  CHECK(d.tau == 179);
  CHECK(d.bs == 3);
}
