#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germforge/discriminant_geometry.hpp"

namespace germforge {

/// Generators of the vector fields tangent to {H = 0}, with eta(H) = a * H.
struct DerlogModule {
  HypersurfaceEquation divisor;
  std::vector<VectorTuple> generators;
  std::vector<Polynomial> cofactors;
};

/// Where the generators are meant to generate the module.
enum class DerlogScope { Local, Global };

/// Syzygies of (dH/dX_1, ..., dH/dX_m, -H). Local scope gives polynomial
/// fields generating the module of germs at 0 and is far cheaper; global scope
/// generates the module over the polynomial ring. Each generator is checked
/// against its tangency identity.
DerlogModule derlog(const HypersurfaceEquation& h, DerlogScope scope = DerlogScope::Local);

/// The ideal of last components of the liftable fields of an unfolding, in the
/// target variables X1..Xp, L (L last) with the local order.
struct LiftIdeal {
  DerlogModule derlog;
  IdealBasis ideal;

  const RingContext& ring() const { return ideal.ring(); }
  std::size_t parameter_index() const { return ring().nvars() - 1; }
  Polynomial parameter() const { return Polynomial::variable(ring(), parameter_index()); }
};

/// Target names for an unfolding: X1..Xp for f, then L for the parameter
/// (renamed away from clashes with the source variables).
std::vector<std::string> unfolding_target_names(const OnePSU& unfolding);

LiftIdeal lift_ideal(const OnePSU& unfolding);

/// delta(F): least m <= bound with L^m in the lift ideal.
struct SubstantialityDegree {
  std::optional<unsigned> value;
  /// Search bound used; when value is empty, delta > bound.
  unsigned bound = 0;
  /// Exponent of the smallest pure power of L among the leading monomials of
  /// the lift ideal. Always a lower bound for delta; absent means no power of
  /// L lies in the ideal at all.
  std::optional<unsigned> leading_power;

  bool is_infinite() const { return !value && !leading_power; }
  /// "2", ">=33" or "INFINITE".
  std::string to_string() const;
};

/// Default search bound, overridable through GERMFORGE_BOUND.
unsigned default_substantiality_bound();

SubstantialityDegree substantiality_degree(const LiftIdeal& lift, unsigned bound = default_substantiality_bound());
SubstantialityDegree substantiality_degree(const OnePSU& unfolding,
                                           unsigned bound = default_substantiality_bound());

/// X_p (the last non-parameter target variable) lies in the lift ideal.
bool is_cross_substantial(const LiftIdeal& lift);
bool is_cross_substantial(const OnePSU& unfolding);

/// A liftable field whose last component is unit * X_p.
struct CrossWitness {
  /// Coefficients c_i on the Derlog generators.
  std::vector<Polynomial> coefficients;
  /// Unit u (nonzero at 0) with sum_i c_i eta_i having last component u * X_p.
  Polynomial unit;
  VectorTuple field;
};

/// nullopt when the unfolding is not cross-substantial. The returned field is
/// checked exactly.
std::optional<CrossWitness> cross_substantiality_witness(const LiftIdeal& lift);

/// X_p in the local ideal generated by dH/dX_1, ..., dH/dX_p (the parameter is
/// the last variable of H's ring).
bool jxh_test(const HypersurfaceEquation& h);

/// Rank over Q of the Derlog generators of the defining equation of t,
/// evaluated at 0.
std::size_t isosingular_dimension(const MapGerm& t);

/// isosingular_dimension(t) >= p - s.
bool augmentation_certificate(const MapGerm& t, std::size_t p, std::size_t s);

}  // namespace germforge
