#pragma once

#include <optional>
#include <vector>

#include "germforge/polynomial.hpp"
#include "germforge/standard_basis.hpp"

namespace germforge {

/// A function germ g: (k^d, 0) -> (k, 0) given by a polynomial with zero
/// constant term.
class FunctionGerm {
 public:
  explicit FunctionGerm(Polynomial poly);

  const Polynomial& poly() const { return poly_; }
  const RingContext& ring() const { return poly_.ring(); }
  std::size_t nvars() const { return poly_.ring().nvars(); }

  /// The polynomial over the same variables with the local order.
  Polynomial local() const;
  /// Nonzero partial derivatives, over the local ring.
  std::vector<Polynomial> jacobian() const;

 private:
  Polynomial poly_;
};

/// Positive weights making every monomial of weighted degree 1.
struct WeightVector {
  std::vector<Rational> weights;
};

Dimension milnor_number(const FunctionGerm& g);
Dimension tjurina_number(const FunctionGerm& g);

/// Least r >= 1 with g^r in Jg. Throws MathRefusal for non-isolated
/// singularities.
unsigned briancon_skoda(const FunctionGerm& g);

/// Weights in the given coordinates, or nullopt.
std::optional<WeightVector> quasihomogeneous_weights(const FunctionGerm& g);

/// mu(g) == tau(g), i.e. g lies in its Jacobian ideal.
bool is_quasihomogeneous_up_to_R(const FunctionGerm& g);

/// Positive source weights w and component degrees d with every monomial of
/// component j of weighted degree d_j. Components that vanish identically get
/// degree 0. Returns nullopt when no such weights exist.
struct MapWeights {
  std::vector<Rational> source;
  std::vector<Rational> degrees;
};
std::optional<MapWeights> quasihomogeneous_map_weights(const std::vector<Polynomial>& components);

/// u^{2k+1} + u^k v^{k+1} + v^{2k} over (u, v); k >= 3.
FunctionGerm family_DG(int k);
/// (uvw)^2 + u^8 + v^8 + w^8 over (u, v, w).
FunctionGerm family_malgrange();
/// z^{k+1} over (z); k >= 1.
FunctionGerm family_Ak(int k);

}  // namespace germforge
