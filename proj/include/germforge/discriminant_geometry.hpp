#pragma once

#include <string>
#include <vector>

#include "germforge/germ_model.hpp"

namespace germforge {

/// Reduced defining equation of the image (n -> n+1) or discriminant (n >= p)
/// of a polynomial map-germ, in the target variables.
struct HypersurfaceEquation {
  Polynomial poly;
  MapGerm source_map;
  bool reduced = true;
  /// False when the critical locus is empty and `poly` is the constant 1.
  bool vanishing = true;

  const RingContext& ring() const { return poly.ring(); }
};

/// X1, ..., Xp, renamed away from the source variables when they clash.
std::vector<std::string> default_target_names(const MapGerm& f);

/// Eliminates the source variables from <X_i - F_i>. Throws MathRefusal when
/// the elimination ideal is not principal.
HypersurfaceEquation image_equation(const MapGerm& f, std::vector<std::string> target_names = {});

/// Eliminates the source variables from the maximal minors of the Jacobian
/// plus the graph equations.
HypersurfaceEquation discriminant_equation(const MapGerm& f, std::vector<std::string> target_names = {});

/// image_equation when p = n + 1, discriminant_equation when n >= p.
HypersurfaceEquation defining_equation(const MapGerm& f, std::vector<std::string> target_names = {});

/// Determinant by cofactor expansion along the first row.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

}  // namespace germforge
