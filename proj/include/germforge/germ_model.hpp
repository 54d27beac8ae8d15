#pragma once

#include <string>
#include <vector>

#include "germforge/function_invariants.hpp"
#include "germforge/polynomial.hpp"
#include "germforge/standard_basis.hpp"

namespace germforge {

/// Polynomial map-germ (k^n, 0) -> (k^p, 0).
class MapGerm {
 public:
  /// Every component must live in `source` and vanish at the origin.
  MapGerm(RingContext source, std::vector<Polynomial> components);

  const RingContext& source() const { return source_; }
  const std::vector<Polynomial>& components() const { return components_; }
  std::size_t source_dim() const { return source_.nvars(); }
  std::size_t target_dim() const { return components_.size(); }

  /// "(y^2, y^5+l*y, l)".
  std::string to_string() const;

  bool operator==(const MapGerm& o) const { return source_ == o.source_ && components_ == o.components_; }

 private:
  RingContext source_;
  std::vector<Polynomial> components_;
};

/// F(x, l) = (f_l(x), l): the parameter is the last source variable and the
/// last component is exactly that variable. Stability is trusted, not checked.
class OnePSU {
 public:
  explicit OnePSU(MapGerm unfolding);

  const MapGerm& unfolding() const { return unfolding_; }
  const std::string& parameter() const { return unfolding_.source().names().back(); }
  /// The germ f = f_0 on the non-parameter variables.
  MapGerm base() const;
  /// Always false: no stability test is performed.
  bool stability_verified() const { return false; }

 private:
  MapGerm unfolding_;
};

/// (f_{g(z)}(x), z): unfolded components with l -> g(z), then z.
MapGerm augment(const OnePSU& unfolding, const FunctionGerm& g);

/// (f_{g(z)+l'}(x), z, l') with a fresh parameter l'.
OnePSU natural_opsu(const OnePSU& unfolding, const FunctionGerm& g);

/// (f + (1 + sum_i q_i(l) s_i(f)) l gamma, l). `s` lives in a ring with one
/// variable per component of f; `q` in a one-variable ring whose variable
/// names the parameter (defaults to "l" when q is empty).
OnePSU normal_form_opsu(const MapGerm& f, const VectorTuple& gamma, const std::vector<Polynomial>& s,
                        const std::vector<Polynomial>& q, const std::string& parameter = "l");

struct PlaneCurveReport {
  std::size_t mu = 0;
  std::size_t tau = 0;
  std::size_t branches = 1;
  std::size_t delta = 0;
  std::size_t image_milnor = 0;
  std::size_t aecod = 0;
  Rational quotient;
};

/// Plane curve g(x, y) = 0 with `branches` branches: delta from
/// mu = 2 delta - r + 1, image Milnor number mu - delta, codimension tau - delta.
PlaneCurveReport plane_curve_report(const FunctionGerm& g, std::size_t branches = 1);

struct Conjecture2Bound {
  unsigned n = 0;
  /// (k, (k+1)(n-k)) for 1 <= k <= n-1.
  std::vector<std::pair<unsigned, unsigned long>> values;
  unsigned long max = 0;
  Rational bound;  // (n+1)^2 / 4
  bool attained = false;
};

Conjecture2Bound conjecture2_bound(unsigned n);

}  // namespace germforge
