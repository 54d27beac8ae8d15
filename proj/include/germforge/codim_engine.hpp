#pragma once

#include <string>

#include "germforge/liftable_fields.hpp"

namespace germforge {

/// dim O/(lift ideal + <L>): the A_e-codimension of the base germ.
Dimension aecod_damon(const LiftIdeal& lift);
Dimension aecod_damon(const OnePSU& unfolding);

/// dim O/(lift ideal + <L - g> + Jg), with L eliminated by substituting g.
Dimension augmentation_codim(const LiftIdeal& lift, const FunctionGerm& g);
Dimension augmentation_codim(const OnePSU& unfolding, const FunctionGerm& g);

/// Everything the bounds theorem needs about one unfolding, computed once.
struct UnfoldingData {
  LiftIdeal lift;
  Dimension aecod;
  SubstantialityDegree delta;
};
UnfoldingData analyze_unfolding(const OnePSU& unfolding, unsigned bound = default_substantiality_bound());

struct FunctionData {
  std::size_t mu = 0;
  std::size_t tau = 0;
  unsigned bs = 0;
};
/// Throws MathRefusal for non-isolated singularities.
FunctionData analyze_function(const FunctionGerm& g);

struct BoundsReport {
  std::string label;
  std::size_t aecod_f = 0;
  std::size_t tau_g = 0;
  std::size_t mu_g = 0;
  unsigned bs_g = 0;
  SubstantialityDegree delta_f;
  std::size_t codim_aug = 0;
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::size_t refined = 0;
  bool lower_equality = false;
  bool upper_equality = false;
  bool g_quasihom = false;
  bool f_substantial = false;
};

/// Assembles one row and checks both inequalities and the equality criterion
/// (lower = value iff mu = tau or delta = 1). A violation is an InternalError.
BoundsReport bounds_report(const UnfoldingData& f, const FunctionGerm& g, const std::string& label = "");
BoundsReport bounds_report(const OnePSU& unfolding, const FunctionGerm& g, const std::string& label = "");

struct MondCheck {
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  bool holds = false;
};
/// lhs = augmentation codimension, rhs = image_milnor_f * mu(g).
MondCheck mond_inequality_check(const OnePSU& unfolding, const FunctionGerm& g, std::size_t image_milnor_f);

}  // namespace germforge
