#pragma once

// Internal standard-basis engine shared by ideal and module computations.
// Coefficients are integers; elements are kept primitive (content 1, positive
// leading coefficient) and reductions are fraction-free.

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "germforge/monomial.hpp"
#include "germforge/polynomial.hpp"

namespace germforge::detail {

struct ETerm {
  Monomial mono;
  std::uint32_t comp = 0;
  Integer coeff;
};

struct EVec {
  std::vector<ETerm> terms;
  std::uint32_t sugar = 0;

  bool empty() const { return terms.empty(); }
  const ETerm& lead() const { return terms.front(); }
};

struct EngineConfig {
  std::size_t nvars = 0;
  MonomialOrder order;
  /// Number of free-module components; 1 for ideals. Position-over-term with
  /// component 0 the largest.
  std::uint32_t rank = 1;
  /// Elements whose leading component is at least this index are recorded in
  /// EngineResult::collected and take no further part (no pairs, no
  /// reductions). Used to gather syzygies without a standard basis of them.
  std::uint32_t collect_from = UINT32_MAX;
};

struct EngineResult {
  /// Minimal basis, primitive integer coefficients, deterministic order.
  std::vector<EVec> basis;
  /// Elements with leading component >= collect_from, in order of discovery.
  std::vector<EVec> collected;
  /// Local rank-1 computations only: m^K is contained in the ideal, so every
  /// term of degree >= K may be discarded.
  std::optional<std::uint32_t> noether;
};

class Engine {
 public:
  explicit Engine(EngineConfig config) : cfg_(std::move(config)) {}

  /// Three-way comparison of terms (component first, then monomial).
  int compare(const ETerm& a, const ETerm& b) const;

  void sort_terms(EVec& v) const;
  void make_primitive(EVec& v) const;

  /// Standard basis (global: Groebner basis, reduced; local: Mora standard basis).
  EngineResult compute(std::vector<EVec> generators) const;

  /// Normal form against a finished basis. Global orders give the fully reduced
  /// remainder; local orders give a weak normal form (zero iff member).
  EVec normal_form(EVec h, const std::vector<EVec>& basis, std::optional<std::uint32_t> noether) const;

  /// Count and maximal degree of monomials outside the monomial ideal generated
  /// by `leads` (restricted to degree < noether when given). nullopt if infinite.
  struct Staircase {
    std::size_t count = 0;
    std::uint32_t max_degree = 0;
    std::vector<Monomial> monomials;
  };
  std::optional<Staircase> staircase(const std::vector<Monomial>& leads, std::optional<std::uint32_t> noether,
                                     bool collect) const;

  const EngineConfig& config() const { return cfg_; }

 private:
  struct Reducer;
  // Local orders: intermediate forms of h join the reducers. With `keep` they
  // are stored there and stay in `reducers` afterwards. With `defer_above`,
  // stops early and sets `*deferred` once the degree of h exceeds it.
  EVec reduce(EVec h, std::vector<Reducer>& reducers, bool full, std::optional<std::uint32_t> noether,
              std::deque<EVec>* keep = nullptr, std::optional<std::uint32_t> defer_above = std::nullopt,
              bool* deferred = nullptr) const;
  void sub_mul(EVec& h, const Integer& a, const Integer& b, const Monomial& m, const EVec& g,
               std::optional<std::uint32_t> noether) const;

  EngineConfig cfg_;
};

std::uint32_t max_degree(const EVec& v);

}  // namespace germforge::detail
