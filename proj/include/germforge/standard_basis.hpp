#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "germforge/polynomial.hpp"
#include "germforge/ring.hpp"

namespace germforge {

/// A vector-space dimension that may be infinite.
class Dimension {
 public:
  static Dimension finite(std::size_t n) { return Dimension(false, n); }
  static Dimension infinite() { return Dimension(true, 0); }

  bool is_finite() const { return !infinite_; }
  bool is_infinite() const { return infinite_; }
  /// Throws MathRefusal when infinite.
  std::size_t value() const;

  std::string to_string() const;
  bool operator==(const Dimension& o) const { return infinite_ == o.infinite_ && value_ == o.value_; }

 private:
  Dimension(bool inf, std::size_t v) : infinite_(inf), value_(v) {}
  bool infinite_;
  std::size_t value_;
};

enum class BasisKind { Raw, GroebnerGlobal, StandardLocal };

/// An ideal together with a standard basis for the order of its ring.
class IdealBasis {
 public:
  const RingContext& ring() const;
  /// The generators the basis was computed from.
  const std::vector<Polynomial>& generators() const;
  /// Minimal basis, monic, sorted by leading monomial (largest first).
  const std::vector<Polynomial>& basis() const;
  BasisKind kind() const;
  /// Global bases are fully interreduced.
  bool reduced() const;
  /// Local bases only: m^K lies in the ideal for K = noether(). Elements with
  /// leading monomial of degree >= K are then omitted from basis(), so the
  /// leading ideal is generated by leading_monomials() together with m^K.
  std::optional<std::uint32_t> noether() const;

  std::vector<Monomial> leading_monomials() const;

  /// Generators of the same ideal of the local ring: basis() plus, when
  /// noether() is set, every monomial of degree noether(). Usually far smaller
  /// than generators(). Global bases return basis().
  std::vector<Polynomial> local_presentation() const;

  /// Global: the unique reduced remainder. Local: a weak normal form, zero iff
  /// the argument lies in the ideal of the local ring.
  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const;
  bool is_unit_ideal() const;

  struct Impl;

 private:
  explicit IdealBasis(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
  friend IdealBasis make_ideal_basis(std::shared_ptr<const Impl>);
};

/// Standard basis of the ideal generated by `gens` in the order of their ring.
/// Global orders: reduced Groebner basis (Buchberger). Local orders: Mora's
/// tangent cone algorithm; membership then refers to the localization at 0.
IdealBasis standard_basis(const std::vector<Polynomial>& gens);
/// Same, after moving the generators into a copy of their ring with `order`.
IdealBasis standard_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order);

/// Number of monomials outside the leading ideal of a local standard basis.
Dimension quotient_dimension(const IdealBasis& ideal);
/// The monomials counted by quotient_dimension. Throws MathRefusal if infinite.
std::vector<Monomial> standard_monomials(const IdealBasis& ideal);

/// Generators of <gens> intersected with the subring on the variables not in
/// `drop`. The result lives in a fresh ring on the kept variables (original
/// relative order, degrevlex).
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::set<std::string>& drop);

/// Element of a free module of finite rank.
struct VectorTuple {
  std::vector<Polynomial> components;

  std::size_t rank() const { return components.size(); }
  bool is_zero() const;
  bool operator==(const VectorTuple& o) const { return components == o.components; }
};

enum class SyzygyOutput {
  /// A standard basis of the syzygy module.
  StandardBasis,
  /// The syzygies met while computing a standard basis of the columns
  /// (Schreyer). They generate the module but are not interreduced; much
  /// cheaper when the syzygies themselves have a large basis.
  Generators,
};

/// Generators of {c : sum_i c_i * columns[i] = 0}, computed with a
/// position-over-term standard basis. With a global order they generate the
/// module over the polynomial ring; with a local order they are polynomial
/// syzygies generating the module over the local ring at 0. Outputs live in
/// the columns' ring with its order replaced by `order`. Each output is
/// checked exactly.
std::vector<VectorTuple> module_syzygies(const std::vector<VectorTuple>& columns,
                                         const MonomialOrder& order = MonomialOrder::degrevlex(),
                                         SyzygyOutput output = SyzygyOutput::StandardBasis);

/// Greatest common divisor in Q[vars], monic under degrevlex.
Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);
/// True when no square of a non-constant polynomial divides `p`.
bool is_squarefree(const Polynomial& p);
/// p divided by gcd(p, all partial derivatives).
Polynomial squarefree_part(const Polynomial& p);

}  // namespace germforge
