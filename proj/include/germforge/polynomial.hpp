#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "germforge/monomial.hpp"
#include "germforge/ring.hpp"

namespace germforge {

using Rational = mpq_class;
using Integer = mpz_class;

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted by the ring's monomial order, largest first, with no
/// zero coefficients and no repeated monomials. For a local order the leading
/// term is therefore a term of lowest total degree.
class Polynomial {
 public:
  explicit Polynomial(RingContext ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const RingContext& ring, const Rational& c);
  static Polynomial variable(const RingContext& ring, std::size_t index);
  static Polynomial variable(const RingContext& ring, std::string_view name);
  static Polynomial monomial(const RingContext& ring, const Monomial& m, const Rational& c = 1);
  /// Sorts, merges duplicate monomials and drops zeros.
  static Polynomial from_terms(const RingContext& ring, std::vector<Term> terms);

  const RingContext& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Rational constant_term() const;

  /// Precondition: !is_zero().
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Rational& leading_coefficient() const { return terms_.front().coeff; }

  /// Largest total degree of a term; 0 for the zero polynomial.
  std::uint32_t total_degree() const;
  /// Smallest total degree of a term (the order of the germ at 0).
  std::uint32_t low_degree() const;
  bool uses_variable(std::size_t index) const;
  std::uint32_t degree_in(std::size_t index) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial pow(unsigned e) const;
  Polynomial mul_term(const Monomial& m, const Rational& c) const;

  Polynomial derivative(std::size_t index) const;
  Polynomial derivative(std::string_view name) const;

  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;
  /// Drops every term of total degree > bound.
  Polynomial truncated(std::uint32_t bound) const;

  /// Re-expresses the polynomial over `target`, matching variables by name.
  /// Every variable actually used must exist in `target`.
  Polynomial in_ring(const RingContext& target) const;

  /// Exact equality of term lists. Both operands must live in equal rings.
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Canonical ASCII rendering accepted by parse_polynomial.
  std::string to_string() const;

 private:
  void check_same_ring(const Polynomial& o) const;

  RingContext ring_;
  std::vector<Term> terms_;
};

/// Exact composition: every variable of `p` that is used must have an image,
/// and all images must share one ring (which becomes the result ring).
/// `target` supplies the ring when the assignment is empty.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment);
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment,
                      const RingContext& target);

/// Quotient q with a == q * b, or throws DomainError when b does not divide a.
/// Uses the multivariate division algorithm under a global order.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

std::string rational_to_string(const Rational& q);

}  // namespace germforge
