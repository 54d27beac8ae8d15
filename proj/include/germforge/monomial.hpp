#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

namespace germforge {

/// Hard upper bound on the number of ring variables. Elimination rings built
/// from a germ (source + target + one auxiliary) stay well below this.
inline constexpr std::size_t kMaxVars = 16;

using Exponent = std::uint16_t;

/// Exponent vector x^a. Unused trailing slots are always zero, so equality and
/// divisibility can run over the full array regardless of the ring size.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, Exponent power = 1);

  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, Exponent e);

  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) on the receiver side: returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Bitmask with four bits per variable (e >= 1, 2, 4, 8). If a | b then
  /// (mask(a) & ~mask(b)) == 0.
  std::uint64_t divmask() const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

  const std::array<Exponent, kMaxVars>& exponents() const { return exps_; }

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind {
  DegRevLex,
  Lex,
  /// Degrevlex on the first `split` variables, ties broken by degrevlex on the
  /// rest. Eliminates the leading block.
  BlockElimination,
  /// Local degree order: lower total degree is larger, so 1 > x_i.
  NegDegRevLex,
};

class MonomialOrder {
 public:
  MonomialOrder() = default;
  static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::DegRevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0); }
  static MonomialOrder elimination(std::size_t split) {
    return MonomialOrder(OrderKind::BlockElimination, split);
  }
  static MonomialOrder negdegrevlex() { return MonomialOrder(OrderKind::NegDegRevLex, 0); }

  OrderKind kind() const { return kind_; }
  std::size_t split() const { return split_; }
  bool is_local() const { return kind_ == OrderKind::NegDegRevLex; }
  bool is_global() const { return !is_local(); }

  /// Three-way comparison of monomials over `nvars` variables:
  /// negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const;

  std::string name() const;

  bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && split_ == o.split_; }

 private:
  MonomialOrder(OrderKind kind, std::size_t split) : kind_(kind), split_(split) {}

  OrderKind kind_ = OrderKind::DegRevLex;
  std::size_t split_ = 0;
};

}  // namespace germforge
