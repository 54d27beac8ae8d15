#include "germforge/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace germforge {

Monomial Monomial::variable(std::size_t index, Exponent power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, Exponent e) {
  if (i >= kMaxVars) throw std::out_of_range("monomial variable index out of range");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint32_t e = std::uint32_t(exps_[i]) + other.exps_[i];
    if (e > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = other.exps_[i] - exps_[i];
  r.degree_ = other.degree_ - degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

std::uint64_t Monomial::divmask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const Exponent e = exps_[i];
    if (e == 0) continue;
    std::uint64_t bits = 1;
    if (e >= 2) bits |= 2;
    if (e >= 4) bits |= 4;
    if (e >= 8) bits |= 8;
    mask |= bits << (4 * i);
  }
  return mask;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

namespace {

// Reverse lexicographic tie-break on [lo, hi): the monomial with the smaller
// exponent in the last differing variable is larger.
int revlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  return revlex(a, b, lo, hi);
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b, std::size_t nvars) const {
  switch (kind_) {
    case OrderKind::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return revlex(a, b, 0, nvars);
    case OrderKind::Lex:
      for (std::size_t i = 0; i < nvars; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case OrderKind::BlockElimination: {
      const std::size_t s = std::min(split_, nvars);
      if (int c = degrevlex_range(a, b, 0, s); c != 0) return c;
      return degrevlex_range(a, b, s, nvars);
    }
    case OrderKind::NegDegRevLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
      return revlex(a, b, 0, nvars);
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::BlockElimination: return "elimination(" + std::to_string(split_) + ")";
    case OrderKind::NegDegRevLex: return "negdegrevlex";
  }
  return "?";
}

}  // namespace germforge
