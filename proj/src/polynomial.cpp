#include "germforge/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "germforge/errors.hpp"

namespace germforge {

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Polynomial Polynomial::constant(const RingContext& ring, const Rational& c) {
  return monomial(ring, Monomial{}, c);
}

Polynomial Polynomial::variable(const RingContext& ring, std::size_t index) {
  if (index >= ring.nvars()) throw DomainError("variable index out of range");
  return monomial(ring, Monomial::variable(index), 1);
}

Polynomial Polynomial::variable(const RingContext& ring, std::string_view name) {
  return variable(ring, ring.require_index(name));
}

Polynomial Polynomial::monomial(const RingContext& ring, const Monomial& m, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(const RingContext& ring, std::vector<Term> terms) {
  Polynomial p(ring);
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational Polynomial::constant_term() const {
  for (const auto& t : terms_)
    if (t.mono.is_one()) return t.coeff;
  return 0;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t Polynomial::low_degree() const {
  if (terms_.empty()) return 0;
  std::uint32_t d = terms_.front().mono.degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

bool Polynomial::uses_variable(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[index] != 0; });
}

std::uint32_t Polynomial::degree_in(std::size_t index) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max<std::uint32_t>(d, t.mono[index]);
  return d;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (ring_ != o.ring_) throw DomainError("polynomials belong to different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(o);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const int c = ring_.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order of the terms.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  if (index >= ring_.nvars()) throw DomainError("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const Exponent e = t.mono[index];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(index, e - 1);
    out.push_back({m, t.coeff * e});
  }
  // Lowering one exponent can reorder terms under non-degree orders.
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::derivative(std::string_view name) const {
  return derivative(ring_.require_index(name));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading_coefficient());
}

Polynomial Polynomial::truncated(std::uint32_t bound) const {
  Polynomial r(ring_);
  for (const auto& t : terms_)
    if (t.mono.degree() <= bound) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::in_ring(const RingContext& target) const {
  if (target == ring_) return *this;
  std::vector<std::size_t> map(ring_.nvars(), kMaxVars);
  for (std::size_t i = 0; i < ring_.nvars(); ++i) {
    if (auto j = target.index_of(ring_.name(i))) map[i] = *j;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_.nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (map[i] == kMaxVars)
        throw DomainError("variable '" + ring_.name(i) + "' does not exist in the target ring");
      m.set(map[i], t.mono[i]);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (c < 0) {
      out += "-";
      c = -c;
    } else if (!first) {
      out += "+";
    }
    first = false;
    if (t.mono.is_one()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += ring_.monomial_to_string(t.mono);
    }
  }
  return out;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment) {
  if (assignment.empty()) {
    if (!p.is_constant())
      throw DomainError("substitute: no assignment given for a non-constant polynomial");
    return p;
  }
  return substitute(p, assignment, assignment.begin()->second.ring());
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment,
                      const RingContext& target) {
  const RingContext& src = p.ring();
  std::vector<const Polynomial*> images(src.nvars(), nullptr);
  for (std::size_t i = 0; i < src.nvars(); ++i) {
    auto it = assignment.find(src.name(i));
    if (it != assignment.end()) {
      if (it->second.ring() != target)
        throw DomainError("substitute: images must share one ring");
      images[i] = &it->second;
    } else if (p.uses_variable(i)) {
      throw DomainError("substitute: missing assignment for variable '" + src.name(i) + "'");
    }
  }
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(src.nvars());
  auto power = [&](std::size_t var, Exponent e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * *images[var]);
    return cache[e];
  };
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < src.nvars(); ++i)
      if (t.mono[i] != 0) term = term * power(i, t.mono[i]);
    for (const auto& tt : term.terms()) acc[tt.mono] += tt.coeff;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("exact_divide: division by zero");
  if (a.ring() != b.ring()) throw DomainError("exact_divide: operands in different rings");
  const RingContext& original = a.ring();
  const RingContext ring = original.order().is_global() ? original
                                                          : original.with_order(MonomialOrder::degrevlex());
  Polynomial rem = a.in_ring(ring);
  const Polynomial div = b.in_ring(ring);
  const Term& lead = div.leading_term();
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& t = rem.leading_term();
    if (!lead.mono.divides(t.mono))
      throw DomainError("exact_divide: divisor does not divide dividend");
    Monomial m = lead.mono.quotient_of(t.mono);
    Rational c = t.coeff / lead.coeff;
    quotient.push_back({m, c});
    rem = rem - div.mul_term(m, c);
  }
  return Polynomial::from_terms(ring, std::move(quotient)).in_ring(original);
}

}  // namespace germforge
