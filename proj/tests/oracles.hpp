#pragma once

// Independent checks used by the unit and acceptance suites. Nothing here
// calls the standard basis engine.

#include <functional>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "germforge/linear_algebra.hpp"
#include "germforge/polynomial.hpp"

namespace germforge::oracle {

/// Exponent vectors of total degree < k in n variables.
inline std::vector<Monomial> monomials_below(std::size_t n, unsigned k) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e < left; ++e) {
      cur.set(i, static_cast<Exponent>(e));
      rec(i + 1, left - e);
    }
    cur.set(i, 0);
  };
  if (k > 0) rec(0, k);
  return out;
}

/// dim O/(I + m^k) in the local ring at 0, as the codimension of the span of
/// all truncated products monomial * generator in the space of (k-1)-jets.
inline std::size_t truncated_quotient_dimension(const std::vector<Polynomial>& gens, unsigned k) {
  if (gens.empty()) return monomials_below(0, k).size();
  const std::size_t n = gens.front().ring().nvars();
  const std::vector<Monomial> basis = monomials_below(n, k);
  std::unordered_map<Monomial, std::size_t, MonomialHash> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);
  RationalMatrix rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (const auto& m : basis) {
      std::vector<Rational> row(basis.size());
      bool any = false;
      for (const auto& t : g.terms()) {
        const Monomial prod = t.mono * m;
        if (prod.degree() >= k) continue;
        row[column.at(prod)] = t.coeff;
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  return basis.size() - matrix_rank(std::move(rows));
}

/// dim O/I for a zero-dimensional ideal of the local ring, or nullopt when it
/// exceeds `cap`. Stops once two consecutive truncations agree: then
/// m^k lies in I + m^(k+1), hence in I by Nakayama.
inline std::optional<std::size_t> jet_quotient_dimension(const std::vector<Polynomial>& gens, std::size_t cap = 30) {
  std::size_t prev = truncated_quotient_dimension(gens, 1);
  for (unsigned k = 2;; ++k) {
    const std::size_t cur = truncated_quotient_dimension(gens, k);
    if (cur == prev) return cur;
    if (cur > cap) return std::nullopt;
    prev = cur;
  }
}

/// Random polynomial with `terms` monomials of degree in [lo, hi] and small
/// integer coefficients.
inline Polynomial random_polynomial(const RingContext& ring, std::mt19937& rng, std::size_t terms, unsigned lo,
                                    unsigned hi) {
  std::uniform_int_distribution<int> coeff(-4, 4), deg(static_cast<int>(lo), static_cast<int>(hi)),
      var(0, static_cast<int>(ring.nvars()) - 1);
  Polynomial p(ring);
  for (std::size_t t = 0; t < terms; ++t) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    Monomial m;
    for (int d = deg(rng); d > 0; --d) {
      const auto i = static_cast<std::size_t>(var(rng));
      m.set(i, static_cast<Exponent>(m[i] + 1));
    }
    p += Polynomial::monomial(ring, m, c);
  }
  return p;
}

}  // namespace germforge::oracle
