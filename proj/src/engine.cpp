#include "engine.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace germforge::detail {

std::uint32_t max_degree(const EVec& v) {
  std::uint32_t d = 0;
  for (const auto& t : v.terms) d = std::max(d, t.mono.degree());
  return d;
}

int Engine::compare(const ETerm& a, const ETerm& b) const {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return cfg_.order.compare(a.mono, b.mono, cfg_.nvars);
}

void Engine::sort_terms(EVec& v) const {
  std::sort(v.terms.begin(), v.terms.end(), [&](const ETerm& a, const ETerm& b) { return compare(a, b) > 0; });
  std::vector<ETerm> out;
  out.reserve(v.terms.size());
  for (auto& t : v.terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  v.terms = std::move(out);
}

void Engine::make_primitive(EVec& v) const {
  if (v.terms.empty()) return;
  Integer g = 0;
  for (const auto& t : v.terms) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  const bool negate = v.terms.front().coeff < 0;
  if (g == 1 && !negate) return;
  for (auto& t : v.terms) {
    if (g != 1) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
    if (negate) t.coeff = -t.coeff;
  }
}

struct Engine::Reducer {
  const EVec* vec;
  Monomial lm;
  std::uint32_t comp;
  std::uint64_t mask;
  std::uint32_t ecart;
  std::size_t length;

  static Reducer of(const EVec& v) {
    const ETerm& l = v.lead();
    return Reducer{&v, l.mono, l.comp, l.mono.divmask(), max_degree(v) - l.mono.degree(), v.terms.size()};
  }
};

void Engine::sub_mul(EVec& h, const Integer& a, const Integer& b, const Monomial& m, const EVec& g,
                     std::optional<std::uint32_t> noether) const {
  std::vector<ETerm> out;
  out.reserve(h.terms.size() + g.terms.size());
  const bool scale = a != 1;
  std::size_t i = 0, j = 0;
  ETerm shifted;
  auto next_g = [&](std::size_t& idx) -> bool {
    while (idx < g.terms.size()) {
      const ETerm& t = g.terms[idx];
      if (noether && t.mono.degree() + m.degree() >= *noether) {
        ++idx;
        continue;
      }
      shifted.mono = t.mono * m;
      shifted.comp = t.comp;
      return true;
    }
    return false;
  };
  bool have_g = next_g(j);
  while (i < h.terms.size() || have_g) {
    int c;
    if (i >= h.terms.size()) c = -1;
    else if (!have_g) c = 1;
    else c = compare(h.terms[i], shifted);
    if (c > 0) {
      out.push_back(std::move(h.terms[i]));
      if (scale) out.back().coeff *= a;
      ++i;
    } else if (c < 0) {
      Integer coeff = g.terms[j].coeff * b;
      coeff = -coeff;
      out.push_back(ETerm{shifted.mono, shifted.comp, std::move(coeff)});
      ++j;
      have_g = next_g(j);
    } else {
      Integer coeff = h.terms[i].coeff;
      if (scale) coeff *= a;
      coeff -= g.terms[j].coeff * b;
      if (coeff != 0) out.push_back(ETerm{shifted.mono, shifted.comp, std::move(coeff)});
      ++i;
      ++j;
      have_g = next_g(j);
    }
  }
  h.terms = std::move(out);
}

namespace {

void truncate(EVec& v, std::optional<std::uint32_t> noether) {
  if (!noether) return;
  std::erase_if(v.terms, [&](const ETerm& t) { return t.mono.degree() >= *noether; });
}

void remove_content(std::vector<ETerm>& a, std::vector<ETerm>& b) {
  Integer g = 0;
  for (const auto* vec : {&a, &b})
    for (const auto& t : *vec) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
      if (g == 1) return;
    }
  if (g == 0 || g == 1) return;
  for (auto* vec : {&a, &b})
    for (auto& t : *vec) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

EVec Engine::reduce(EVec h, std::vector<Reducer>& reducers, bool full, std::optional<std::uint32_t> noether,
                    std::deque<EVec>* keep, std::optional<std::uint32_t> defer_above, bool* deferred) const {
  truncate(h, noether);
  if (deferred) *deferred = false;
  const bool local = cfg_.order.is_local();
  const std::size_t base_count = reducers.size();
  std::deque<EVec> scratch;
  std::deque<EVec>& extras = keep ? *keep : scratch;
  std::vector<ETerm> done;
  std::size_t steps = 0;
  while (!h.terms.empty()) {
    const ETerm& lead = h.terms.front();
    const std::uint64_t mask = lead.mono.divmask();
    const Reducer* best = nullptr;
    for (const auto& r : reducers) {
      if (r.comp != lead.comp || (r.mask & ~mask) != 0 || !r.lm.divides(lead.mono)) continue;
      if (!local) {
        if (!best || r.length < best->length) best = &r;
        continue;
      }
      if (!best || r.ecart < best->ecart || (r.ecart == best->ecart && r.length < best->length)) best = &r;
      if (best->ecart == 0 && best->length <= 2) break;
    }
    if (!best) {
      if (!full) break;
      done.push_back(std::move(h.terms.front()));
      h.terms.erase(h.terms.begin());
      continue;
    }
    const Reducer chosen = *best;
    if (local) {
      const std::uint32_t deg_h = max_degree(h);
      if (defer_above && deg_h > *defer_above) {
        *deferred = true;
        break;
      }
      const std::uint32_t ecart_h = deg_h - lead.mono.degree();
      if (chosen.ecart > ecart_h) {
        extras.push_back(h);
        reducers.push_back(Reducer::of(extras.back()));
      }
    }
    const Integer& lc_g = chosen.vec->lead().coeff;
    Integer g;
    mpz_gcd(g.get_mpz_t(), lc_g.get_mpz_t(), lead.coeff.get_mpz_t());
    Integer a = lc_g / g;
    Integer b = lead.coeff / g;
    if (a < 0) {
      a = -a;
      b = -b;
    }
    const Monomial m = chosen.lm.quotient_of(lead.mono);
    h.sugar = std::max(h.sugar, chosen.vec->sugar + m.degree());
    sub_mul(h, a, b, m, *chosen.vec, noether);
    if (full && a != 1)
      for (auto& t : done) t.coeff *= a;
    if (++steps % 16 == 0) remove_content(h.terms, done);
  }
  if (!keep) reducers.resize(base_count);
  if (full && !done.empty()) {
    done.insert(done.end(), std::make_move_iterator(h.terms.begin()), std::make_move_iterator(h.terms.end()));
    h.terms = std::move(done);
  }
  make_primitive(h);
  return h;
}

EVec Engine::normal_form(EVec h, const std::vector<EVec>& basis, std::optional<std::uint32_t> noether) const {
  sort_terms(h);
  std::vector<Reducer> reducers;
  reducers.reserve(basis.size());
  for (const auto& b : basis)
    if (!b.empty()) reducers.push_back(Reducer::of(b));
  return reduce(std::move(h), reducers, cfg_.order.is_global(), noether);
}

std::optional<Engine::Staircase> Engine::staircase(const std::vector<Monomial>& leads,
                                                    std::optional<std::uint32_t> noether, bool collect) const {
  const std::size_t n = cfg_.nvars;
  if (!noether) {
    for (std::size_t i = 0; i < n; ++i) {
      bool pure = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) { return m.degree() == m[i]; });
      if (!pure) return std::nullopt;
    }
  }
  std::vector<std::uint64_t> masks;
  masks.reserve(leads.size());
  for (const auto& l : leads) masks.push_back(l.divmask());
  auto in_ideal = [&](const Monomial& m) {
    const std::uint64_t mm = m.divmask();
    for (std::size_t k = 0; k < leads.size(); ++k)
      if ((masks[k] & ~mm) == 0 && leads[k].divides(m)) return true;
    return false;
  };
  Staircase st;
  Monomial cur;
  std::function<void(std::size_t)> rec = [&](std::size_t var) {
    if (var == n) {
      ++st.count;
      st.max_degree = std::max(st.max_degree, cur.degree());
      if (collect) st.monomials.push_back(cur);
      return;
    }
    for (Exponent e = 0;; ++e) {
      cur.set(var, e);
      if (noether && cur.degree() >= *noether) break;
      if (in_ideal(cur)) break;
      rec(var + 1);
    }
    cur.set(var, 0);
  };
  if (n == 0) {
    if (!in_ideal(cur)) {
      st.count = 1;
      if (collect) st.monomials.push_back(cur);
    }
    return st;
  }
  rec(0);
  return st;
}

namespace {

struct Elem {
  EVec vec;
  Monomial lm;
  std::uint32_t comp = 0;
  bool redundant = false;
};

struct Pair {
  int i;  // -1 for a pending input generator
  int j;
  Monomial lcm;
  std::uint32_t comp;
  std::uint32_t sugar;
  std::uint64_t seq;
};

}  // namespace

EngineResult Engine::compute(std::vector<EVec> generators) const {
  const bool local = cfg_.order.is_local();
  const bool product_criterion = !local && cfg_.rank == 1;
  const std::size_t n = cfg_.nvars;

  auto pair_less = [&](const Pair& a, const Pair& b) {
    const std::uint32_t da = a.lcm.degree(), db = b.lcm.degree();
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (da != db) return da < db;
    if (a.comp != b.comp) return a.comp > b.comp;
    const int c = cfg_.order.compare(a.lcm, b.lcm, n);
    if (c != 0) return c < 0;
    return a.seq < b.seq;
  };
  std::multiset<Pair, decltype(pair_less)> queue(pair_less);
  std::uint64_t seq = 0;

  for (std::size_t g = 0; g < generators.size(); ++g) {
    sort_terms(generators[g]);
    make_primitive(generators[g]);
    if (generators[g].empty()) continue;
    generators[g].sugar = max_degree(generators[g]);
    queue.insert(Pair{-1, int(g), generators[g].lead().mono, generators[g].lead().comp, generators[g].sugar, seq++});
  }

  std::deque<Elem> elems;
  std::vector<Reducer> reducers;
  std::deque<EVec> kept;
  std::vector<EVec> collected;
  std::optional<std::uint32_t> noether;

  auto update_noether = [&]() {
    std::vector<Monomial> leads;
    for (const auto& e : elems)
      if (!e.redundant) leads.push_back(e.lm);
    auto st = staircase(leads, std::nullopt, false);
    if (!st) return;
    const std::uint32_t k = st->max_degree + 1;
    if (noether && *noether <= k) return;
    noether = k;
    for (auto& e : elems)
      if (e.lm.degree() >= k) e.redundant = true;
  };

  auto insert = [&](EVec h) {
    const int k = int(elems.size());
    elems.push_back(Elem{std::move(h), {}, 0, false});
    Elem& nk = elems.back();
    nk.lm = nk.vec.lead().mono;
    nk.comp = nk.vec.lead().comp;
    reducers.push_back(Reducer::of(nk.vec));

    // Chain criterion on queued pairs.
    for (auto it = queue.begin(); it != queue.end();) {
      const Pair& p = *it;
      if (p.i >= 0 && p.comp == nk.comp && nk.lm.divides(p.lcm) &&
          elems[p.i].lm.lcm(nk.lm) != p.lcm && elems[p.j].lm.lcm(nk.lm) != p.lcm) {
        it = queue.erase(it);
      } else {
        ++it;
      }
    }

    struct Cand {
      int i;
      Monomial lcm;
      bool coprime;
      bool alive = true;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < k; ++i) {
      const Elem& e = elems[i];
      if (e.redundant || e.comp != nk.comp) continue;
      cands.push_back(Cand{i, e.lm.lcm(nk.lm), product_criterion && e.lm.coprime(nk.lm)});
    }
    // Strictly divisible lcms are redundant.
    for (auto& c : cands)
      for (const auto& d : cands)
        if (&c != &d && d.lcm != c.lcm && d.lcm.divides(c.lcm)) {
          c.alive = false;
          break;
        }
    // Equal lcms: keep one, or none if any member satisfies the product criterion.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!cands[a].alive) continue;
      bool any_coprime = cands[a].coprime;
      for (std::size_t b = a + 1; b < cands.size(); ++b)
        if (cands[b].alive && cands[b].lcm == cands[a].lcm) {
          any_coprime = any_coprime || cands[b].coprime;
          cands[b].alive = false;
        }
      if (any_coprime) cands[a].alive = false;
    }
    for (const auto& c : cands) {
      if (!c.alive) continue;
      const Elem& e = elems[c.i];
      const std::uint32_t s = std::max(e.vec.sugar + e.lm.quotient_of(c.lcm).degree(),
                                       nk.vec.sugar + nk.lm.quotient_of(c.lcm).degree());
      queue.insert(Pair{c.i, k, c.lcm, nk.comp, s, seq++});
    }
    for (int i = 0; i < k; ++i) {
      Elem& e = elems[i];
      if (!e.redundant && e.comp == nk.comp && nk.lm.divides(e.lm)) e.redundant = true;
    }
    if (local && cfg_.rank == 1 && (!noether || nk.lm.degree() < *noether)) update_noether();
  };

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    if (noether && p.lcm.degree() >= *noether) continue;
    EVec s;
    if (p.i < 0) {
      s = generators[p.j];
    } else {
      const Elem& f = elems[p.i];
      const Elem& g = elems[p.j];
      const Monomial mf = f.lm.quotient_of(p.lcm);
      const Monomial mg = g.lm.quotient_of(p.lcm);
      const Integer& cf = f.vec.lead().coeff;
      const Integer& cg = g.vec.lead().coeff;
      Integer d;
      mpz_gcd(d.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
      const Integer af = cg / d;
      const Integer bg = cf / d;
      s.terms.reserve(f.vec.terms.size());
      for (const auto& t : f.vec.terms) {
        if (noether && t.mono.degree() + mf.degree() >= *noether) continue;
        s.terms.push_back(ETerm{t.mono * mf, t.comp, t.coeff * af});
      }
      sub_mul(s, 1, bg, mg, g.vec, noether);
      s.sugar = p.sugar;
    }
    // Local orders: when the degree of h climbs past the next pair, put it
    // back in the queue so that cheaper pairs can supply better reducers.
    std::optional<std::uint32_t> defer_above;
    if (local && !queue.empty()) defer_above = std::max(p.sugar, queue.begin()->sugar);
    bool deferred = false;
    EVec h = reduce(std::move(s), reducers, !local, noether, &kept, defer_above, &deferred);
    if (deferred) {
      h.sugar = max_degree(h);
      generators.push_back(std::move(h));
      const EVec& d = generators.back();
      queue.insert(Pair{-1, int(generators.size() - 1), d.lead().mono, d.lead().comp, d.sugar, seq++});
      continue;
    }
    if (h.empty()) continue;
    if (h.lead().comp >= cfg_.collect_from) {
      collected.push_back(std::move(h));
      continue;
    }
    if (noether && h.lead().mono.degree() >= *noether) continue;
    insert(std::move(h));
  }

  EngineResult result;
  result.noether = noether;
  result.collected = std::move(collected);
  std::vector<EVec> basis;
  for (const auto& e : elems)
    if (!e.redundant) basis.push_back(e.vec);

  if (!local) {
    // Leading monomials are minimal, so full reduction against the others only
    // touches the tail.
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<Reducer> others;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(Reducer::of(basis[j]));
      const std::uint32_t sugar = basis[i].sugar;
      basis[i] = reduce(std::move(basis[i]), others, true, std::nullopt);
      basis[i].sugar = sugar;
    }
  } else if (noether) {
    for (auto& b : basis) truncate(b, noether);
  }
  std::sort(basis.begin(), basis.end(), [&](const EVec& x, const EVec& y) {
    const std::size_t m = std::min(x.terms.size(), y.terms.size());
    for (std::size_t k = 0; k < m; ++k) {
      const int c = compare(x.terms[k], y.terms[k]);
      if (c != 0) return c < 0;
      if (x.terms[k].coeff != y.terms[k].coeff) return x.terms[k].coeff < y.terms[k].coeff;
    }
    return x.terms.size() < y.terms.size();
  });
  result.basis = std::move(basis);
  return result;
}

}  // namespace germforge::detail
