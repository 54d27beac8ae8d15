#include "germforge/standard_basis.hpp"

#include <algorithm>
#include <random>

#include "engine.hpp"
#include "germforge/errors.hpp"

namespace germforge {

using detail::Engine;
using detail::EngineConfig;
using detail::ETerm;
using detail::EVec;

std::size_t Dimension::value() const {
  if (infinite_) throw MathRefusal("quotient has infinite dimension");
  return value_;
}

std::string Dimension::to_string() const { return infinite_ ? "INFINITE" : std::to_string(value_); }

struct IdealBasis::Impl {
  RingContext ring;
  std::vector<Polynomial> generators;
  std::vector<Polynomial> basis;
  BasisKind kind = BasisKind::Raw;
  bool reduced = false;
  std::optional<std::uint32_t> noether;
  std::vector<EVec> engine_basis;
  Engine engine;
};

IdealBasis make_ideal_basis(std::shared_ptr<const IdealBasis::Impl> impl) { return IdealBasis(std::move(impl)); }

namespace {

Integer denominator_lcm(const std::vector<const Polynomial*>& parts) {
  Integer l = 1;
  for (const auto* p : parts)
    for (const auto& t : p->terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  return l;
}

// Clears denominators jointly across all parts; part k lands in component k + offset.
EVec to_evec(const Engine& engine, const std::vector<const Polynomial*>& parts, std::uint32_t offset = 0) {
  const Integer l = denominator_lcm(parts);
  EVec v;
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (const auto& t : parts[k]->terms()) {
      Integer c = t.coeff.get_num() * (l / t.coeff.get_den());
      v.terms.push_back(ETerm{t.mono, static_cast<std::uint32_t>(k + offset), std::move(c)});
    }
  engine.sort_terms(v);
  engine.make_primitive(v);
  v.sugar = detail::max_degree(v);
  return v;
}

EVec to_evec(const Engine& engine, const Polynomial& p) { return to_evec(engine, {&p}); }

Polynomial component_of(const EVec& v, std::uint32_t comp, const RingContext& ring) {
  std::vector<Term> terms;
  for (const auto& t : v.terms)
    if (t.comp == comp) terms.push_back(Term{t.mono, Rational(t.coeff)});
  return Polynomial::from_terms(ring, std::move(terms));
}

void require_one_ring(const std::vector<Polynomial>& gens) {
  for (const auto& g : gens)
    if (g.ring() != gens.front().ring()) throw DomainError("generators belong to different rings");
}

// Deterministic order on polynomials of one ring: leading monomial first
// (largest first), then the remaining terms, then coefficients.
bool poly_before(const Polynomial& a, const Polynomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t k = 0; k < n; ++k) {
    const int c = a.ring().compare(ta[k].mono, tb[k].mono);
    if (c != 0) return c > 0;
    if (ta[k].coeff != tb[k].coeff) return ta[k].coeff < tb[k].coeff;
  }
  return ta.size() < tb.size();
}

}  // namespace

const RingContext& IdealBasis::ring() const { return impl_->ring; }
const std::vector<Polynomial>& IdealBasis::generators() const { return impl_->generators; }
const std::vector<Polynomial>& IdealBasis::basis() const { return impl_->basis; }
BasisKind IdealBasis::kind() const { return impl_->kind; }
bool IdealBasis::reduced() const { return impl_->reduced; }
std::optional<std::uint32_t> IdealBasis::noether() const { return impl_->noether; }

std::vector<Monomial> IdealBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& b : impl_->basis) out.push_back(b.leading_monomial());
  return out;
}

std::vector<Polynomial> IdealBasis::local_presentation() const {
  std::vector<Polynomial> out = impl_->basis;
  if (!impl_->noether) return out;
  const std::size_t n = impl_->ring.nvars();
  const std::uint32_t k = *impl_->noether;
  Monomial cur;
  // All exponent vectors of total degree k.
  auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
    if (var + 1 == n) {
      cur.set(var, static_cast<Exponent>(left));
      out.push_back(Polynomial::monomial(impl_->ring, cur));
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      cur.set(var, static_cast<Exponent>(e));
      self(self, var + 1, left - e);
    }
    cur.set(var, 0);
  };
  if (n > 0) rec(rec, 0, k);
  return out;
}

Polynomial IdealBasis::normal_form(const Polynomial& p) const {
  const Polynomial q = p.ring() == impl_->ring ? p : p.in_ring(impl_->ring);
  if (q.is_zero()) return q;
  EVec r = impl_->engine.normal_form(to_evec(impl_->engine, q), impl_->engine_basis, impl_->noether);
  return component_of(r, 0, impl_->ring).monic();
}

bool IdealBasis::contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

bool IdealBasis::is_unit_ideal() const {
  return std::any_of(impl_->basis.begin(), impl_->basis.end(), [](const Polynomial& b) { return b.is_constant(); });
}

IdealBasis standard_basis(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw DomainError("standard_basis: no generators");
  require_one_ring(gens);
  const RingContext& ring = gens.front().ring();
  auto impl = std::make_shared<IdealBasis::Impl>(
      IdealBasis::Impl{ring, gens, {}, BasisKind::Raw, false, std::nullopt, {},
                       Engine(EngineConfig{ring.nvars(), ring.order(), 1})});
  std::vector<EVec> input;
  for (const auto& g : gens)
    if (!g.is_zero()) input.push_back(to_evec(impl->engine, g));
  detail::EngineResult res = impl->engine.compute(std::move(input));
  const bool local = ring.order().is_local();
  impl->kind = local ? BasisKind::StandardLocal : BasisKind::GroebnerGlobal;
  impl->reduced = !local;
  impl->noether = res.noether;
  for (const auto& e : res.basis) impl->basis.push_back(component_of(e, 0, ring).monic());
  impl->engine_basis = std::move(res.basis);
  return make_ideal_basis(std::move(impl));
}

IdealBasis standard_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  if (gens.empty()) throw DomainError("standard_basis: no generators");
  require_one_ring(gens);
  const RingContext ring = gens.front().ring().with_order(order);
  std::vector<Polynomial> moved;
  moved.reserve(gens.size());
  for (const auto& g : gens) moved.push_back(g.in_ring(ring));
  return standard_basis(moved);
}

namespace {

std::optional<Engine::Staircase> local_staircase(const IdealBasis& ideal, bool collect) {
  if (ideal.kind() != BasisKind::StandardLocal)
    throw DomainError("quotient_dimension needs a standard basis for a local order");
  const RingContext& ring = ideal.ring();
  Engine engine(EngineConfig{ring.nvars(), ring.order(), 1});
  return engine.staircase(ideal.leading_monomials(), ideal.noether(), collect);
}

}  // namespace

Dimension quotient_dimension(const IdealBasis& ideal) {
  auto st = local_staircase(ideal, false);
  return st ? Dimension::finite(st->count) : Dimension::infinite();
}

std::vector<Monomial> standard_monomials(const IdealBasis& ideal) {
  auto st = local_staircase(ideal, true);
  if (!st) throw MathRefusal("quotient has infinite dimension");
  return st->monomials;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::set<std::string>& drop) {
  if (gens.empty()) return {};
  require_one_ring(gens);
  const RingContext& ring = gens.front().ring();
  for (const auto& d : drop)
    if (!ring.index_of(d)) throw DomainError("eliminate: '" + d + "' is not a ring variable");
  std::vector<std::string> dropped, kept;
  for (const auto& n : ring.names()) (drop.count(n) ? dropped : kept).push_back(n);
  std::vector<std::string> names = dropped;
  names.insert(names.end(), kept.begin(), kept.end());
  const RingContext work(names, MonomialOrder::elimination(dropped.size()));
  const RingContext target(kept, MonomialOrder::degrevlex());

  std::vector<Polynomial> moved;
  for (const auto& g : gens)
    if (!g.is_zero()) moved.push_back(g.in_ring(work));
  if (moved.empty()) return {};
  const IdealBasis gb = standard_basis(moved);
  std::vector<Polynomial> out;
  for (const auto& b : gb.basis()) {
    bool free = true;
    for (std::size_t i = 0; i < dropped.size() && free; ++i) free = !b.uses_variable(i);
    if (free) out.push_back(b.in_ring(target).monic());
  }
  std::sort(out.begin(), out.end(), poly_before);
  return out;
}

bool VectorTuple::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::vector<VectorTuple> module_syzygies(const std::vector<VectorTuple>& columns, const MonomialOrder& order,
                                         SyzygyOutput output) {
  if (columns.empty()) return {};
  const std::size_t r = columns.front().rank();
  if (r == 0) throw DomainError("module_syzygies: columns of rank 0");
  const RingContext base = columns.front().components.front().ring();
  for (const auto& c : columns) {
    if (c.rank() != r) throw DomainError("module_syzygies: rank mismatch");
    for (const auto& p : c.components)
      if (p.ring().names() != base.names()) throw DomainError("module_syzygies: columns in different rings");
  }
  const RingContext ring = base.with_order(order);
  const std::size_t m = columns.size();
  EngineConfig cfg{ring.nvars(), ring.order(), static_cast<std::uint32_t>(r + m)};
  if (output == SyzygyOutput::Generators) cfg.collect_from = static_cast<std::uint32_t>(r);
  Engine engine(cfg);

  std::vector<std::vector<Polynomial>> cols(m);
  std::vector<EVec> input;
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& p : columns[i].components) cols[i].push_back(p.in_ring(ring));
    std::vector<const Polynomial*> parts;
    for (const auto& p : cols[i]) parts.push_back(&p);
    const Integer l = denominator_lcm(parts);
    EVec v;
    for (std::size_t k = 0; k < r; ++k)
      for (const auto& t : cols[i][k].terms())
        v.terms.push_back(ETerm{t.mono, static_cast<std::uint32_t>(k), t.coeff.get_num() * (l / t.coeff.get_den())});
    // Marker e_{r+i} records the multiple of column i.
    v.terms.push_back(ETerm{Monomial{}, static_cast<std::uint32_t>(r + i), l});
    engine.sort_terms(v);
    engine.make_primitive(v);
    v.sugar = detail::max_degree(v);
    input.push_back(std::move(v));
  }
  detail::EngineResult res = engine.compute(std::move(input));

  std::vector<const EVec*> found;
  for (const auto& e : res.basis)
    if (e.lead().comp >= r) found.push_back(&e);
  for (const auto& e : res.collected) found.push_back(&e);
  std::vector<VectorTuple> out;
  for (const EVec* ep : found) {
    const EVec& e = *ep;
    VectorTuple s;
    for (std::size_t i = 0; i < m; ++i) s.components.push_back(component_of(e, static_cast<std::uint32_t>(r + i), ring));
    // Normalize so the leading entry is monic.
    Rational lc = 1;
    for (const auto& c : s.components)
      if (!c.is_zero()) {
        lc = c.leading_coefficient();
        break;
      }
    for (auto& c : s.components) c = c * Rational(1 / lc);
    for (std::size_t k = 0; k < r; ++k) {
      Polynomial sum(ring);
      for (std::size_t i = 0; i < m; ++i) sum += s.components[i] * cols[i][k];
      if (!sum.is_zero()) throw InternalError("module_syzygies: output fails its relation");
    }
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  }
  return out;
}

namespace {

using Univariate = std::vector<Rational>;  // coefficient of x^k at index k

void trim(Univariate& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

Univariate univariate_rem(Univariate a, const Univariate& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= q * b[k];
    trim(a);
  }
  return a;
}

std::size_t univariate_gcd_degree(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = univariate_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// Tries to prove that no square factor of p involves variable `var`, by
// specializing the other variables at a random integer point that keeps the
// degree in `var`.
bool certify_variable(const Polynomial& p, std::size_t var, std::mt19937& rng) {
  const std::size_t deg = p.degree_in(var);
  const std::size_t n = p.ring().nvars();
  std::uniform_int_distribution<int> dist(-17, 17);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<Integer> point(n);
    for (std::size_t i = 0; i < n; ++i) point[i] = dist(rng);
    Univariate u(deg + 1);
    for (const auto& t : p.terms()) {
      Rational c = t.coeff;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == var || t.mono[i] == 0) continue;
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), t.mono[i]);
        c *= Rational(pw);
      }
      u[t.mono[var]] += c;
    }
    if (u[deg] == 0) continue;
    Univariate du(deg);
    for (std::size_t k = 1; k <= deg; ++k) du[k - 1] = u[k] * Rational(static_cast<long>(k));
    if (univariate_gcd_degree(u, du) == 0) return true;
  }
  return false;
}

}  // namespace

Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring()) throw DomainError("polynomial_gcd: operands in different rings");
  const RingContext& ring = a.ring();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(ring, 1);
  const std::string t = fresh_name("t", ring.names());
  std::vector<std::string> names{t};
  names.insert(names.end(), ring.names().begin(), ring.names().end());
  const RingContext work(names, MonomialOrder::degrevlex());
  const Polynomial tv = Polynomial::variable(work, 0);
  const Polynomial one = Polynomial::constant(work, 1);
  const auto lcm_gens = eliminate({tv * a.in_ring(work), (one - tv) * b.in_ring(work)}, {t});
  if (lcm_gens.size() != 1) throw InternalError("polynomial_gcd: intersection of principal ideals is not principal");
  const Polynomial l = lcm_gens.front().in_ring(ring);
  return exact_divide(a * b, l).monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_constant()) return p.is_zero() ? p : Polynomial::constant(p.ring(), 1);
  if (is_squarefree(p)) return p.monic();
  Polynomial g = p;
  for (std::size_t i = 0; i < p.ring().nvars() && !g.is_constant(); ++i)
    if (p.uses_variable(i)) g = polynomial_gcd(g, p.derivative(i));
  return exact_divide(p, g).monic();
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_constant()) return !p.is_zero();
  std::mt19937 rng(0x5eed);
  bool certified = true;
  for (std::size_t i = 0; i < p.ring().nvars() && certified; ++i)
    if (p.uses_variable(i)) certified = certify_variable(p, i, rng);
  if (certified) return true;
  Polynomial g = p;
  for (std::size_t i = 0; i < p.ring().nvars() && !g.is_constant(); ++i)
    if (p.uses_variable(i)) g = polynomial_gcd(g, p.derivative(i));
  return g.is_constant();
}

}  // namespace germforge
