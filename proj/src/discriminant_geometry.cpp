#include "germforge/discriminant_geometry.hpp"

#include <map>
#include <set>

#include "germforge/errors.hpp"

namespace germforge {

std::vector<std::string> default_target_names(const MapGerm& f) {
  std::vector<std::string> taken = f.source().names();
  std::vector<std::string> out;
  for (std::size_t j = 0; j < f.target_dim(); ++j) {
    std::string n = fresh_name("X" + std::to_string(j + 1), taken);
    taken.push_back(n);
    out.push_back(n);
  }
  return out;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  if (n == 1) return m[0][0];
  Polynomial acc(m[0][0].ring());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const Polynomial term = m[0][c] * determinant(minor);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

namespace {

struct GraphRing {
  RingContext ring;
  std::vector<Polynomial> graph;  // X_j - F_j
  std::vector<Polynomial> components;
  std::set<std::string> source;
};

GraphRing graph_ring(const MapGerm& f, std::vector<std::string>& target_names) {
  if (target_names.empty()) target_names = default_target_names(f);
  if (target_names.size() != f.target_dim()) throw DomainError("need one target name per component");
  std::vector<std::string> names = f.source().names();
  names.insert(names.end(), target_names.begin(), target_names.end());
  GraphRing g{RingContext(names), {}, {}, {}};
  for (const auto& n : f.source().names()) g.source.insert(n);
  for (std::size_t j = 0; j < f.target_dim(); ++j) {
    Polynomial c = f.components()[j].in_ring(g.ring);
    g.graph.push_back(Polynomial::variable(g.ring, target_names[j]) - c);
    g.components.push_back(std::move(c));
  }
  return g;
}

// A component that is exactly a source variable x_i identifies x_i with its
// target variable; substituting removes both the equation and x_i from the
// elimination.
std::vector<Polynomial> eliminate_graph(const GraphRing& g, std::vector<Polynomial> gens,
                                        const std::vector<std::string>& target_names) {
  std::map<std::string, Polynomial> assign;
  std::set<std::string> drop = g.source;
  // Substituted variables no longer occur but are still dropped from the ring.
  std::set<std::string> absent;
  std::vector<bool> used(g.components.size(), false);
  for (std::size_t j = 0; j < g.components.size(); ++j) {
    const Polynomial& c = g.components[j];
    if (c.size() != 1 || c.leading_coefficient() != 1 || c.leading_monomial().degree() != 1) continue;
    std::size_t idx = 0;
    while (c.leading_monomial()[idx] == 0) ++idx;
    const std::string& var = g.ring.name(idx);
    if (!drop.count(var)) continue;
    drop.erase(var);
    absent.insert(var);
    assign.emplace(var, Polynomial::variable(g.ring, target_names[j]));
    used[j] = true;
  }
  if (assign.empty()) return eliminate(gens, drop);
  for (const auto& n : g.ring.names())
    if (!assign.count(n)) assign.emplace(n, Polynomial::variable(g.ring, n));
  std::vector<Polynomial> reduced;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k < used.size() && used[k]) continue;
    Polynomial s = substitute(gens[k], assign, g.ring);
    if (!s.is_zero()) reduced.push_back(std::move(s));
  }
  if (reduced.empty()) return {};
  drop.insert(absent.begin(), absent.end());
  return eliminate(reduced, drop);
}

HypersurfaceEquation finish(const MapGerm& f, const std::vector<Polynomial>& elim, const char* what) {
  if (elim.size() != 1) {
    throw MathRefusal(std::string(what) + " elimination ideal is not principal (" + std::to_string(elim.size()) +
                      " generators)");
  }
  const Polynomial& gen = elim.front();
  if (gen.is_constant()) return HypersurfaceEquation{gen.monic(), f, true, false};
  return HypersurfaceEquation{squarefree_part(gen), f, true, true};
}

// Combinations of k indices out of n, in lexicographic order.
void combinations(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  const std::size_t start = cur.empty() ? 0 : cur.back() + 1;
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

HypersurfaceEquation image_equation(const MapGerm& f, std::vector<std::string> target_names) {
  if (f.target_dim() != f.source_dim() + 1)
    throw DomainError("image_equation needs target dimension = source dimension + 1");
  const GraphRing g = graph_ring(f, target_names);
  return finish(f, eliminate_graph(g, g.graph, target_names), "image");
}

HypersurfaceEquation discriminant_equation(const MapGerm& f, std::vector<std::string> target_names) {
  const std::size_t n = f.source_dim(), p = f.target_dim();
  if (n < p) throw DomainError("discriminant_equation needs source dimension >= target dimension");
  const GraphRing g = graph_ring(f, target_names);
  // Jacobian: rows are components, columns are source variables.
  std::vector<std::vector<Polynomial>> jac(p);
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t i = 0; i < n; ++i) jac[j].push_back(g.components[j].derivative(i));
  std::vector<std::vector<std::size_t>> cols;
  std::vector<std::size_t> cur;
  combinations(n, p, cur, cols);
  std::vector<Polynomial> gens = g.graph;
  for (const auto& c : cols) {
    std::vector<std::vector<Polynomial>> m(p);
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t i : c) m[j].push_back(jac[j][i]);
    Polynomial d = determinant(m);
    if (!d.is_zero()) gens.push_back(std::move(d));
  }
  return finish(f, eliminate_graph(g, gens, target_names), "discriminant");
}

HypersurfaceEquation defining_equation(const MapGerm& f, std::vector<std::string> target_names) {
  if (f.target_dim() == f.source_dim() + 1) return image_equation(f, std::move(target_names));
  if (f.source_dim() >= f.target_dim()) return discriminant_equation(f, std::move(target_names));
  throw DomainError("no hypersurface attached to a germ with target dimension > source dimension + 1");
}

}  // namespace germforge
