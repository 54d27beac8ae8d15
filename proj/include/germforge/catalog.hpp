#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "germforge/codim_engine.hpp"

namespace germforge {

/// One germ-spec document. Line-oriented, one declaration per line, `#`
/// starts a comment:
///
///   label 11_5
///   vars x, y;
///   param l;
///   germ x, y^4 + x*y^2 + x^2*y + l*y, l;
///   function g(z) = z^3;
///
/// With `param` the germ is a one-parameter unfolding whose parameter is
/// appended as the last source variable.
struct GermSpec {
  std::string label;
  std::vector<std::string> vars;
  std::optional<std::string> param;
  std::vector<std::string> components;
  std::string function_name;
  std::vector<std::string> function_vars;
  std::string function_body;

  bool has_germ() const { return !components.empty(); }
  bool has_function() const { return !function_body.empty(); }
  /// All source variables, parameter last.
  std::vector<std::string> source_names() const;

  /// Throws DomainError when the document declares no germ.
  MapGerm germ() const;
  /// Requires `param`.
  OnePSU unfolding() const;
  /// Throws DomainError when the document declares no function.
  FunctionGerm function() const;

  /// Canonical text: one declaration per line, polynomials re-printed.
  std::string to_text() const;
};

/// Throws ParseError carrying the 1-based line number.
GermSpec parse_germ_spec(std::string_view text);
GermSpec load_germ_spec(const std::string& path);

/// A built-in germ, unfolding, trivializer or function with the invariants
/// known for it.
struct CatalogEntry {
  GermSpec spec;
  std::string provenance;
  /// "simple", "quasi-homogeneous", "trivializer", "scale:large".
  std::set<std::string> tags;
  std::optional<std::size_t> aecod;
  std::optional<unsigned> delta;
  std::optional<bool> cross_substantial;
  std::optional<std::size_t> mu;
  std::optional<std::size_t> tau;
  std::optional<unsigned> bs;
  std::optional<std::size_t> tau_tilde;

  bool has_tag(const std::string& t) const { return tags.count(t) != 0; }
};

const std::vector<CatalogEntry>& catalog();
/// Accepts the label itself or the label followed by "-opsu".
const CatalogEntry* find_catalog_entry(std::string_view label);
/// Throws DomainError for unknown labels.
const CatalogEntry& catalog_entry(std::string_view label);

struct CatalogCheck {
  std::string label;
  std::string property;
  bool ok = false;
  std::string detail;
};

/// Recomputes every recorded invariant. Entries tagged scale:large are
/// skipped unless `include_large`.
std::vector<CatalogCheck> verify_catalog(bool include_large = false,
                                         unsigned bound = default_substantiality_bound());

}  // namespace germforge
