#include "germforge/catalog.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "germforge/errors.hpp"
#include "germforge/parse.hpp"

namespace germforge {

std::vector<std::string> GermSpec::source_names() const {
  std::vector<std::string> names = vars;
  if (param) names.push_back(*param);
  return names;
}

MapGerm GermSpec::germ() const {
  if (!has_germ()) throw DomainError("germ spec '" + label + "' declares no germ");
  const RingContext ring(source_names());
  std::vector<Polynomial> comps;
  for (const auto& c : components) comps.push_back(parse_polynomial(c, ring));
  return MapGerm(ring, std::move(comps));
}

OnePSU GermSpec::unfolding() const {
  if (!param) throw DomainError("germ spec '" + label + "' declares no parameter");
  return OnePSU(germ());
}

FunctionGerm GermSpec::function() const {
  if (!has_function()) throw DomainError("germ spec '" + label + "' declares no function");
  return FunctionGerm(parse_polynomial(function_body, RingContext(function_vars)));
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

}  // namespace

std::string GermSpec::to_text() const {
  std::ostringstream os;
  if (!label.empty()) os << "label " << label << "\n";
  if (!vars.empty()) os << "vars " << join(vars) << ";\n";
  if (param) os << "param " << *param << ";\n";
  if (has_germ()) {
    const MapGerm g = germ();
    std::vector<std::string> printed;
    for (const auto& c : g.components()) printed.push_back(c.to_string());
    os << "germ " << join(printed) << ";\n";
  }
  if (has_function())
    os << "function " << function_name << "(" << join(function_vars) << ") = " << function().poly().to_string() << ";\n";
  return os.str();
}

namespace {

[[noreturn]] void fail(const std::string& what, std::size_t line) {
  throw ParseError("line " + std::to_string(line) + ": " + what, 0, line);
}

std::vector<std::string> identifier_list(const std::string& text, std::size_t line) {
  std::vector<std::string> out;
  for (const auto& part : split_top_level(text)) {
    if (!is_identifier(part)) fail("'" + part + "' is not a variable name", line);
    for (const auto& seen : out)
      if (seen == part) fail("variable '" + part + "' declared twice", line);
    out.push_back(part);
  }
  if (out.empty()) fail("empty variable list", line);
  return out;
}

}  // namespace

GermSpec parse_germ_spec(std::string_view text) {
  GermSpec spec;
  std::set<std::string> seen;
  std::size_t germ_line = 0, function_line = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string body = trim(raw);
    if (body.empty()) continue;
    if (body.back() == ';') body = trim(std::string_view(body).substr(0, body.size() - 1));
    std::size_t k = 0;
    while (k < body.size() && !std::isspace(static_cast<unsigned char>(body[k]))) ++k;
    const std::string key = body.substr(0, k);
    const std::string rest = trim(std::string_view(body).substr(k));
    if (!seen.insert(key).second &&
        (key == "label" || key == "vars" || key == "param" || key == "germ" || key == "function"))
      fail("duplicate '" + key + "' declaration", line);
    if (key == "label") {
      if (rest.empty()) fail("empty label", line);
      spec.label = rest;
    } else if (key == "vars") {
      spec.vars = identifier_list(rest, line);
    } else if (key == "param") {
      if (!is_identifier(rest)) fail("'" + rest + "' is not a variable name", line);
      spec.param = rest;
    } else if (key == "germ") {
      spec.components = split_top_level(rest);
      if (spec.components.empty() || rest.empty()) fail("empty germ", line);
      germ_line = line;
    } else if (key == "function") {
      const auto open = rest.find('('), close = rest.find(')'), eq = rest.find('=');
      if (open == std::string::npos || close == std::string::npos || eq == std::string::npos || close < open ||
          eq < close)
        fail("expected 'function name(vars) = polynomial'", line);
      spec.function_name = trim(std::string_view(rest).substr(0, open));
      if (!is_identifier(spec.function_name)) fail("'" + spec.function_name + "' is not a function name", line);
      spec.function_vars = identifier_list(rest.substr(open + 1, close - open - 1), line);
      spec.function_body = trim(std::string_view(rest).substr(eq + 1));
      if (spec.function_body.empty()) fail("empty function body", line);
      function_line = line;
    } else {
      fail("unknown key '" + key + "'", line);
    }
  }
  if (spec.param)
    for (const auto& v : spec.vars)
      if (v == *spec.param) fail("parameter '" + v + "' also listed in vars", line);
  if (spec.has_germ()) {
    if (spec.vars.empty() && !spec.param) fail("germ declared without vars", germ_line);
    try {
      const MapGerm g = spec.germ();
      if (spec.param) static_cast<void>(OnePSU(g));
    } catch (const ParseError& e) {
      fail(e.what(), germ_line);
    } catch (const DomainError& e) {
      fail(e.what(), germ_line);
    }
  } else if (spec.param) {
    fail("parameter declared without a germ", line);
  }
  if (spec.has_function()) {
    try {
      spec.function();
    } catch (const ParseError& e) {
      fail(e.what(), function_line);
    } catch (const DomainError& e) {
      fail(e.what(), function_line);
    }
  }
  if (!spec.has_germ() && !spec.has_function()) fail("no germ or function declared", line);
  return spec;
}

GermSpec load_germ_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open germ spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_germ_spec(buf.str());
}

namespace {

struct Seed {
  const char* text;
  const char* provenance;
  std::set<std::string> tags;
  std::optional<std::size_t> aecod;
  std::optional<unsigned> delta;
  std::optional<bool> cross;
  std::optional<std::size_t> mu;
  std::optional<std::size_t> tau;
  std::optional<unsigned> bs;
  std::optional<std::size_t> tau_tilde;
};

std::vector<CatalogEntry> build_catalog() {
  const std::vector<Seed> seeds = {
      // Functions.
      {"label DG_3\nfunction DG_3(u, v) = u^7 + u^3*v^4 + v^6;", "Dimca-Greuel family", {}, {}, {}, {}, 30, 27, 2,
       {}},
      {"label DG_4\nfunction DG_4(u, v) = u^9 + u^4*v^5 + v^8;", "Dimca-Greuel family", {}, {}, {}, {}, 56, 48, 2, {}},
      {"label DG_5\nfunction DG_5(u, v) = u^11 + u^5*v^6 + v^10;", "Dimca-Greuel family", {}, {}, {}, {}, 90, 75, 2,
       {}},
      {"label M\nfunction M(u, v, w) = u^2*v^2*w^2 + u^8 + v^8 + w^8;", "Malgrange", {}, {}, {}, {}, 215, 179, 3, {}},
      {"label A_1\nfunction A_1(z) = z^2;", "Morse function", {"quasi-homogeneous", "simple"}, {}, {}, {}, 1, 1, 1,
       {}},
      {"label A_2\nfunction A_2(z) = z^3;", "A_k series", {"quasi-homogeneous", "simple"}, {}, {}, {}, 2, 2, 1, {}},
      {"label A_3\nfunction A_3(z) = z^4;", "A_k series", {"quasi-homogeneous", "simple"}, {}, {}, {}, 3, 3, 1, {}},
      {"label A_4\nfunction A_4(z) = z^5;", "A_k series", {"quasi-homogeneous", "simple"}, {}, {}, {}, 4, 4, 1, {}},
      // Base germs with their one-parameter stable unfoldings.
      {"label 11_5\nvars x, y;\nparam l;\ngerm x, y^4 + x*y^2 + x^2*y + l*y, l;", "Rieger, germs of the plane", {}, 2,
       2, false, {}, {}, {}, {}},
      {"label 5_2\nvars x, y, z;\nparam l;\ngerm x, y, z^5 + x*z + y^2*z^2 + y*z^3 + l*z^2, l;",
       "Marar-Tari, germs of 3-space", {}, 2, 2, true, {}, {}, {}, {}},
      {"label P_3^2\nvars x, y, z;\nparam l;\ngerm x, y, y*z + z^6 + z^8 + l*z^2, x*z + z^3 + l*z, l;",
       "Houston-Kirk, germs of 3-space into 4-space", {}, 3, 2, false, {}, {}, {}, {}},
      {"label f_1\nvars y;\nparam l;\ngerm y^2, y^3 + l*y, l;", "cusp family (y^2, y^(2k+1))",
       {"quasi-homogeneous", "simple"}, 1, 1, true, {}, {}, {}, {}},
      {"label f_2\nvars y;\nparam l;\ngerm y^2, y^5 + l*y, l;", "cusp family (y^2, y^(2k+1))",
       {"quasi-homogeneous", "simple"}, 2, 1, true, {}, {}, {}, {}},
      {"label f_3\nvars y;\nparam l;\ngerm y^2, y^7 + l*y, l;", "cusp family (y^2, y^(2k+1))",
       {"quasi-homogeneous", "simple"}, 3, 1, true, {}, {}, {}, {}},
      {"label C_3\nvars x, y;\nparam l;\ngerm x, y^2, x*y^3 + x^3*y + l*y, l;", "Mond, simple germs of the plane into 3-space",
       {"quasi-homogeneous", "simple"}, 3, 1, {}, {}, {}, {}, {}},
      {"label S_2\nvars x, y;\nparam l;\ngerm x, y^2, y^3 + x^2*y + l*y, l;", "Mond, simple germs of the plane into 3-space",
       {"quasi-homogeneous", "simple"}, 1, 1, {}, {}, {}, {}, {}},
      {"label S_3\nvars x, y;\nparam l;\ngerm x, y^2, y^3 + x^3*y + l*y, l;", "Mond, simple germs of the plane into 3-space",
       {"quasi-homogeneous", "simple"}, 2, 1, {}, {}, {}, {}, {}},
      {"label F_4\nvars x, y;\nparam l;\ngerm x, y^2, y^5 + x^3*y + l*y, l;", "Mond, simple germs of the plane into 3-space",
       {"quasi-homogeneous", "simple"}, 4, 1, {}, {}, {}, {}, {}},
      {"label F_6\nvars x, y;\nparam l;\ngerm x, y^2, y^5 + x^4*y + l*y, l;", "augmentation of (y^2, y^5) by z^4",
       {"quasi-homogeneous"}, 6, 1, {}, {}, {}, {}, {}},
      // Trivializers.
      {"label cuspidal-edge\nvars X, Y, Z;\ngerm X^3 + X*Y, Y, Z;", "trivializer of the unfolding of C_3",
       {"trivializer"}, {}, {}, {}, {}, {}, {}, 1},
      {"label T_1\nvars X, Y1, Y2, Z;\ngerm Y1, Y2, X^3 + X*Y1 + Z^3, X;", "degree 1 trivializer of an augmentation of C_3",
       {"trivializer"}, {}, {}, {}, {}, {}, {}, 3},
      {"label T_2\nvars X, Y1, Y2, Z;\ngerm Y1, Y2, X^3 + X*Y1 + Z^3;", "degree 2 trivializer of an augmentation of C_3",
       {"trivializer"}, {}, {}, {}, {}, {}, {}, 1},
  };
  std::vector<CatalogEntry> out;
  for (const auto& s : seeds) {
    CatalogEntry e;
    e.spec = parse_germ_spec(s.text);
    e.provenance = s.provenance;
    e.tags = s.tags;
    e.aecod = s.aecod;
    e.delta = s.delta;
    e.cross_substantial = s.cross;
    e.mu = s.mu;
    e.tau = s.tau;
    e.bs = s.bs;
    e.tau_tilde = s.tau_tilde;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view label) {
  std::string key(label);
  constexpr std::string_view suffix = "-opsu";
  if (key.size() > suffix.size() && key.compare(key.size() - suffix.size(), suffix.size(), suffix) == 0)
    key.resize(key.size() - suffix.size());
  for (const auto& e : catalog())
    if (e.spec.label == key) return &e;
  return nullptr;
}

const CatalogEntry& catalog_entry(std::string_view label) {
  if (const CatalogEntry* e = find_catalog_entry(label)) return *e;
  throw DomainError("unknown catalog entry '" + std::string(label) + "'");
}

namespace {

template <class T>
void record(std::vector<CatalogCheck>& out, const std::string& label, const std::string& property,
            const std::optional<T>& expected, const std::function<T()>& compute) {
  if (!expected) return;
  CatalogCheck c{label, property, false, {}};
  try {
    const T got = compute();
    c.ok = got == *expected;
    std::ostringstream os;
    os << std::boolalpha << "expected " << *expected << ", got " << got;
    c.detail = os.str();
  } catch (const Error& e) {
    c.detail = e.what();
  }
  out.push_back(std::move(c));
}

}  // namespace

std::vector<CatalogCheck> verify_catalog(bool include_large, unsigned bound) {
  std::vector<CatalogCheck> out;
  for (const auto& e : catalog()) {
    if (e.has_tag("scale:large") && !include_large) continue;
    const std::string& label = e.spec.label;
    {
      const std::string text = e.spec.to_text();
      const bool same = parse_germ_spec(text).to_text() == text;
      out.push_back(CatalogCheck{label, "reprint", same, same ? "stable" : "differs after a round trip"});
    }
    if (e.spec.has_function()) {
      const FunctionGerm g = e.spec.function();
      record<std::size_t>(out, label, "mu", e.mu, [&] { return milnor_number(g).value(); });
      record<std::size_t>(out, label, "tau", e.tau, [&] { return tjurina_number(g).value(); });
      record<unsigned>(out, label, "bs", e.bs, [&] { return briancon_skoda(g); });
      record<bool>(out, label, "quasi-homogeneous", std::optional<bool>(e.has_tag("quasi-homogeneous")),
                   [&] { return quasihomogeneous_weights(g).has_value(); });
    }
    if (e.spec.has_germ() && e.spec.param) {
      const OnePSU f = e.spec.unfolding();
      std::optional<UnfoldingData> data;
      auto get = [&]() -> const UnfoldingData& {
        if (!data) data.emplace(analyze_unfolding(f, bound));
        return *data;
      };
      record<std::size_t>(out, label, "aecod", e.aecod, [&] { return get().aecod.value(); });
      record<unsigned>(out, label, "delta", e.delta, [&] {
        const auto& d = get().delta;
        if (!d.value) throw MathRefusal("degree of substantiality " + d.to_string());
        return *d.value;
      });
      record<bool>(out, label, "cross-substantial", e.cross_substantial,
                   [&] { return is_cross_substantial(get().lift); });
      record<bool>(out, label, "quasi-homogeneous", std::optional<bool>(e.has_tag("quasi-homogeneous")),
                   [&] { return quasihomogeneous_map_weights(f.unfolding().components()).has_value(); });
    }
    if (e.spec.has_germ() && e.has_tag("trivializer")) {
      const MapGerm t = e.spec.germ();
      record<std::size_t>(out, label, "tau-tilde", e.tau_tilde, [&] { return isosingular_dimension(t); });
    }
  }
  return out;
}

}  // namespace germforge
