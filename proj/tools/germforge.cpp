// Command-line front end: one subcommand per computation.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "germforge/catalog.hpp"
#include "germforge/codim_engine.hpp"
#include "germforge/discriminant_geometry.hpp"
#include "germforge/errors.hpp"
#include "germforge/liftable_fields.hpp"
#include "germforge/parse.hpp"
#include "germforge/report.hpp"

namespace gf = germforge;
using nlohmann::json;

namespace {

enum class Format { Text, Csv, Json };

struct Options {
  std::string format = "text";
  unsigned bound = 0;
  unsigned jobs = 1;
  std::string vars;
  std::string param;
  std::string g, germ, opsu, h, label, rows = "default";
  std::size_t p = 0, s = 0, branches = 1;
  unsigned n = 0;
  bool natural = false, global = false, verify = false, large = false, witness = false;

  Format fmt() const { return format == "csv" ? Format::Csv : format == "json" ? Format::Json : Format::Text; }
};

struct Field {
  std::string key;
  json value;
};

std::string plain(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit(const std::vector<Field>& fields, Format fmt) {
  if (fmt == Format::Json) {
    json j = json::object();
    for (const auto& f : fields) j[f.key] = f.value;
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    for (std::size_t i = 0; i < fields.size(); ++i) std::cout << (i ? "," : "") << fields[i].key;
    std::cout << "\n";
    for (std::size_t i = 0; i < fields.size(); ++i) std::cout << (i ? "," : "") << plain(fields[i].value);
    std::cout << "\n";
  } else if (fields.size() == 1) {
    std::cout << plain(fields[0].value) << "\n";
  } else {
    for (const auto& f : fields) std::cout << f.key << ": " << plain(f.value) << "\n";
  }
}

// Variables in order of first appearance, for literals given without --vars.
std::vector<std::string> infer_vars(const std::string& text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      const std::string name = text.substr(i, j - i);
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

std::vector<std::string> var_list(const Options& o, const std::string& literal) {
  if (o.vars.empty()) return infer_vars(literal);
  std::vector<std::string> out;
  for (const auto& v : gf::split_top_level(o.vars)) out.push_back(gf::trim(v));
  return out;
}

bool has_prefix(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

std::string require(const std::string& value, const char* option) {
  if (value.empty()) throw gf::ParseError(std::string("missing ") + option, 0);
  return value;
}

struct Resolved {
  gf::GermSpec spec;
  std::string label;
};

std::optional<Resolved> named_spec(const std::string& input) {
  if (has_prefix(input, "catalog:")) {
    const std::string label = input.substr(8);
    return Resolved{gf::catalog_entry(label).spec, label};
  }
  if (has_prefix(input, "file:")) {
    gf::GermSpec spec = gf::load_germ_spec(input.substr(5));
    const std::string label = spec.label;
    return Resolved{std::move(spec), label};
  }
  return std::nullopt;
}

std::pair<gf::FunctionGerm, std::string> function_input(const Options& o) {
  const std::string in = require(o.g, "--g");
  if (auto r = named_spec(in)) return {r->spec.function(), r->label.empty() ? "g" : r->label};
  return {gf::FunctionGerm(gf::parse_polynomial(in, gf::RingContext(var_list(o, in)))), "g"};
}

gf::MapGerm literal_germ(const Options& o, const std::string& in) {
  std::vector<std::string> vars = var_list(o, in);
  if (!o.param.empty()) {
    vars.erase(std::remove(vars.begin(), vars.end(), o.param), vars.end());
    vars.push_back(o.param);
  }
  const gf::RingContext ring(vars);
  std::vector<gf::Polynomial> comps;
  for (const auto& c : gf::split_top_level(in)) comps.push_back(gf::parse_polynomial(c, ring));
  return gf::MapGerm(ring, std::move(comps));
}

std::pair<gf::OnePSU, std::string> opsu_input(const Options& o) {
  const std::string in = require(o.opsu, "--opsu");
  if (auto r = named_spec(in)) {
    std::string label = r->label;
    if (label.size() > 5 && label.compare(label.size() - 5, 5, "-opsu") == 0) label.resize(label.size() - 5);
    return {r->spec.unfolding(), label.empty() ? "f" : label};
  }
  return {gf::OnePSU(literal_germ(o, in)), "f"};
}

// catalog:LABEL gives the base germ of an unfolding entry, catalog:LABEL-opsu
// the unfolding itself.
gf::MapGerm germ_input(const Options& o) {
  const std::string in = require(o.germ, "--germ");
  if (auto r = named_spec(in)) {
    const bool whole = !has_prefix(in, "catalog:") || in.size() < 5 || in.compare(in.size() - 5, 5, "-opsu") == 0;
    if (r->spec.param && !whole) return r->spec.unfolding().base();
    return r->spec.germ();
  }
  return literal_germ(o, in);
}

gf::HypersurfaceEquation hypersurface_input(const Options& o) {
  if (!o.h.empty()) {
    const gf::Polynomial p = gf::parse_polynomial(o.h, gf::RingContext(var_list(o, o.h)));
    if (p.is_zero() || p.constant_term() != 0)
      throw gf::DomainError("the hypersurface must be a nonzero polynomial vanishing at 0");
    const gf::MapGerm id(p.ring(), [&] {
      std::vector<gf::Polynomial> c;
      for (std::size_t i = 0; i < p.ring().nvars(); ++i) c.push_back(gf::Polynomial::variable(p.ring(), i));
      return c;
    }());
    return gf::HypersurfaceEquation{gf::squarefree_part(p), id, true, true};
  }
  return gf::defining_equation(germ_input(o));
}

std::string vector_text(const gf::VectorTuple& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.components.size(); ++i) s += (i ? ", " : "") + v.components[i].to_string();
  return s + ")";
}

json rational_json(const gf::Rational& q) { return gf::rational_to_string(q); }

int run(const std::string& cmd, const Options& o) {
  const Format fmt = o.fmt();
  const unsigned bound = o.bound ? o.bound : gf::default_substantiality_bound();

  if (cmd == "mu") {
    emit({{"mu", gf::milnor_number(function_input(o).first).value()}}, fmt);
  } else if (cmd == "tau") {
    emit({{"tau", gf::tjurina_number(function_input(o).first).value()}}, fmt);
  } else if (cmd == "bs") {
    emit({{"bs", gf::briancon_skoda(function_input(o).first)}}, fmt);
  } else if (cmd == "weights") {
    const auto g = function_input(o).first;
    const auto w = gf::quasihomogeneous_weights(g);
    json ws = json::array();
    if (w)
      for (const auto& q : w->weights) ws.push_back(rational_json(q));
    std::vector<Field> fields{{"quasihomogeneous", w.has_value()}};
    if (fmt == Format::Json)
      fields.push_back({"weights", w ? ws : json(nullptr)});
    else if (w) {
      std::string t;
      for (std::size_t i = 0; i < w->weights.size(); ++i)
        t += (i ? " " : "") + g.ring().name(i) + "=" + gf::rational_to_string(w->weights[i]);
      fields.push_back({"weights", t});
    }
    emit(fields, fmt);
  } else if (cmd == "augment") {
    const auto [f, fl] = opsu_input(o);
    const auto [g0, gl] = function_input(o);
    const gf::FunctionGerm g = gf::rename_apart(g0, f.unfolding().source().names());
    const gf::MapGerm a = o.natural ? gf::natural_opsu(f, g).unfolding() : gf::augment(f, g);
    emit({{"germ", a.to_string()}}, fmt);
  } else if (cmd == "image" || cmd == "discriminant") {
    const gf::MapGerm f = germ_input(o);
    const auto h = cmd == "image" ? gf::image_equation(f) : gf::discriminant_equation(f);
    emit({{"equation", h.poly.to_string()}, {"vanishing", h.vanishing}}, fmt);
  } else if (cmd == "derlog") {
    const auto d = gf::derlog(hypersurface_input(o), o.global ? gf::DerlogScope::Global : gf::DerlogScope::Local);
    json gens = json::array();
    for (std::size_t i = 0; i < d.generators.size(); ++i) {
      json comps = json::array();
      for (const auto& c : d.generators[i].components) comps.push_back(c.to_string());
      gens.push_back({{"field", comps}, {"cofactor", d.cofactors[i].to_string()}});
    }
    if (fmt == Format::Text) {
      std::cout << "H = " << d.divisor.poly.to_string() << "\n";
      for (std::size_t i = 0; i < d.generators.size(); ++i)
        std::cout << vector_text(d.generators[i]) << "  cofactor " << d.cofactors[i].to_string() << "\n";
    } else if (fmt == Format::Csv) {
      std::cout << "index,field,cofactor\n";
      for (std::size_t i = 0; i < d.generators.size(); ++i)
        std::cout << i << "," << vector_text(d.generators[i]) << "," << d.cofactors[i].to_string() << "\n";
    } else {
      std::cout << json{{"equation", d.divisor.poly.to_string()}, {"generators", gens}}.dump(2) << "\n";
    }
  } else if (cmd == "lift-ideal") {
    const gf::LiftIdeal lift = gf::lift_ideal(opsu_input(o).first);
    json basis = json::array();
    std::string text;
    for (const auto& b : lift.ideal.basis()) {
      basis.push_back(b.to_string());
      text += (text.empty() ? "" : "\n") + b.to_string();
    }
    if (lift.ideal.noether()) text += "\n(with every monomial of degree " + std::to_string(*lift.ideal.noether()) + ")";
    std::vector<Field> fields{{"ring", [&] {
                                 std::string r;
                                 for (const auto& n : lift.ring().names()) r += (r.empty() ? "" : " ") + n;
                                 return r;
                               }()}};
    fields.push_back({"basis", fmt == Format::Json ? basis : json(text)});
    if (lift.ideal.noether()) fields.push_back({"noether", *lift.ideal.noether()});
    if (fmt == Format::Text)
      std::cout << "ring: " << plain(fields[0].value) << "\n" << text << "\n";
    else
      emit(fields, fmt);
  } else if (cmd == "delta-sub") {
    const auto d = gf::substantiality_degree(opsu_input(o).first, bound);
    emit({{"delta", d.to_string()}, {"substantial", d.value && *d.value == 1}}, fmt);
    if (d.is_infinite()) return 2;
  } else if (cmd == "cross-sub") {
    const gf::LiftIdeal lift = gf::lift_ideal(opsu_input(o).first);
    std::vector<Field> fields{{"cross_substantial", gf::is_cross_substantial(lift)},
                              {"jxh", gf::jxh_test(lift.derlog.divisor)}};
    if (o.witness) {
      const auto w = gf::cross_substantiality_witness(lift);
      fields.push_back({"witness", w ? json(vector_text(w->field)) : json(nullptr)});
    }
    emit(fields, fmt);
  } else if (cmd == "tau-tilde") {
    emit({{"tau_tilde", gf::isosingular_dimension(germ_input(o))}}, fmt);
  } else if (cmd == "aug-cert") {
    const gf::MapGerm t = germ_input(o);
    const std::size_t tt = gf::isosingular_dimension(t);
    emit({{"tau_tilde", tt}, {"certificate", gf::augmentation_certificate(t, o.p, o.s)}}, fmt);
  } else if (cmd == "codim") {
    const auto [f, fl] = opsu_input(o);
    if (o.g.empty()) {
      emit({{"aecod", gf::aecod_damon(f).value()}}, fmt);
    } else {
      const gf::FunctionGerm g = gf::rename_apart(function_input(o).first, f.unfolding().source().names());
      emit({{"codim", gf::augmentation_codim(f, g).value()}}, fmt);
    }
  } else if (cmd == "bounds") {
    const auto [f, fl] = opsu_input(o);
    const auto [g0, gl] = function_input(o);
    const gf::FunctionGerm g = gf::rename_apart(g0, f.unfolding().source().names());
    const std::string label = o.label.empty() ? "A_{F," + gl + "}(" + fl + ")" : o.label;
    const gf::BoundsReport r = gf::bounds_report(gf::analyze_unfolding(f, bound), g, label);
    if (fmt == Format::Csv) {
      std::cout << gf::to_csv(gf::report_row(r)) << "\n";
    } else if (fmt == Format::Json) {
      std::cout << gf::to_json(r);
    } else {
      emit({{"label", r.label},
            {"aecod_f", r.aecod_f},
            {"mu_g", r.mu_g},
            {"tau_g", r.tau_g},
            {"bs_g", r.bs_g},
            {"delta_f", r.delta_f.to_string()},
            {"lower", r.lower},
            {"codim_aug", r.codim_aug},
            {"upper", r.upper},
            {"refined", r.refined},
            {"lower_equality", r.lower_equality},
            {"upper_equality", r.upper_equality}},
           fmt);
    }
  } else if (cmd == "table1") {
    const auto rows = gf::compute_table1(gf::select_table1(o.rows), o.jobs, bound);
    std::cout << (fmt == Format::Csv ? gf::to_csv(rows) : fmt == Format::Json ? gf::to_json(rows) : gf::to_text(rows));
    for (const auto& r : rows)
      if (r.error) return 2;
  } else if (cmd == "plane-curve") {
    const auto r = gf::plane_curve_report(function_input(o).first, o.branches);
    emit({{"mu", r.mu},
          {"tau", r.tau},
          {"branches", r.branches},
          {"delta", r.delta},
          {"image_milnor", r.image_milnor},
          {"aecod", r.aecod},
          {"quotient", rational_json(r.quotient)}},
         fmt);
  } else if (cmd == "conj2-bound") {
    const auto c = gf::conjecture2_bound(o.n);
    json values = json::object();
    std::string text;
    for (const auto& [k, v] : c.values) {
      values[std::to_string(k)] = v;
      text += (text.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(v);
    }
    emit({{"n", c.n},
          {"values", fmt == Format::Json ? values : json(text)},
          {"max", c.max},
          {"bound", rational_json(c.bound)},
          {"attained", c.attained}},
         fmt);
  } else if (cmd == "catalog") {
    if (o.verify) {
      const auto checks = gf::verify_catalog(o.large, bound);
      bool ok = true;
      json arr = json::array();
      if (fmt == Format::Csv) std::cout << "label,property,ok,detail\n";
      for (const auto& c : checks) {
        ok = ok && c.ok;
        if (fmt == Format::Json)
          arr.push_back({{"label", c.label}, {"property", c.property}, {"ok", c.ok}, {"detail", c.detail}});
        else if (fmt == Format::Csv)
          std::cout << c.label << "," << c.property << "," << (c.ok ? "true" : "false") << "," << c.detail << "\n";
        else
          std::cout << (c.ok ? "ok    " : "FAIL  ") << c.label << " " << c.property << ": " << c.detail << "\n";
      }
      if (fmt == Format::Json) std::cout << arr.dump(2) << "\n";
      return ok ? 0 : 2;
    }
    json arr = json::array();
    for (const auto& e : gf::catalog()) {
      std::string tags;
      for (const auto& t : e.tags) tags += (tags.empty() ? "" : " ") + t;
      const std::string what = e.spec.has_function() ? "function" : e.spec.param ? "unfolding" : "germ";
      if (fmt == Format::Text)
        std::cout << e.spec.label << "  [" << what << "] " << e.provenance << (tags.empty() ? "" : "  {" + tags + "}")
                  << "\n";
      arr.push_back({{"label", e.spec.label}, {"kind", what}, {"provenance", e.provenance}, {"tags", tags},
                     {"spec", e.spec.to_text()}});
    }
    if (fmt == Format::Json) std::cout << arr.dump(2) << "\n";
    if (fmt == Format::Csv) {
      std::cout << "label,kind,tags\n";
      for (const auto& j : arr)
        std::cout << plain(j["label"]) << "," << plain(j["kind"]) << "," << plain(j["tags"]) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of map-germ augmentations: codimensions, bounds, liftable fields."};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--bound", o.bound, "Search bound for the degree of substantiality (default GERMFORGE_BOUND or 32)")
      ->check(CLI::Range(1u, 100000u));
  app.add_option("--jobs", o.jobs, "Worker threads for table rows")->check(CLI::Range(1u, 256u));

  const char* input_help = "catalog:LABEL, file:PATH (germ spec) or a literal";
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  auto with_vars = [&](CLI::App* sub) {
    sub->add_option("--vars", o.vars, "Comma-separated variables of a literal (default: order of appearance)");
  };
  auto with_g = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--g", o.g, std::string("Function germ: ") + input_help);
    if (required) opt->required();
    with_vars(sub);
  };
  auto with_opsu = [&](CLI::App* sub) {
    sub->add_option("--opsu", o.opsu, std::string("Unfolding: ") + input_help)->required();
    sub->add_option("--param", o.param, "Parameter of a literal unfolding (default: last variable)");
    with_vars(sub);
  };
  auto with_germ = [&](CLI::App* sub) {
    sub->add_option("--germ", o.germ, std::string("Map-germ: ") + input_help)->required();
    with_vars(sub);
  };

  with_g(add("mu", "Milnor number"));
  with_g(add("tau", "Tjurina number"));
  with_g(add("bs", "Briancon-Skoda exponent"));
  with_g(add("weights", "Quasi-homogeneous weights in the given coordinates"));
  {
    auto* s = add("augment", "Augmentation of an unfolding by a function");
    with_opsu(s);
    s->add_option("--g", o.g, "Augmenting function")->required();
    s->add_flag("--natural", o.natural, "Print the natural unfolding of the augmentation instead");
  }
  with_germ(add("image", "Defining equation of the image (n -> n+1)"));
  with_germ(add("discriminant", "Defining equation of the discriminant (n >= p)"));
  {
    auto* s = add("derlog", "Generators of the logarithmic vector fields");
    s->add_option("--germ", o.germ, "Map-germ whose image or discriminant is used");
    s->add_option("--equation", o.h, "Hypersurface equation given directly");
    s->add_flag("--global", o.global, "Generate over the polynomial ring instead of the local ring");
    with_vars(s);
  }
  with_opsu(add("lift-ideal", "Ideal of last components of liftable fields"));
  with_opsu(add("delta-sub", "Degree of substantiality"));
  {
    auto* s = add("cross-sub", "Cross-substantiality test");
    with_opsu(s);
    s->add_flag("--witness", o.witness, "Also print a witnessing liftable field");
  }
  with_germ(add("tau-tilde", "Dimension of the isosingular locus"));
  {
    auto* s = add("aug-cert", "Augmentation certificate: tau-tilde(T) >= p - s");
    with_germ(s);
    s->add_option("--p", o.p, "Target dimension of the base germ")->required();
    s->add_option("--s", o.s, "Number of trivialized parameters")->required();
  }
  {
    auto* s = add("codim", "A_e-codimension of the base germ, or of an augmentation with --g");
    with_opsu(s);
    s->add_option("--g", o.g, "Augmenting function");
  }
  {
    auto* s = add("bounds", "Codimension of an augmentation with its bounds");
    with_opsu(s);
    s->add_option("--g", o.g, "Augmenting function")->required();
    s->add_option("--label", o.label, "Row label");
  }
  add("table1", "Reference codimension table")
      ->add_option("--rows", o.rows, "Row selector: default, all, G, 'G x F' or a row label");
  {
    auto* s = add("plane-curve", "Plane-curve codimension quotient");
    with_g(s);
    s->add_option("--branches", o.branches, "Number of branches")->check(CLI::PositiveNumber);
  }
  add("conj2-bound", "Maximum of (k+1)(n-k) against (n+1)^2/4")
      ->add_option("--n", o.n, "Dimension n >= 2")
      ->required();
  {
    auto* s = add("catalog", "List the built-in catalog");
    s->add_flag("--verify", o.verify, "Recompute every recorded invariant");
    s->add_flag("--large", o.large, "Include entries tagged scale:large");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, o);
  } catch (const gf::MathRefusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const gf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const gf::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const gf::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
