#include "germforge/report.hpp"

#include <atomic>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "germforge/catalog.hpp"
#include "germforge/errors.hpp"
#include "germforge/parse.hpp"

namespace germforge {

using nlohmann::json;

ReportRow report_row(const BoundsReport& r) {
  return ReportRow{r.label, r.lower, r.codim_aug, r.upper, r.refined, std::nullopt};
}

std::string csv_header() { return "label,lower,value,upper,refined"; }

std::string to_csv(const ReportRow& row) {
  if (row.error) {
    std::string msg = *row.error;
    for (char& c : msg)
      if (c == ',' || c == '\n') c = ';';
    return row.label + ",error: " + msg + ",,,";
  }
  return row.label + "," + std::to_string(row.lower) + "," + std::to_string(row.value) + "," +
         std::to_string(row.upper) + "," + std::to_string(row.refined);
}

std::string to_csv(const std::vector<ReportRow>& rows) {
  std::string out = csv_header() + "\n";
  for (const auto& r : rows) out += to_csv(r) + "\n";
  return out;
}

namespace {

std::size_t parse_count(const std::string& field) {
  if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("'" + field + "' is not a non-negative integer", 0);
  try {
    return static_cast<std::size_t>(std::stoull(field));
  } catch (const std::out_of_range&) {
    throw ParseError("'" + field + "' is out of range", 0);
  }
}

}  // namespace

ReportRow parse_csv_row(std::string_view line) {
  std::string text(line);
  if (!text.empty() && text.back() == '\r') text.pop_back();
  // The four numeric fields never contain commas, so split from the right.
  std::vector<std::string> fields;
  std::size_t end = text.size();
  for (int k = 0; k < 4; ++k) {
    const std::size_t comma = text.rfind(',', end == 0 ? 0 : end - 1);
    if (comma == std::string::npos || end == 0) throw ParseError("expected 5 CSV fields in '" + text + "'", 0);
    fields.insert(fields.begin(), text.substr(comma + 1, end - comma - 1));
    end = comma;
  }
  ReportRow row;
  row.label = text.substr(0, end);
  if (row.label.empty()) throw ParseError("empty label in '" + text + "'", 0);
  const std::string marker = "error: ";
  if (fields[0].rfind(marker, 0) == 0 && fields[1].empty() && fields[2].empty() && fields[3].empty()) {
    row.error = fields[0].substr(marker.size());
    return row;
  }
  row.lower = parse_count(fields[0]);
  row.value = parse_count(fields[1]);
  row.upper = parse_count(fields[2]);
  row.refined = parse_count(fields[3]);
  return row;
}

std::vector<ReportRow> parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing CSV header", 0, 1);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != csv_header()) throw ParseError("unexpected CSV header '" + line + "'", 0, 1);
  std::vector<ReportRow> rows;
  std::size_t n = 1;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    try {
      rows.push_back(parse_csv_row(line));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), 0, n);
    }
  }
  return rows;
}

namespace {

json row_json(const ReportRow& r) {
  json j{{"label", r.label}};
  if (r.error) {
    j["error"] = *r.error;
  } else {
    j["lower"] = r.lower;
    j["codim_aug"] = r.value;
    j["upper"] = r.upper;
    j["refined"] = r.refined;
  }
  return j;
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
}

template <class F>
auto with_json_errors(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what(), 0);
  }
}

}  // namespace

std::string to_json(const std::vector<ReportRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(row_json(r));
  return arr.dump(2) + "\n";
}

std::vector<ReportRow> parse_json_rows(std::string_view text) {
  const json arr = parse_json_text(text);
  return with_json_errors([&] {
    if (!arr.is_array()) throw ParseError("expected a JSON array of rows", 0);
    std::vector<ReportRow> rows;
    for (const auto& j : arr) {
      ReportRow r;
      r.label = j.at("label").get<std::string>();
      if (j.contains("error")) {
        r.error = j.at("error").get<std::string>();
      } else {
        r.lower = j.at("lower").get<std::size_t>();
        r.value = j.at("codim_aug").get<std::size_t>();
        r.upper = j.at("upper").get<std::size_t>();
        r.refined = j.at("refined").get<std::size_t>();
      }
      rows.push_back(std::move(r));
    }
    return rows;
  });
}

std::string to_json(const BoundsReport& r) {
  json delta{{"text", r.delta_f.to_string()}, {"bound", r.delta_f.bound}};
  delta["value"] = r.delta_f.value ? json(*r.delta_f.value) : json(nullptr);
  delta["leading_power"] = r.delta_f.leading_power ? json(*r.delta_f.leading_power) : json(nullptr);
  const json j{{"label", r.label},
               {"aecod_f", r.aecod_f},
               {"tau_g", r.tau_g},
               {"mu_g", r.mu_g},
               {"bs_g", r.bs_g},
               {"delta_f", delta},
               {"codim_aug", r.codim_aug},
               {"lower", r.lower},
               {"upper", r.upper},
               {"refined", r.refined},
               {"lower_equality", r.lower_equality},
               {"upper_equality", r.upper_equality},
               {"g_quasihom", r.g_quasihom},
               {"f_substantial", r.f_substantial}};
  return j.dump(2) + "\n";
}

BoundsReport parse_json_bounds(std::string_view text) {
  const json j = parse_json_text(text);
  return with_json_errors([&] {
    BoundsReport r;
    r.label = j.at("label").get<std::string>();
    r.aecod_f = j.at("aecod_f").get<std::size_t>();
    r.tau_g = j.at("tau_g").get<std::size_t>();
    r.mu_g = j.at("mu_g").get<std::size_t>();
    r.bs_g = j.at("bs_g").get<unsigned>();
    const json& d = j.at("delta_f");
    r.delta_f.bound = d.at("bound").get<unsigned>();
    if (!d.at("value").is_null()) r.delta_f.value = d.at("value").get<unsigned>();
    if (!d.at("leading_power").is_null()) r.delta_f.leading_power = d.at("leading_power").get<unsigned>();
    r.codim_aug = j.at("codim_aug").get<std::size_t>();
    r.lower = j.at("lower").get<std::size_t>();
    r.upper = j.at("upper").get<std::size_t>();
    r.refined = j.at("refined").get<std::size_t>();
    r.lower_equality = j.at("lower_equality").get<bool>();
    r.upper_equality = j.at("upper_equality").get<bool>();
    r.g_quasihom = j.at("g_quasihom").get<bool>();
    r.f_substantial = j.at("f_substantial").get<bool>();
    return r;
  });
}

std::string to_text(const std::vector<ReportRow>& rows) {
  std::size_t width = 5;
  for (const auto& r : rows) width = std::max(width, r.label.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "label" << std::right << std::setw(10) << "lower"
     << std::setw(10) << "value" << std::setw(10) << "upper" << std::setw(10) << "refined" << "\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(static_cast<int>(width)) << r.label << std::right;
    if (r.error)
      os << "  error: " << *r.error;
    else
      os << std::setw(10) << r.lower << std::setw(10) << r.value << std::setw(10) << r.upper << std::setw(10)
         << r.refined;
    os << "\n";
  }
  return os.str();
}

std::string Table1Spec::f_label() const {
  std::string f = base;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) f = "A_{F," + chain[i] + "}(" + f + ")";
  return f;
}

const std::vector<Table1Spec>& table1_specs() {
  static const std::vector<Table1Spec> specs = [] {
    struct Seed {
      const char* base;
      std::vector<std::string> chain;
      std::size_t lower, value, upper, refined;
    };
    const std::vector<Seed> seeds = {
        {"11_5", {"DG_3"}, 54, 57, 60, 57},
        {"11_5", {"DG_4"}, 96, 104, 112, 104},
        {"11_5", {"DG_5"}, 150, 165, 180, 165},
        {"11_5", {"M"}, 358, 393, 430, 394},
        {"5_2", {"DG_3"}, 54, 57, 60, 57},
        {"5_2", {"DG_4"}, 96, 104, 112, 104},
        {"5_2", {"DG_5"}, 150, 165, 180, 165},
        {"5_2", {"M"}, 358, 393, 430, 394},
        {"P_3^2", {"DG_3"}, 81, 84, 90, 84},
        {"P_3^2", {"DG_4"}, 144, 152, 168, 152},
        {"P_3^2", {"DG_5"}, 225, 240, 270, 240},
        {"P_3^2", {"M"}, 537, 572, 645, 573},
        {"11_5", {"DG_3", "DG_3"}, 1539, 1629, 1710, 1542},
        {"11_5", {"M", "M"}, 70347, 77908, 84495, 70383},
    };
    std::vector<Table1Spec> out;
    for (const auto& s : seeds) {
      Table1Spec t;
      t.base = s.base;
      t.chain = s.chain;
      t.label = "A_{F," + t.g_label() + "}(" + t.f_label() + ")";
      t.expected = ReportRow{t.label, s.lower, s.value, s.upper, s.refined, std::nullopt};
      t.large = s.chain.size() > 1;
      out.push_back(std::move(t));
    }
    return out;
  }();
  return specs;
}

std::vector<Table1Spec> select_table1(std::string_view selector) {
  const std::string sel = trim(selector);
  std::vector<Table1Spec> out;
  if (sel.empty()) return out;
  const auto& specs = table1_specs();
  if (sel == "all") return specs;
  if (sel == "default") {
    for (const auto& s : specs)
      if (!s.large) out.push_back(s);
    return out;
  }
  for (const auto& s : specs)
    if (s.label == sel) return {s};
  std::string g = sel, f;
  for (const std::string sep : {"×", " x ", " X "}) {
    if (const auto at = sel.find(sep); at != std::string::npos) {
      g = trim(std::string_view(sel).substr(0, at));
      f = trim(std::string_view(sel).substr(at + sep.size()));
      break;
    }
  }
  const CatalogEntry* ge = find_catalog_entry(g);
  if (!ge || !ge->spec.has_function()) throw ParseError("'" + g + "' is not a catalog function", 0);
  for (const auto& s : specs) {
    if (s.g_label() != g) continue;
    if (f.empty() ? !s.large : s.f_label() == f) out.push_back(s);
  }
  if (!f.empty() && out.empty()) throw ParseError("no table row augments '" + f + "' by '" + g + "'", 0);
  return out;
}

FunctionGerm rename_apart(const FunctionGerm& g, const std::vector<std::string>& taken) {
  std::vector<std::string> used = taken;
  std::vector<std::string> names;
  bool changed = false;
  for (const auto& n : g.ring().names()) {
    const std::string fresh = fresh_name(n, used);
    changed = changed || fresh != n;
    used.push_back(fresh);
    names.push_back(fresh);
  }
  if (!changed) return g;
  const RingContext ring(names, g.ring().order());
  std::map<std::string, Polynomial> assign;
  for (std::size_t i = 0; i < names.size(); ++i)
    assign.emplace(g.ring().name(i), Polynomial::variable(ring, names[i]));
  return FunctionGerm(substitute(g.poly(), assign, ring));
}

std::pair<OnePSU, FunctionGerm> table1_inputs(const Table1Spec& spec) {
  OnePSU f = catalog_entry(spec.base).spec.unfolding();
  for (std::size_t i = 0; i < spec.chain.size(); ++i) {
    const FunctionGerm g = rename_apart(catalog_entry(spec.chain[i]).spec.function(), f.unfolding().source().names());
    if (i + 1 == spec.chain.size()) return {f, g};
    f = natural_opsu(f, g);
  }
  throw DomainError("table row '" + spec.label + "' has no augmenting function");
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  for (auto& t : pool) t.join();
}

std::vector<ReportRow> compute_table1(const std::vector<Table1Spec>& rows, unsigned jobs, unsigned bound) {
  // Distinct unfoldings first, keyed by the augmented germ's label.
  std::vector<std::string> keys;
  std::map<std::string, std::size_t> index;
  for (const auto& r : rows)
    if (index.emplace(r.f_label(), keys.size()).second) keys.push_back(r.f_label());
  std::vector<std::optional<UnfoldingData>> data(keys.size());
  std::vector<std::string> failure(keys.size());
  parallel_for(keys.size(), jobs, [&](std::size_t k) {
    for (const auto& r : rows) {
      if (r.f_label() != keys[k]) continue;
      try {
        data[k].emplace(analyze_unfolding(table1_inputs(r).first, bound));
      } catch (const Error& e) {
        failure[k] = e.what();
      }
      return;
    }
  });
  std::vector<ReportRow> out(rows.size());
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    const Table1Spec& spec = rows[i];
    const std::size_t k = index.at(spec.f_label());
    ReportRow& row = out[i];
    row.label = spec.label;
    if (!data[k]) {
      row.error = failure[k];
      return;
    }
    try {
      row = report_row(bounds_report(*data[k], table1_inputs(spec).second, spec.label));
    } catch (const Error& e) {
      row.error = e.what();
    }
  });
  return out;
}

}  // namespace germforge
