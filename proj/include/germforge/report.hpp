#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "germforge/codim_engine.hpp"

namespace germforge {

/// One line of the codimension table: label, aecod(f)tau(g), the augmentation
/// codimension, aecod(f)mu(g), aecod(f)tau(g)+mu(g)-tau(g). A row whose
/// computation failed carries the message in `error` and zero numbers.
struct ReportRow {
  std::string label;
  std::size_t lower = 0;
  std::size_t value = 0;
  std::size_t upper = 0;
  std::size_t refined = 0;
  std::optional<std::string> error;

  bool operator==(const ReportRow&) const = default;
};

ReportRow report_row(const BoundsReport& r);

/// "label,lower,value,upper,refined". Labels are written unquoted (they may
/// contain commas) and fields are split from the right when parsing. An error
/// row is "label,error: message,,,", with commas in the message replaced by
/// semicolons.
std::string csv_header();
std::string to_csv(const ReportRow& row);
std::string to_csv(const std::vector<ReportRow>& rows);
/// Throws ParseError.
ReportRow parse_csv_row(std::string_view line);
/// Expects the header line first.
std::vector<ReportRow> parse_csv(std::string_view text);

/// JSON array of objects keyed like BoundsReport: label, lower, codim_aug,
/// upper, refined, plus error for failed rows.
std::string to_json(const std::vector<ReportRow>& rows);
std::vector<ReportRow> parse_json_rows(std::string_view text);

/// One JSON object with every BoundsReport field.
std::string to_json(const BoundsReport& r);
BoundsReport parse_json_bounds(std::string_view text);

/// Fixed-width text table with a header line.
std::string to_text(const std::vector<ReportRow>& rows);

/// A row of the reference codimension table. The augmented germ is built from
/// the catalog unfolding `base` by augmenting with every function of `chain`
/// but the last (through natural unfoldings); the last function is the g of
/// the row.
struct Table1Spec {
  std::string label;
  std::string base;
  std::vector<std::string> chain;
  ReportRow expected;
  bool large = false;

  const std::string& g_label() const { return chain.back(); }
  /// Label of the augmented germ f, e.g. "11_5" or "A_{F,M}(11_5)".
  std::string f_label() const;
};

/// All fourteen rows in reference order; the two iterated augmentations are
/// tagged large.
const std::vector<Table1Spec>& table1_specs();

/// Selectors: "" (nothing), "default" (every row not tagged large), "all",
/// "G" (the non-large rows augmented by G), "G x F" or "G × F" (the rows
/// with that g and that f), or an exact row label. Throws ParseError for
/// selectors matching no catalog function or germ.
std::vector<Table1Spec> select_table1(std::string_view selector);

/// Computes the selected rows on `jobs` threads. Each distinct unfolding is
/// analysed once. Output order follows `rows`; failures become error rows.
std::vector<ReportRow> compute_table1(const std::vector<Table1Spec>& rows, unsigned jobs = 1,
                                      unsigned bound = default_substantiality_bound());

/// The unfolding whose base is the f of `spec`, and the row's function with
/// variables renamed apart from it.
std::pair<OnePSU, FunctionGerm> table1_inputs(const Table1Spec& spec);

/// Runs `task(i)` for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task);

/// g with its variables renamed to avoid `taken`.
FunctionGerm rename_apart(const FunctionGerm& g, const std::vector<std::string>& taken);

}  // namespace germforge
