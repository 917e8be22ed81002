#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mfc/corpus.hpp"
#include "mfc/institute_score.hpp"
#include "mfc/k_param.hpp"
#include "mfc/perturbation.hpp"
#include "mfc/rational.hpp"
#include "mfc/score.hpp"

namespace mfc {

using Cell = std::variant<std::string, Rational, double, std::int64_t>;

struct Column {
  std::string name;
  int precision = -1;  // decimal places for double cells; -1 uses the renderer default
};

// Rectangular table with typed cells. `notes` carries free-form caption
// lines (warnings, thresholds) that the plain and structured renderers show.
struct ReportTable {
  std::string caption;
  std::vector<std::string> notes;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class TableFormat { plain, delimited, structured };

TableFormat table_format_from_name(std::string_view name);

// Fixed-point rendering, rounding halves away from zero.
std::string format_fixed(double value, int precision);

// precision_override >= 0 forces that many decimals for every double cell.
std::string render_table(const ReportTable& table, TableFormat format,
                         int precision_override = -1);

// Built-in reference tables, regenerated from the formulas on every call:
//   1: author credits and publication totals over a grid of N and k
//   2: the four classical counting scores of a three-institute example
//   3: how more even co-institute splits raise a publication's total
ReportTable reference_table(int which);

// Per-publication scores plus the corpus total. method is one of
// "mfc", "cmfc", "pmfc" (k required) or "classical" (k ignored). A role
// scheme is only valid with method "mfc". An institute absent from the
// corpus yields a zero table with a warning note.
ReportTable score_report(const Corpus& corpus, std::string_view institute,
                         std::string_view method, const std::optional<KParam>& k,
                         const RoleWeightScheme* scheme);

// Sampled author-credit curves for one N: credit as a function of k on
// [1, k_max] and of the geometric-bridge weight lambda on [0, 1].
ReportTable curves_report(std::uint64_t n_authors, std::size_t grid_size, double k_max);

// mfc/cmfc/pmfc side by side for each requested k, with ordering notes.
ReportTable compare_report(const Corpus& corpus, std::string_view institute,
                           const std::vector<KParam>& ks);

struct PerturbAction {
  enum class Kind { uniform, add_entity, add_authors };
  Kind kind = Kind::uniform;
  double amount = 0.0;
  std::size_t index = 0;  // 0-based, add_authors only
};

ReportTable perturb_report(const ParticipationArray& array, const PerturbAction& action,
                           const KParam& k);

// Lorenz curve vertices; with a second array, both curves plus the
// majorization verdict.
ReportTable lorenz_report(const std::vector<double>& values,
                          const std::vector<double>* other);

}  // namespace mfc
