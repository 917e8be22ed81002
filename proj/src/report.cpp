#include "mfc/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

#include "mfc/author_credit.hpp"
#include "mfc/lorenz.hpp"

namespace mfc {

namespace {

constexpr int kDefaultPrecision = 2;

std::string compact_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return buf;
}

int resolve_precision(const Column& column, int precision_override) {
  if (precision_override >= 0) return precision_override;
  if (column.precision >= 0) return column.precision;
  return kDefaultPrecision;
}

std::string cell_text(const Cell& cell, int precision) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* r = std::get_if<Rational>(&cell)) return r->str();
  if (const auto* d = std::get_if<double>(&cell)) return format_fixed(*d, precision);
  return std::to_string(std::get<std::int64_t>(cell));
}

bool numeric_cell(const Cell& cell) { return !std::holds_alternative<std::string>(cell); }

Cell score_cell(const Score& score) {
  if (score.is_exact()) return score.rational();
  return score.value();
}

Cell count_cell(double count) {
  if (count == std::floor(count) && std::abs(count) < 1e15)
    return static_cast<std::int64_t>(count);
  return count;
}

char relation(const Score& a, const Score& b) {
  if (a.is_exact() && b.is_exact()) {
    if (a.rational() == b.rational()) return '=';
    return a.rational() < b.rational() ? '<' : '>';
  }
  const double x = a.value();
  const double y = b.value();
  if (std::abs(x - y) <= 1e-12 * std::max({1.0, std::abs(x), std::abs(y)})) return '=';
  return x < y ? '<' : '>';
}

ReportTable author_credit_table() {
  const std::vector<std::uint64_t> author_counts = {1, 2, 3, 5, 10, 100};
  const std::vector<KParam> ks = {KParam::finite(1),  KParam::finite(2), KParam::finite(3),
                                  KParam::finite(5),  KParam::finite(10), KParam::infinite()};
  ReportTable table;
  table.caption = "Author credit and publication total credit by author count n and exponent k";
  table.columns.push_back({"quantity", -1});
  table.columns.push_back({"k", -1});
  for (const auto n : author_counts) table.columns.push_back({"n_" + std::to_string(n), 2});
  for (const auto& k : ks) {
    std::vector<Cell> row = {std::string("credit"), k.str()};
    for (const auto n : author_counts) row.emplace_back(author_credit(n, k));
    table.rows.push_back(std::move(row));
  }
  for (const auto& k : ks) {
    std::vector<Cell> row = {std::string("total"), k.str()};
    for (const auto n : author_counts) row.emplace_back(article_total(n, k));
    table.rows.push_back(std::move(row));
  }
  return table;
}

ReportTable classical_example_table() {
  Publication publication;
  publication.id = "example";
  const std::vector<std::pair<std::string, int>> affiliation = {{"A", 4}, {"B", 2}, {"C", 1}};
  int author_index = 0;
  for (const auto& [institute, count] : affiliation)
    for (int i = 0; i < count; ++i)
      publication.byline.push_back({"a" + std::to_string(++author_index), institute, {}});

  const auto scores = classical_scores(publication);
  ReportTable table;
  table.caption =
      "Classical counting scores for one 7-author publication: 4 authors from A, 2 from B, 1 "
      "from C";
  table.columns = {{"method", -1}, {"A", -1}, {"B", -1}, {"C", -1}, {"total", -1}};

  const auto add_row = [&](std::string_view name, auto field) {
    std::vector<Cell> row = {std::string(name)};
    Rational total(0);
    for (const auto& [institute, s] : scores) {
      const Rational value = field(s);
      row.emplace_back(value);
      total += value;
    }
    row.emplace_back(total);
    table.rows.push_back(std::move(row));
  };
  add_row("complete", [](const ClassicalScores& s) { return s.complete; });
  add_row("fractionalized_complete",
          [](const ClassicalScores& s) { return s.fractionalized_complete; });
  add_row("whole", [](const ClassicalScores& s) { return s.whole; });
  add_row("fractionalized_whole",
          [](const ClassicalScores& s) { return s.fractionalized_whole; });
  return table;
}

ReportTable evenness_table() {
  const std::vector<std::array<long long, 4>> splits = {
      {2, 6, 1, 1}, {2, 5, 2, 1}, {2, 4, 3, 1}, {2, 4, 2, 2}, {2, 3, 3, 2}};
  const KParam k = KParam::finite(2);
  ReportTable table;
  table.caption =
      "Scores at k = 2 for a 10-author publication split over four institutes; the target "
      "institute g always holds 2 authors while the others rebalance";
  table.columns = {{"authors_g", -1},  {"authors_i2", -1}, {"authors_i3", -1},
                   {"authors_i4", -1}, {"mfc2_g", 3},      {"mfc2_i2", 3},
                   {"mfc2_i3", 3},     {"mfc2_i4", 3},     {"sum", 3},
                   {"percentage", 1}};
  for (const auto& split : splits) {
    std::vector<double> shares;
    shares.reserve(split.size());
    for (const auto count : split) shares.push_back(static_cast<double>(count) / 10.0);
    std::vector<Cell> row;
    for (const auto count : split) row.emplace_back(static_cast<std::int64_t>(count));
    for (const auto share : shares) row.emplace_back(k.root(share));
    row.emplace_back(diversity_sum(shares, k));
    row.emplace_back(percentage_of_total(shares[0], shares, k));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace

TableFormat table_format_from_name(std::string_view name) {
  if (name == "plain") return TableFormat::plain;
  if (name == "delimited") return TableFormat::delimited;
  if (name == "structured") return TableFormat::structured;
  throw std::invalid_argument("unknown table format: '" + std::string(name) + "'");
}

std::string format_fixed(double value, int precision) {
  if (precision < 0) precision = 0;
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  const double scaled = value * std::pow(10.0, precision);
  if (std::abs(scaled) >= 9.0e18) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
    return buf;
  }
  const long long rounded = std::llround(scaled);  // ties away from zero
  const bool negative = rounded < 0;
  const unsigned long long magnitude =
      negative ? static_cast<unsigned long long>(-(rounded + 1)) + 1ULL
               : static_cast<unsigned long long>(rounded);
  std::string digits = std::to_string(magnitude);
  if (precision > 0) {
    if (digits.size() <= static_cast<std::size_t>(precision))
      digits.insert(0, static_cast<std::size_t>(precision) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(precision), ".");
  }
  if (negative && magnitude != 0) digits.insert(0, "-");
  return digits;
}

std::string render_table(const ReportTable& table, TableFormat format,
                         int precision_override) {
  std::vector<std::vector<std::string>> cells;
  cells.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    std::vector<std::string> rendered;
    rendered.reserve(row.size());
    for (std::size_t c = 0; c < row.size(); ++c)
      rendered.push_back(cell_text(row[c], resolve_precision(table.columns[c],
                                                             precision_override)));
    cells.push_back(std::move(rendered));
  }

  if (format == TableFormat::delimited) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out += '\t';
      out += table.columns[c].name;
    }
    out += '\n';
    for (const auto& row : cells) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += '\t';
        out += row[c];
      }
      out += '\n';
    }
    return out;
  }

  if (format == TableFormat::structured) {
    nlohmann::json doc;
    doc["caption"] = table.caption;
    if (!table.notes.empty()) doc["notes"] = table.notes;
    nlohmann::json columns = nlohmann::json::array();
    for (const auto& column : table.columns) columns.push_back(column.name);
    doc["columns"] = std::move(columns);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : cells) rows.push_back(row);
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
  }

  // plain
  std::vector<std::size_t> widths(table.columns.size(), 0);
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    widths[c] = table.columns[c].name.size();
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());

  std::string out;
  if (!table.caption.empty()) out += table.caption + "\n";
  for (const auto& note : table.notes) out += note + "\n";
  if (!table.caption.empty() || !table.notes.empty()) out += "\n";

  const auto append_padded = [&](const std::string& text, std::size_t width, bool right) {
    if (right && text.size() < width) out.append(width - text.size(), ' ');
    out += text;
    if (!right && text.size() < width) out.append(width - text.size(), ' ');
  };
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += "  ";
    append_padded(table.columns[c].name, widths[c], false);
  }
  out += '\n';
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      if (c) out += "  ";
      append_padded(cells[r][c], widths[c], numeric_cell(table.rows[r][c]));
    }
    out += '\n';
  }
  return out;
}

ReportTable reference_table(int which) {
  switch (which) {
    case 1: return author_credit_table();
    case 2: return classical_example_table();
    case 3: return evenness_table();
    default: throw std::invalid_argument("reference table must be 1, 2 or 3");
  }
}

ReportTable score_report(const Corpus& corpus, std::string_view institute,
                         std::string_view method, const std::optional<KParam>& k,
                         const RoleWeightScheme* scheme) {
  if (scheme && method != "mfc")
    throw std::invalid_argument("a role scheme only applies to method 'mfc'");

  ReportTable table;
  if (!corpus.has_institute(institute))
    table.notes.push_back("warning: institute '" + std::string(institute) +
                          "' does not appear in the corpus");

  if (method == "classical") {
    table.caption = "Classical counting scores for institute '" + std::string(institute) + "'";
    table.columns = {{"publication", -1},
                     {"complete", -1},
                     {"fractionalized_complete", -1},
                     {"whole", -1},
                     {"fractionalized_whole", -1}};
    ClassicalScores totals;
    for (const auto& publication : corpus.publications()) {
      const auto scores = classical_scores(publication);
      ClassicalScores s;
      if (const auto it = scores.find(std::string(institute)); it != scores.end())
        s = it->second;
      else
        s = {Rational(0), Rational(0), Rational(0), Rational(0)};
      table.rows.push_back({publication.id, s.complete, s.fractionalized_complete, s.whole,
                            s.fractionalized_whole});
      totals.complete += s.complete;
      totals.fractionalized_complete += s.fractionalized_complete;
      totals.whole += s.whole;
      totals.fractionalized_whole += s.fractionalized_whole;
    }
    table.rows.push_back({std::string("total"), totals.complete,
                          totals.fractionalized_complete, totals.whole,
                          totals.fractionalized_whole});
    return table;
  }

  const CountingMethod counting = counting_method_from_name(method);
  if (!k) throw std::invalid_argument("k is required for method '" + std::string(method) + "'");

  table.caption = std::string(counting_method_name(counting)) + " scores for institute '" +
                  std::string(institute) + "' at k = " + k->str();
  if (scheme) table.caption += " (role-weighted shares)";
  table.columns = {{"publication", -1}, {"score", -1}};
  Score total;
  for (const auto& publication : corpus.publications()) {
    const Score score = scheme
                            ? weighted_publication_score(publication, institute, *k, *scheme)
                            : publication_score(publication, institute, counting, *k);
    table.rows.push_back({publication.id, score_cell(score)});
    total += score;
  }
  table.rows.push_back({std::string("total"), score_cell(total)});
  return table;
}

ReportTable curves_report(std::uint64_t n_authors, std::size_t grid_size, double k_max) {
  if (n_authors < 1) throw std::domain_error("publication needs at least one author");
  if (grid_size < 2) throw std::domain_error("grid size must be at least 2");
  if (!(k_max >= 1.0) || !std::isfinite(k_max)) throw std::domain_error("k_max must be >= 1");

  ReportTable table;
  table.caption = "Author-credit curves for an " + std::to_string(n_authors) +
                  "-author publication: credit against k and against the geometric-bridge "
                  "weight lambda";
  table.columns = {{"curve", -1}, {"x", 4}, {"y", 6}};
  const double steps = static_cast<double>(grid_size - 1);
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double k = 1.0 + (k_max - 1.0) * static_cast<double>(i) / steps;
    table.rows.push_back(
        {std::string("mfc_k"), k, author_credit(n_authors, KParam::finite(k))});
  }
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double lambda = static_cast<double>(i) / steps;
    table.rows.push_back(
        {std::string("g_lambda"), lambda, geometric_bridge(n_authors, Lambda(lambda))});
  }
  return table;
}

ReportTable compare_report(const Corpus& corpus, std::string_view institute,
                           const std::vector<KParam>& ks) {
  if (ks.empty()) throw std::invalid_argument("at least one k is required");
  ReportTable table;
  table.caption = "mfc, cmfc and pmfc for institute '" + std::string(institute) + "'";
  if (!corpus.has_institute(institute))
    table.notes.push_back("warning: institute '" + std::string(institute) +
                          "' does not appear in the corpus");
  table.columns = {{"k", -1}, {"mfc", 4}, {"cmfc", 4}, {"pmfc", 4}, {"ordering", -1}};
  for (const auto& k : ks) {
    const Score mfc = corpus_score(corpus, institute, CountingMethod::mfc, k);
    const Score cmfc = corpus_score(corpus, institute, CountingMethod::cmfc, k);
    const Score pmfc = corpus_score(corpus, institute, CountingMethod::pmfc, k);
    std::string ordering;
    ordering += "mfc ";
    ordering += relation(mfc, cmfc);
    ordering += " cmfc; pmfc ";
    ordering += relation(pmfc, mfc);
    ordering += " mfc; pmfc ";
    ordering += relation(pmfc, cmfc);
    ordering += " cmfc";
    table.rows.push_back(
        {k.str(), score_cell(mfc), score_cell(cmfc), score_cell(pmfc), ordering});
  }
  return table;
}

ReportTable perturb_report(const ParticipationArray& array, const PerturbAction& action,
                           const KParam& k) {
  EffectReport effect;
  ReportTable table;
  switch (action.kind) {
    case PerturbAction::Kind::uniform: {
      effect = uniform_addition_effect(array, action.amount, k);
      table.caption = "Every entity adds " + compact_number(action.amount) +
                      " author(s); k = " + k.str();
      table.notes.push_back("mean count = " + compact_number(array.mean()) +
                            ", median count = " + compact_number(array.median()));
      const double half_median = array.median() / 2.0;
      std::string safe;
      for (std::size_t i = 0; i < array.size(); ++i) {
        if (array.counts()[i] > half_median) continue;
        if (!safe.empty()) safe += ", ";
        safe += "#" + std::to_string(i + 1);
      }
      table.notes.push_back("entities with count <= median/2 (cannot lose): " +
                            (safe.empty() ? std::string("none") : safe));
      break;
    }
    case PerturbAction::Kind::add_entity:
      effect = add_entity_effect(array, action.amount, k);
      table.caption = "A new entity with " + compact_number(action.amount) +
                      " author(s) joins; k = " + k.str();
      break;
    case PerturbAction::Kind::add_authors:
      effect = entity_adds_authors_effect(array, action.index, action.amount, k);
      table.caption = "Entity #" + std::to_string(action.index + 1) + " adds " +
                      compact_number(action.amount) + " author(s); k = " + k.str();
      break;
  }

  table.columns = {{"entity", -1}, {"count", -1}, {"old_score", 6}, {"new_score", 6},
                   {"direction", -1}};
  for (std::size_t i = 0; i < effect.entities.size(); ++i) {
    const auto& e = effect.entities[i];
    table.rows.push_back({static_cast<std::int64_t>(i + 1), count_cell(array.counts()[i]),
                          e.old_score, e.new_score,
                          std::string(direction_name(e.direction))});
  }
  return table;
}

ReportTable lorenz_report(const std::vector<double>& values,
                          const std::vector<double>* other) {
  ReportTable table;
  table.caption = "Lorenz curve vertices (values sorted decreasingly)";
  table.columns = {{"array", -1}, {"step", -1}, {"x", 6}, {"y", 6}};

  const auto add_curve = [&](const char* label, const std::vector<double>& array) {
    const LorenzCurve curve = lorenz_curve(array);
    for (std::size_t i = 0; i < curve.points.size(); ++i)
      table.rows.push_back({std::string(label), static_cast<std::int64_t>(i),
                            curve.points[i].x, curve.points[i].y});
  };
  add_curve("A", values);
  if (other) {
    add_curve("B", *other);
    switch (majorization_compare(values, *other)) {
      case MajorizationResult::less_or_equal:
        table.notes.push_back("majorization: A is majorized by B (A is at least as even)");
        break;
      case MajorizationResult::greater_or_equal:
        table.notes.push_back("majorization: B is majorized by A (B is at least as even)");
        break;
      case MajorizationResult::equal:
        table.notes.push_back("majorization: A and B have identical Lorenz curves");
        break;
      case MajorizationResult::incomparable:
        table.notes.push_back("majorization: A and B are not comparable");
        break;
    }
  }
  return table;
}

}  // namespace mfc
