// Command-line front end; talks to the library exclusively through the
// C API in mfcount.h.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mfcount.h"

namespace {

// Exit codes: 0 ok, 2 usage, 3 parse, 4 validation, 5 io, 6 domain.
enum ExitCode {
  kExitOk = 0,
  kExitUsage = 2,
  kExitParse = 3,
  kExitValidation = 4,
  kExitIo = 5,
  kExitDomain = 6,
};

int exit_code_for(mfc_status status) {
  switch (status) {
    case MFC_OK: return kExitOk;
    case MFC_ERR_USAGE: return kExitUsage;
    case MFC_ERR_PARSE: return kExitParse;
    case MFC_ERR_VALIDATION: return kExitValidation;
    case MFC_ERR_IO: return kExitIo;
    case MFC_ERR_DOMAIN: return kExitDomain;
  }
  return kExitDomain;
}

int fail(mfc_status status) {
  std::fprintf(stderr, "error: %s\n", mfc_last_error());
  return exit_code_for(status);
}

int fail_usage(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  return kExitUsage;
}

struct CorpusDeleter {
  void operator()(mfc_corpus* c) const { mfc_corpus_free(c); }
};
struct TableDeleter {
  void operator()(mfc_table* t) const { mfc_table_free(t); }
};
struct SchemeDeleter {
  void operator()(mfc_role_scheme* s) const { mfc_role_scheme_free(s); }
};

using CorpusPtr = std::unique_ptr<mfc_corpus, CorpusDeleter>;
using TablePtr = std::unique_ptr<mfc_table, TableDeleter>;
using SchemePtr = std::unique_ptr<mfc_role_scheme, SchemeDeleter>;

bool parse_k_text(const std::string& text, double* out) {
  if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity") {
    *out = HUGE_VAL;
    return true;
  }
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || std::isnan(value) || value < 1.0) return false;
  *out = value;
  return true;
}

bool parse_number_list(const std::string& text, std::vector<double>* out) {
  out->clear();
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t pos = text.find(',', start);
    const std::string piece =
        pos == std::string::npos ? text.substr(start) : text.substr(start, pos - start);
    char* end = nullptr;
    const double value = std::strtod(piece.c_str(), &end);
    if (end == piece.c_str() || *end != '\0' || !std::isfinite(value)) return false;
    out->push_back(value);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return !out->empty();
}

int print_table(const mfc_table* table, const std::string& format, int precision) {
  char* text = nullptr;
  const mfc_status status = mfc_table_render(table, format.c_str(), precision, &text);
  if (status != MFC_OK) return fail(status);
  std::fputs(text, stdout);
  mfc_string_free(text);
  return kExitOk;
}

struct GlobalOptions {
  std::string format = "plain";
  int precision = -1;
  std::string k_text;
  std::string role_scheme_path;
};

int load_corpus_arg(const std::string& path, const std::string& format, CorpusPtr* out) {
  mfc_corpus* corpus = nullptr;
  const char* format_arg = format == "auto" ? nullptr : format.c_str();
  const mfc_status status = mfc_corpus_load(path.c_str(), format_arg, &corpus);
  if (status != MFC_OK) return fail(status);
  out->reset(corpus);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Publication-credit counting toolkit: modified fractional counting "
               "(mfc/cmfc/pmfc), classical counting, perturbation effects and Lorenz/"
               "majorization analysis."};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"plain", "delimited", "structured"}))
      ->capture_default_str();
  app.add_option("--precision", global.precision,
                 "Decimal places for floating-point cells (-1 keeps table defaults)");
  app.add_option("--k", global.k_text, "Counting exponent: decimal >= 1 or 'inf'");
  app.add_option("--role-scheme", global.role_scheme_path,
                 "JSON file mapping author roles to positive weights");

  std::string corpus_path;
  std::string corpus_format = "auto";
  std::string institute;
  std::string method = "mfc";
  std::uint64_t n_authors = 0;
  std::size_t grid_size = 100;
  double k_max = 10.0;
  std::string k_list_text;
  std::string array_text;
  std::string action = "uniform";
  double amount = 1.0;
  std::size_t entity_index = 0;
  std::string values_text;
  std::string against_text;
  int which_table = 1;

  const auto add_corpus_options = [&](CLI::App* cmd) {
    cmd->add_option("--corpus", corpus_path, "Corpus file")->required();
    cmd->add_option("--corpus-format", corpus_format, "Corpus file format")
        ->check(CLI::IsMember({"auto", "structured", "delimited"}))
        ->capture_default_str();
  };

  CLI::App* score = app.add_subcommand("score", "Score one institute over a corpus");
  add_corpus_options(score);
  score->add_option("--institute", institute, "Institute id")->required();
  score->add_option("--method", method, "mfc, cmfc, pmfc or classical")
      ->check(CLI::IsMember({"mfc", "cmfc", "pmfc", "classical"}))
      ->capture_default_str();

  CLI::App* table = app.add_subcommand("table", "Print a built-in reference table");
  table->add_option("--which", which_table, "Table number")
      ->required()
      ->check(CLI::Range(1, 3));

  CLI::App* curves = app.add_subcommand("curves", "Sample the author-credit curves");
  curves->add_option("--authors", n_authors, "Number of authors")->required();
  curves->add_option("--grid", grid_size, "Samples per curve")->capture_default_str();
  curves->add_option("--k-max", k_max, "Upper end of the k grid")->capture_default_str();

  CLI::App* compare = app.add_subcommand("compare", "mfc/cmfc/pmfc side by side");
  add_corpus_options(compare);
  compare->add_option("--institute", institute, "Institute id")->required();
  compare->add_option("--k-list", k_list_text, "Comma-separated k values, e.g. 1,2,inf")
      ->required();

  CLI::App* perturb = app.add_subcommand("perturb", "Effect of adding authors or entities");
  perturb->add_option("--array", array_text, "Comma-separated per-entity author counts")
      ->required();
  perturb->add_option("--action", action, "uniform, add-entity or add-authors")
      ->check(CLI::IsMember({"uniform", "add-entity", "add-authors"}))
      ->capture_default_str();
  perturb->add_option("--amount", amount, "Authors added")->capture_default_str();
  perturb->add_option("--index", entity_index, "1-based entity index (add-authors)");

  CLI::App* lorenz = app.add_subcommand("lorenz", "Lorenz curve and majorization");
  lorenz->add_option("--values", values_text, "Comma-separated non-negative values")
      ->required();
  lorenz->add_option("--against", against_text, "Second array to compare against");

  CLI::App* validate = app.add_subcommand("validate", "Check a corpus file");
  add_corpus_options(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  std::optional<double> k_value;
  if (!global.k_text.empty()) {
    double parsed = 0.0;
    if (!parse_k_text(global.k_text, &parsed))
      return fail_usage("--k must be a decimal >= 1 or 'inf', got '" + global.k_text + "'");
    k_value = parsed;
  }

  SchemePtr scheme;
  if (!global.role_scheme_path.empty()) {
    mfc_role_scheme* raw = nullptr;
    const mfc_status status = mfc_role_scheme_load(global.role_scheme_path.c_str(), &raw);
    if (status != MFC_OK) return fail(status);
    scheme.reset(raw);
  }

  if (score->parsed()) {
    CorpusPtr corpus;
    if (const int rc = load_corpus_arg(corpus_path, corpus_format, &corpus)) return rc;
    if (method != "classical" && !k_value)
      return fail_usage("--k is required for method '" + method + "'");
    if (scheme && method != "mfc")
      return fail_usage("--role-scheme only applies to method 'mfc'");
    if (!mfc_corpus_has_institute(corpus.get(), institute.c_str()))
      std::fprintf(stderr, "warning: institute '%s' does not appear in the corpus\n",
                   institute.c_str());
    mfc_table* raw = nullptr;
    const mfc_status status =
        mfc_report_score(corpus.get(), institute.c_str(), method.c_str(),
                         k_value.value_or(1.0), scheme.get(), &raw);
    if (status != MFC_OK) return fail(status);
    TablePtr out(raw);
    return print_table(out.get(), global.format, global.precision);
  }

  if (table->parsed()) {
    mfc_table* raw = nullptr;
    const mfc_status status = mfc_report_reference_table(which_table, &raw);
    if (status != MFC_OK) return fail(status);
    TablePtr out(raw);
    return print_table(out.get(), global.format, global.precision);
  }

  if (curves->parsed()) {
    mfc_table* raw = nullptr;
    const mfc_status status = mfc_report_curves(n_authors, grid_size, k_max, &raw);
    if (status != MFC_OK) return fail(status);
    TablePtr out(raw);
    return print_table(out.get(), global.format, global.precision);
  }

  if (compare->parsed()) {
    CorpusPtr corpus;
    if (const int rc = load_corpus_arg(corpus_path, corpus_format, &corpus)) return rc;
    std::vector<double> ks;
    std::size_t start = 0;
    while (start <= k_list_text.size()) {
      const std::size_t pos = k_list_text.find(',', start);
      const std::string piece = pos == std::string::npos
                                    ? k_list_text.substr(start)
                                    : k_list_text.substr(start, pos - start);
      double parsed = 0.0;
      if (!parse_k_text(piece, &parsed))
        return fail_usage("--k-list entry '" + piece + "' is not a valid k");
      ks.push_back(parsed);
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    if (!mfc_corpus_has_institute(corpus.get(), institute.c_str()))
      std::fprintf(stderr, "warning: institute '%s' does not appear in the corpus\n",
                   institute.c_str());
    mfc_table* raw = nullptr;
    const mfc_status status =
        mfc_report_compare(corpus.get(), institute.c_str(), ks.data(), ks.size(), &raw);
    if (status != MFC_OK) return fail(status);
    TablePtr out(raw);
    return print_table(out.get(), global.format, global.precision);
  }

  if (perturb->parsed()) {
    std::vector<double> counts;
    if (!parse_number_list(array_text, &counts))
      return fail_usage("--array must be a comma-separated list of numbers");
    if (action == "add-authors") {
      if (entity_index < 1 || entity_index > counts.size())
        return fail_usage("--index must name an entity between 1 and " +
                          std::to_string(counts.size()));
    }
    mfc_table* raw = nullptr;
    const mfc_status status = mfc_report_perturb(
        counts.data(), counts.size(), action.c_str(), amount,
        entity_index == 0 ? 0 : entity_index - 1, k_value.value_or(1.0), &raw);
    if (status != MFC_OK) return fail(status);
    TablePtr out(raw);
    return print_table(out.get(), global.format, global.precision);
  }

  if (lorenz->parsed()) {
    std::vector<double> values;
    if (!parse_number_list(values_text, &values))
      return fail_usage("--values must be a comma-separated list of numbers");
    std::vector<double> against;
    if (!against_text.empty() && !parse_number_list(against_text, &against))
      return fail_usage("--against must be a comma-separated list of numbers");
    mfc_table* raw = nullptr;
    const mfc_status status = mfc_report_lorenz(
        values.data(), values.size(), against.empty() ? nullptr : against.data(),
        against.size(), &raw);
    if (status != MFC_OK) return fail(status);
    TablePtr out(raw);
    return print_table(out.get(), global.format, global.precision);
  }

  if (validate->parsed()) {
    CorpusPtr corpus;
    if (const int rc = load_corpus_arg(corpus_path, corpus_format, &corpus)) return rc;
    size_t publications = 0;
    size_t authors = 0;
    size_t institutes = 0;
    const mfc_status status =
        mfc_corpus_stats(corpus.get(), &publications, &authors, &institutes);
    if (status != MFC_OK) return fail(status);
    std::printf("corpus OK: %zu publications, %zu authors, %zu institutes\n", publications,
                authors, institutes);
    return kExitOk;
  }

  return fail_usage("no subcommand given");
}
