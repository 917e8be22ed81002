#include "mfcount.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "mfc/author_credit.hpp"
#include "mfc/averages.hpp"
#include "mfc/corpus.hpp"
#include "mfc/corpus_io.hpp"
#include "mfc/errors.hpp"
#include "mfc/institute_score.hpp"
#include "mfc/k_param.hpp"
#include "mfc/lorenz.hpp"
#include "mfc/perturbation.hpp"
#include "mfc/report.hpp"

struct mfc_corpus {
  mfc::Corpus value;
};

struct mfc_role_scheme {
  mfc::RoleWeightScheme value;
};

struct mfc_table {
  mfc::ReportTable value;
};

namespace {

thread_local std::string g_last_error;

mfc_status fail(mfc_status status, const char* message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
mfc_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return MFC_OK;
  } catch (const mfc::ParseError& e) {
    return fail(MFC_ERR_PARSE, e.what());
  } catch (const mfc::ValidationError& e) {
    return fail(MFC_ERR_VALIDATION, e.what());
  } catch (const mfc::IoError& e) {
    return fail(MFC_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(MFC_ERR_USAGE, e.what());
  } catch (const std::exception& e) {
    return fail(MFC_ERR_DOMAIN, e.what());
  }
}

mfc_status usage(const char* message) { return fail(MFC_ERR_USAGE, message); }

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

std::optional<mfc::CorpusFormat> corpus_format_arg(const char* format) {
  if (!format || std::strcmp(format, "auto") == 0) return std::nullopt;
  return mfc::corpus_format_from_name(format);
}

mfc::Corpus corpus_from_text(const char* text, const char* format) {
  const auto explicit_format = corpus_format_arg(format);
  if (explicit_format) return mfc::parse_corpus(text, *explicit_format);
  return mfc::parse_corpus(text);
}

}  // namespace

extern "C" {

const char* mfc_status_name(mfc_status status) {
  switch (status) {
    case MFC_OK: return "ok";
    case MFC_ERR_DOMAIN: return "domain_error";
    case MFC_ERR_PARSE: return "parse_error";
    case MFC_ERR_VALIDATION: return "validation_error";
    case MFC_ERR_IO: return "io_error";
    case MFC_ERR_USAGE: return "usage_error";
  }
  return "unknown";
}

const char* mfc_last_error(void) { return g_last_error.c_str(); }

const char* mfc_version(void) { return "0.1.0"; }

mfc_status mfc_author_credit(uint64_t n_authors, double k, double* out) {
  if (!out) return usage("null output pointer");
  return guarded([&] { *out = mfc::author_credit(n_authors, mfc::KParam::from_double(k)); });
}

mfc_status mfc_article_total(uint64_t n_authors, double k, double* out) {
  if (!out) return usage("null output pointer");
  return guarded([&] { *out = mfc::article_total(n_authors, mfc::KParam::from_double(k)); });
}

mfc_status mfc_geometric_bridge(uint64_t n_authors, double lambda, double* out) {
  if (!out) return usage("null output pointer");
  return guarded([&] { *out = mfc::geometric_bridge(n_authors, mfc::Lambda(lambda)); });
}

mfc_status mfc_solve_k_arithmetic(uint64_t n_authors, double lambda, double* out) {
  if (!out) return usage("null output pointer");
  return guarded([&] { *out = mfc::solve_k_arithmetic(n_authors, mfc::Lambda(lambda)); });
}

mfc_status mfc_solve_k_harmonic(uint64_t n_authors, double lambda, double* out) {
  if (!out) return usage("null output pointer");
  return guarded([&] { *out = mfc::solve_k_harmonic(n_authors, mfc::Lambda(lambda)); });
}

mfc_status mfc_weighted_mean(mfc_mean kind, const double* values, const double* weights,
                             size_t n, double* out) {
  if (!out || !values || !weights) return usage("null pointer argument");
  return guarded([&] {
    mfc::WeightedSample sample;
    sample.values.assign(values, values + n);
    sample.weights.assign(weights, weights + n);
    switch (kind) {
      case MFC_MEAN_ARITHMETIC: *out = mfc::weighted_arithmetic(sample); return;
      case MFC_MEAN_GEOMETRIC: *out = mfc::weighted_geometric(sample); return;
      case MFC_MEAN_HARMONIC: *out = mfc::weighted_harmonic(sample); return;
    }
    throw std::invalid_argument("unknown mean kind");
  });
}

mfc_status mfc_corpus_load(const char* path, const char* format, mfc_corpus** out) {
  if (!out || !path) return usage("null pointer argument");
  return guarded([&] {
    *out = new mfc_corpus{mfc::load_corpus(path, corpus_format_arg(format))};
  });
}

mfc_status mfc_corpus_parse(const char* text, const char* format, mfc_corpus** out) {
  if (!out || !text) return usage("null pointer argument");
  return guarded([&] { *out = new mfc_corpus{corpus_from_text(text, format)}; });
}

mfc_status mfc_corpus_serialize(const mfc_corpus* corpus, const char* format, char** out) {
  if (!out || !corpus || !format) return usage("null pointer argument");
  return guarded([&] {
    *out = dup_string(
        mfc::serialize_corpus(corpus->value, mfc::corpus_format_from_name(format)));
    if (!*out) throw std::runtime_error("out of memory");
  });
}

size_t mfc_corpus_publications(const mfc_corpus* corpus) {
  return corpus ? corpus->value.size() : 0;
}

int mfc_corpus_has_institute(const mfc_corpus* corpus, const char* institute) {
  if (!corpus || !institute) return 0;
  return corpus->value.has_institute(institute) ? 1 : 0;
}

mfc_status mfc_corpus_stats(const mfc_corpus* corpus, size_t* publications, size_t* authors,
                            size_t* institutes) {
  if (!corpus) return usage("null corpus");
  return guarded([&] {
    if (publications) *publications = corpus->value.size();
    if (authors) *authors = corpus->value.authors().size();
    if (institutes) *institutes = corpus->value.institutes().size();
  });
}

void mfc_corpus_free(mfc_corpus* corpus) { delete corpus; }

mfc_status mfc_role_scheme_load(const char* path, mfc_role_scheme** out) {
  if (!out || !path) return usage("null pointer argument");
  return guarded([&] { *out = new mfc_role_scheme{mfc::load_role_scheme(path)}; });
}

mfc_status mfc_role_scheme_parse(const char* text, mfc_role_scheme** out) {
  if (!out || !text) return usage("null pointer argument");
  return guarded([&] { *out = new mfc_role_scheme{mfc::parse_role_scheme(text)}; });
}

void mfc_role_scheme_free(mfc_role_scheme* scheme) { delete scheme; }

mfc_status mfc_institute_score(const mfc_corpus* corpus, const char* institute,
                               const char* method, double k, const mfc_role_scheme* scheme,
                               double* out) {
  if (!out || !corpus || !institute || !method) return usage("null pointer argument");
  return guarded([&] {
    const mfc::KParam k_param = mfc::KParam::from_double(k);
    const mfc::CountingMethod counting = mfc::counting_method_from_name(method);
    if (scheme) {
      if (counting != mfc::CountingMethod::mfc)
        throw std::invalid_argument("a role scheme only applies to method 'mfc'");
      *out = mfc::weighted_corpus_score(corpus->value, institute, k_param, scheme->value)
                 .value();
      return;
    }
    *out = mfc::corpus_score(corpus->value, institute, counting, k_param).value();
  });
}

mfc_status mfc_report_score(const mfc_corpus* corpus, const char* institute,
                            const char* method, double k, const mfc_role_scheme* scheme,
                            mfc_table** out) {
  if (!out || !corpus || !institute || !method) return usage("null pointer argument");
  return guarded([&] {
    std::optional<mfc::KParam> k_param;
    if (std::strcmp(method, "classical") != 0) k_param = mfc::KParam::from_double(k);
    *out = new mfc_table{mfc::score_report(corpus->value, institute, method, k_param,
                                           scheme ? &scheme->value : nullptr)};
  });
}

mfc_status mfc_report_reference_table(int which, mfc_table** out) {
  if (!out) return usage("null output pointer");
  return guarded([&] { *out = new mfc_table{mfc::reference_table(which)}; });
}

mfc_status mfc_report_curves(uint64_t n_authors, size_t grid_size, double k_max,
                             mfc_table** out) {
  if (!out) return usage("null output pointer");
  return guarded([&] { *out = new mfc_table{mfc::curves_report(n_authors, grid_size, k_max)}; });
}

mfc_status mfc_report_compare(const mfc_corpus* corpus, const char* institute,
                              const double* ks, size_t n_ks, mfc_table** out) {
  if (!out || !corpus || !institute || !ks) return usage("null pointer argument");
  return guarded([&] {
    std::vector<mfc::KParam> k_params;
    k_params.reserve(n_ks);
    for (size_t i = 0; i < n_ks; ++i) k_params.push_back(mfc::KParam::from_double(ks[i]));
    *out = new mfc_table{mfc::compare_report(corpus->value, institute, k_params)};
  });
}

mfc_status mfc_report_perturb(const double* counts, size_t n, const char* action,
                              double amount, size_t index, double k, mfc_table** out) {
  if (!out || !counts || !action) return usage("null pointer argument");
  return guarded([&] {
    mfc::PerturbAction parsed;
    if (std::strcmp(action, "uniform") == 0)
      parsed.kind = mfc::PerturbAction::Kind::uniform;
    else if (std::strcmp(action, "add-entity") == 0)
      parsed.kind = mfc::PerturbAction::Kind::add_entity;
    else if (std::strcmp(action, "add-authors") == 0)
      parsed.kind = mfc::PerturbAction::Kind::add_authors;
    else
      throw std::invalid_argument("unknown perturbation action: '" + std::string(action) +
                                  "'");
    parsed.amount = amount;
    parsed.index = index;
    const mfc::ParticipationArray array({counts, counts + n});
    *out = new mfc_table{mfc::perturb_report(array, parsed, mfc::KParam::from_double(k))};
  });
}

mfc_status mfc_report_lorenz(const double* values, size_t n_values, const double* other,
                             size_t n_other, mfc_table** out) {
  if (!out || !values) return usage("null pointer argument");
  return guarded([&] {
    const std::vector<double> a(values, values + n_values);
    if (other) {
      const std::vector<double> b(other, other + n_other);
      *out = new mfc_table{mfc::lorenz_report(a, &b)};
    } else {
      *out = new mfc_table{mfc::lorenz_report(a, nullptr)};
    }
  });
}

mfc_status mfc_table_render(const mfc_table* table, const char* format, int precision,
                            char** out) {
  if (!out || !table || !format) return usage("null pointer argument");
  return guarded([&] {
    *out = dup_string(
        mfc::render_table(table->value, mfc::table_format_from_name(format), precision));
    if (!*out) throw std::runtime_error("out of memory");
  });
}

size_t mfc_table_rows(const mfc_table* table) { return table ? table->value.rows.size() : 0; }

size_t mfc_table_cols(const mfc_table* table) {
  return table ? table->value.columns.size() : 0;
}

void mfc_table_free(mfc_table* table) { delete table; }

void mfc_string_free(char* text) { std::free(text); }

}  // extern "C"
