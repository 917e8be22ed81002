// Exercises the shared-library surface exactly as an external client would:
// only mfcount.h, opaque handles and status codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>

#include "mfcount.h"

namespace {

const char* kCorpusText = R"({
  "publications": [
    {"id": "p1", "byline": [
      {"author": "q1", "institute": "S"},
      {"author": "q3", "institute": "S"},
      {"author": "r1", "institute": "I1"}
    ]},
    {"id": "p2", "byline": [
      {"author": "q2", "institute": "S"},
      {"author": "r2", "institute": "I2"}
    ]},
    {"id": "p3", "byline": [
      {"author": "q1", "institute": "S"},
      {"author": "q3", "institute": "S"},
      {"author": "q4", "institute": "S"},
      {"author": "r3", "institute": "I3"},
      {"author": "r4", "institute": "I4"}
    ]}
  ]
})";

struct CorpusGuard {
  mfc_corpus* handle = nullptr;
  ~CorpusGuard() { mfc_corpus_free(handle); }
};

struct TableGuard {
  mfc_table* handle = nullptr;
  ~TableGuard() { mfc_table_free(handle); }
};

struct SchemeGuard {
  mfc_role_scheme* handle = nullptr;
  ~SchemeGuard() { mfc_role_scheme_free(handle); }
};

}  // namespace

TEST_CASE("scalar credit functions") {
  double value = 0.0;
  REQUIRE(mfc_author_credit(2, 2.0, &value) == MFC_OK);
  CHECK(value == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
  REQUIRE(mfc_author_credit(10, HUGE_VAL, &value) == MFC_OK);
  CHECK(value == 1.0);
  REQUIRE(mfc_article_total(5, 2.0, &value) == MFC_OK);
  CHECK(value == doctest::Approx(std::sqrt(5.0)).epsilon(1e-13));
  REQUIRE(mfc_geometric_bridge(10, 0.5, &value) == MFC_OK);
  CHECK(value == doctest::Approx(std::pow(10.0, -0.5)).epsilon(1e-13));
  REQUIRE(mfc_solve_k_arithmetic(2, 0.5, &value) == MFC_OK);
  CHECK(value == doctest::Approx(2.409420839653209).epsilon(1e-12));
  REQUIRE(mfc_solve_k_harmonic(2, 0.5, &value) == MFC_OK);
  CHECK(value == doctest::Approx(1.7095112913514547).epsilon(1e-12));
}

TEST_CASE("scalar error mapping") {
  double value = 0.0;
  CHECK(mfc_author_credit(0, 2.0, &value) == MFC_ERR_DOMAIN);
  CHECK(std::strlen(mfc_last_error()) > 0);
  CHECK(mfc_author_credit(3, 0.5, &value) == MFC_ERR_DOMAIN);
  CHECK(mfc_geometric_bridge(3, 1.5, &value) == MFC_ERR_DOMAIN);
  CHECK(mfc_author_credit(3, 2.0, nullptr) == MFC_ERR_USAGE);
  CHECK(std::string(mfc_status_name(MFC_ERR_PARSE)) == "parse_error");
  CHECK(std::string(mfc_status_name(MFC_OK)) == "ok");
  CHECK(std::strlen(mfc_version()) > 0);
}

TEST_CASE("weighted means") {
  const double values[] = {2.0, 8.0};
  const double weights[] = {1.0, 1.0};
  double out = 0.0;
  REQUIRE(mfc_weighted_mean(MFC_MEAN_GEOMETRIC, values, weights, 2, &out) == MFC_OK);
  CHECK(out == doctest::Approx(4.0).epsilon(1e-13));
  REQUIRE(mfc_weighted_mean(MFC_MEAN_ARITHMETIC, values, weights, 2, &out) == MFC_OK);
  CHECK(out == 5.0);
  REQUIRE(mfc_weighted_mean(MFC_MEAN_HARMONIC, values, weights, 2, &out) == MFC_OK);
  CHECK(out == doctest::Approx(3.2).epsilon(1e-13));
  const double zeros[] = {0.0, 0.0};
  CHECK(mfc_weighted_mean(MFC_MEAN_ARITHMETIC, values, zeros, 2, &out) == MFC_ERR_DOMAIN);
}

TEST_CASE("corpus lifecycle, scoring and serialization") {
  CorpusGuard corpus;
  REQUIRE(mfc_corpus_parse(kCorpusText, nullptr, &corpus.handle) == MFC_OK);
  CHECK(mfc_corpus_publications(corpus.handle) == 3);
  CHECK(mfc_corpus_has_institute(corpus.handle, "S") == 1);
  CHECK(mfc_corpus_has_institute(corpus.handle, "nope") == 0);

  size_t publications = 0, authors = 0, institutes = 0;
  REQUIRE(mfc_corpus_stats(corpus.handle, &publications, &authors, &institutes) == MFC_OK);
  CHECK(publications == 3);
  CHECK(authors == 8);
  CHECK(institutes == 5);

  double score = 0.0;
  REQUIRE(mfc_institute_score(corpus.handle, "S", "mfc", 2.0, nullptr, &score) == MFC_OK);
  CHECK(score == doctest::Approx(2.298200031355757).epsilon(1e-12));
  REQUIRE(mfc_institute_score(corpus.handle, "S", "cmfc", HUGE_VAL, nullptr, &score) ==
          MFC_OK);
  CHECK(score == 6.0);
  REQUIRE(mfc_institute_score(corpus.handle, "S", "pmfc", 1.0, nullptr, &score) == MFC_OK);
  CHECK(score == doctest::Approx(0.5 + 0.5 + 1.0 / 3.0).epsilon(1e-13));
  CHECK(mfc_institute_score(corpus.handle, "S", "bogus", 2.0, nullptr, &score) ==
        MFC_ERR_USAGE);

  char* text = nullptr;
  REQUIRE(mfc_corpus_serialize(corpus.handle, "delimited", &text) == MFC_OK);
  CorpusGuard reparsed;
  REQUIRE(mfc_corpus_parse(text, "delimited", &reparsed.handle) == MFC_OK);
  char* text2 = nullptr;
  REQUIRE(mfc_corpus_serialize(reparsed.handle, "delimited", &text2) == MFC_OK);
  CHECK(std::string(text) == text2);
  mfc_string_free(text);
  mfc_string_free(text2);
}

TEST_CASE("corpus error codes") {
  mfc_corpus* handle = nullptr;
  CHECK(mfc_corpus_parse("{broken", nullptr, &handle) == MFC_ERR_PARSE);
  CHECK(mfc_corpus_parse("", nullptr, &handle) == MFC_ERR_PARSE);
  CHECK(mfc_corpus_parse(R"({"publications": [{"id": "p", "byline": []}]})", nullptr,
                         &handle) == MFC_ERR_VALIDATION);
  CHECK(mfc_corpus_parse(kCorpusText, "csv", &handle) == MFC_ERR_USAGE);
  CHECK(mfc_corpus_load("/does/not/exist.json", nullptr, &handle) == MFC_ERR_IO);
  CHECK(handle == nullptr);
}

TEST_CASE("role schemes over the C API") {
  SchemeGuard scheme;
  REQUIRE(mfc_role_scheme_parse(
              R"({"first": 4, "second": 2, "corresponding": 3, "middle": 1})",
              &scheme.handle) == MFC_OK);
  CorpusGuard corpus;
  REQUIRE(mfc_corpus_parse(kCorpusText, "structured", &corpus.handle) == MFC_OK);

  double score = 0.0;
  REQUIRE(mfc_institute_score(corpus.handle, "S", "mfc", 1.0, scheme.handle, &score) ==
          MFC_OK);
  CHECK(score == doctest::Approx(6.0 / 9.0 + 4.0 / 7.0 + 7.0 / 11.0).epsilon(1e-13));

  CHECK(mfc_institute_score(corpus.handle, "S", "cmfc", 1.0, scheme.handle, &score) ==
        MFC_ERR_USAGE);

  mfc_role_scheme* bad = nullptr;
  CHECK(mfc_role_scheme_parse(R"({"first": 0})", &bad) == MFC_ERR_VALIDATION);
  CHECK(mfc_role_scheme_parse("nope", &bad) == MFC_ERR_PARSE);
}

TEST_CASE("report tables over the C API") {
  TableGuard table;
  REQUIRE(mfc_report_reference_table(2, &table.handle) == MFC_OK);
  CHECK(mfc_table_rows(table.handle) == 4);
  CHECK(mfc_table_cols(table.handle) == 5);
  char* text = nullptr;
  REQUIRE(mfc_table_render(table.handle, "delimited", -1, &text) == MFC_OK);
  CHECK(std::string(text).find("4/7") != std::string::npos);
  mfc_string_free(text);

  mfc_table* bad = nullptr;
  CHECK(mfc_report_reference_table(9, &bad) == MFC_ERR_USAGE);
  REQUIRE(mfc_table_render(table.handle, "yaml", -1, &text) == MFC_ERR_USAGE);

  CorpusGuard corpus;
  REQUIRE(mfc_corpus_parse(kCorpusText, nullptr, &corpus.handle) == MFC_OK);
  TableGuard score_table;
  REQUIRE(mfc_report_score(corpus.handle, "S", "mfc", 2.0, nullptr,
                           &score_table.handle) == MFC_OK);
  CHECK(mfc_table_rows(score_table.handle) == 4);

  TableGuard classical;
  REQUIRE(mfc_report_score(corpus.handle, "S", "classical", 0.0, nullptr,
                           &classical.handle) == MFC_OK);
  CHECK(mfc_table_rows(classical.handle) == 4);

  const double ks[] = {1.0, 2.0, HUGE_VAL};
  TableGuard compare;
  REQUIRE(mfc_report_compare(corpus.handle, "S", ks, 3, &compare.handle) == MFC_OK);
  CHECK(mfc_table_rows(compare.handle) == 3);

  const double counts[] = {1.0, 2.0, 3.0};
  TableGuard perturb;
  REQUIRE(mfc_report_perturb(counts, 3, "uniform", 1.0, 0, 2.0, &perturb.handle) == MFC_OK);
  CHECK(mfc_table_rows(perturb.handle) == 3);
  CHECK(mfc_report_perturb(counts, 3, "sideways", 1.0, 0, 2.0, &bad) == MFC_ERR_USAGE);
  CHECK(mfc_report_perturb(counts, 3, "add-authors", 1.0, 7, 2.0, &bad) == MFC_ERR_DOMAIN);

  const double values[] = {6.0, 2.0, 1.0, 1.0};
  const double against[] = {3.0, 3.0, 2.0, 2.0};
  TableGuard lorenz;
  REQUIRE(mfc_report_lorenz(values, 4, against, 4, &lorenz.handle) == MFC_OK);
  CHECK(mfc_table_rows(lorenz.handle) == 10);

  TableGuard curves;
  REQUIRE(mfc_report_curves(10, 5, 10.0, &curves.handle) == MFC_OK);
  CHECK(mfc_table_rows(curves.handle) == 10);
}
