#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mfc/corpus.hpp"

namespace mfc {

// Per-publication counts derived alongside the incidence matrix.
struct PublicationStats {
  std::string publication;
  std::size_t authors = 0;     // byline size N
  std::size_t institutes = 0;  // distinct institutes M
  std::size_t members = 0;     // entries of the target institute Y
  bool participates = false;   // Y >= 1
};

// Binary author-by-publication matrix of one institute over a corpus:
// a(i, j) = 1 iff the institute's author i appears in publication j.
// Rows are the institute's authors sorted lexicographically; columns follow
// the corpus order. An institute with no appearances yields zero rows.
class IncidenceMatrix {
 public:
  IncidenceMatrix(const Corpus& corpus, std::string_view institute);

  std::size_t author_rows() const { return authors_.size(); }
  std::size_t publication_cols() const { return publications_.size(); }

  const std::vector<std::string>& row_authors() const { return authors_; }
  const std::vector<std::string>& col_publications() const { return publications_; }

  bool at(std::size_t row, std::size_t col) const;
  std::size_t column_sum(std::size_t col) const;  // Y for that publication

  const std::vector<PublicationStats>& stats() const { return stats_; }

 private:
  std::vector<std::string> authors_;
  std::vector<std::string> publications_;
  std::vector<std::uint8_t> cells_;  // row-major
  std::vector<PublicationStats> stats_;
};

IncidenceMatrix incidence_matrix(const Corpus& corpus, std::string_view institute);

}  // namespace mfc
