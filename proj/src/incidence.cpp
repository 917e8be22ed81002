#include "mfc/incidence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mfc {

IncidenceMatrix::IncidenceMatrix(const Corpus& corpus, std::string_view institute) {
  if (corpus.empty()) throw std::domain_error("corpus is empty");

  std::set<std::string> members;
  for (const auto& publication : corpus.publications())
    for (const auto& entry : publication.byline)
      if (entry.institute == institute) members.insert(entry.author);
  authors_.assign(members.begin(), members.end());

  publications_.reserve(corpus.size());
  stats_.reserve(corpus.size());
  cells_.assign(authors_.size() * corpus.size(), 0);

  std::size_t col = 0;
  for (const auto& publication : corpus.publications()) {
    publications_.push_back(publication.id);
    PublicationStats stats;
    stats.publication = publication.id;
    stats.authors = publication.byline.size();
    stats.institutes = institute_count(publication);
    for (const auto& entry : publication.byline) {
      if (entry.institute != institute) continue;
      ++stats.members;
      const auto row = std::lower_bound(authors_.begin(), authors_.end(), entry.author) -
                       authors_.begin();
      cells_[static_cast<std::size_t>(row) * corpus.size() + col] = 1;
    }
    stats.participates = stats.members >= 1;
    stats_.push_back(std::move(stats));
    ++col;
  }
}

bool IncidenceMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= authors_.size() || col >= publications_.size())
    throw std::out_of_range("incidence index out of range");
  return cells_[row * publications_.size() + col] != 0;
}

std::size_t IncidenceMatrix::column_sum(std::size_t col) const {
  if (col >= publications_.size()) throw std::out_of_range("incidence column out of range");
  return stats_[col].members;
}

IncidenceMatrix incidence_matrix(const Corpus& corpus, std::string_view institute) {
  return IncidenceMatrix(corpus, institute);
}

}  // namespace mfc
