#pragma once

#include <random>
#include <string>
#include <vector>

#include "mfc/corpus.hpp"

namespace testsupport {

inline mfc::Publication make_publication(std::string id,
                                         std::vector<std::pair<std::string, std::string>>
                                             author_institute) {
  mfc::Publication publication;
  publication.id = std::move(id);
  for (auto& [author, institute] : author_institute)
    publication.byline.push_back({std::move(author), std::move(institute), {}});
  return publication;
}

// Three publications over institute S = {q1..q4} plus four one-author
// institutes I1..I4; the standing example used across the suite.
inline mfc::Corpus example_corpus() {
  std::vector<mfc::Publication> publications;
  publications.push_back(make_publication(
      "p1", {{"q1", "S"}, {"q3", "S"}, {"r1", "I1"}}));
  publications.push_back(make_publication("p2", {{"q2", "S"}, {"r2", "I2"}}));
  publications.push_back(make_publication(
      "p3", {{"q1", "S"}, {"q3", "S"}, {"q4", "S"}, {"r3", "I3"}, {"r4", "I4"}}));
  return mfc::Corpus(std::move(publications));
}

// One publication with `members` authors from `institute` and the remaining
// authors spread over `other_institutes` round-robin.
inline mfc::Publication make_split_publication(std::string id, const std::string& institute,
                                               int members, int total_authors,
                                               const std::vector<std::string>&
                                                   other_institutes) {
  mfc::Publication publication;
  publication.id = std::move(id);
  int author_index = 0;
  for (int i = 0; i < members; ++i)
    publication.byline.push_back(
        {publication.id + "_a" + std::to_string(++author_index), institute, {}});
  for (int i = 0; i < total_authors - members; ++i)
    publication.byline.push_back(
        {publication.id + "_a" + std::to_string(++author_index),
         other_institutes[i % other_institutes.size()], {}});
  return publication;
}

// Random corpus with up to max_pubs publications, max_authors_per_pub
// byline entries each, and authors drawn from a pool with fixed
// author-to-institute assignment.
inline mfc::Corpus random_corpus(std::mt19937& rng, int max_pubs = 10,
                                 int max_authors_per_pub = 12, int max_institutes = 5) {
  std::uniform_int_distribution<int> pick_pubs(1, max_pubs);
  std::uniform_int_distribution<int> pick_authors(1, max_authors_per_pub);
  const int pool_size = 4 * max_authors_per_pub;
  std::uniform_int_distribution<int> pick_institute(0, max_institutes - 1);

  std::vector<std::string> institute_of(pool_size);
  for (int a = 0; a < pool_size; ++a)
    institute_of[a] = "I" + std::to_string(pick_institute(rng));

  const int n_pubs = pick_pubs(rng);
  std::vector<mfc::Publication> publications;
  publications.reserve(n_pubs);
  std::vector<int> pool(pool_size);
  for (int a = 0; a < pool_size; ++a) pool[a] = a;
  for (int p = 0; p < n_pubs; ++p) {
    std::shuffle(pool.begin(), pool.end(), rng);
    const int n_authors = pick_authors(rng);
    mfc::Publication publication;
    publication.id = "p" + std::to_string(p + 1);
    for (int i = 0; i < n_authors; ++i) {
      const int author = pool[i];
      publication.byline.push_back(
          {"a" + std::to_string(author), institute_of[author], {}});
    }
    publications.push_back(std::move(publication));
  }
  return mfc::Corpus(std::move(publications));
}

}  // namespace testsupport
