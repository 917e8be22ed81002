#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mfc/corpus.hpp"
#include "mfc/k_param.hpp"
#include "mfc/rational.hpp"
#include "mfc/score.hpp"

namespace mfc {

// The four classical per-publication scores of one institute. With Y
// mentions out of N authors and M distinct institutes:
//   complete = Y, fractionalized_complete = Y/N,
//   whole = 1, fractionalized_whole = 1/M.
struct ClassicalScores {
  Rational complete;
  Rational fractionalized_complete;
  Rational whole;
  Rational fractionalized_whole;

  bool operator==(const ClassicalScores&) const = default;
};

// Scores for every institute appearing in the byline, keyed by institute id.
std::map<std::string, ClassicalScores> classical_scores(const Publication& publication);

// The three parametric families bridging the classical methods.
//   mfc:  sum over publications of (Y/N)^(1/k)
//   cmfc: sum over publications of Y/N^(1/k)
//   pmfc: sum over participating publications of (1/M)^(1/k)
enum class CountingMethod { mfc, cmfc, pmfc };

CountingMethod counting_method_from_name(std::string_view name);
std::string_view counting_method_name(CountingMethod method);

Score publication_score(const Publication& publication, std::string_view institute,
                        CountingMethod method, const KParam& k);
Score corpus_score(const Corpus& corpus, std::string_view institute, CountingMethod method,
                   const KParam& k);

inline Score mfc_score(const Corpus& c, std::string_view inst, const KParam& k) {
  return corpus_score(c, inst, CountingMethod::mfc, k);
}
inline Score cmfc_score(const Corpus& c, std::string_view inst, const KParam& k) {
  return corpus_score(c, inst, CountingMethod::cmfc, k);
}
inline Score pmfc_score(const Corpus& c, std::string_view inst, const KParam& k) {
  return corpus_score(c, inst, CountingMethod::pmfc, k);
}

// Positive weight per author role. Defaults to weight 1 for every role, in
// which case role-weighted shares reduce to plain Y/N.
class RoleWeightScheme {
 public:
  RoleWeightScheme();

  void set(Role role, Rational weight);  // weight must be > 0
  const Rational& weight(Role role) const;

  bool operator==(const RoleWeightScheme&) const = default;

 private:
  std::array<Rational, 4> weights_;
};

// Role-weighted relative contribution of the institute to one publication:
// (sum of the institute's entry weights) / (sum of all entry weights).
Rational weighted_b_value(const Publication& publication, std::string_view institute,
                          const RoleWeightScheme& scheme);

// mfc with role-weighted shares: sum over publications of b^(1/k).
Score weighted_publication_score(const Publication& publication, std::string_view institute,
                                 const KParam& k, const RoleWeightScheme& scheme);
Score weighted_corpus_score(const Corpus& corpus, std::string_view institute, const KParam& k,
                            const RoleWeightScheme& scheme);

}  // namespace mfc
