#include "mfc/institute_score.hpp"

#include <stdexcept>

namespace mfc {

std::map<std::string, ClassicalScores> classical_scores(const Publication& publication) {
  validate_publication(publication);
  std::map<std::string, long long> mentions;
  for (const auto& entry : publication.byline) ++mentions[entry.institute];

  const long long n = static_cast<long long>(publication.byline.size());
  const long long m = static_cast<long long>(mentions.size());

  std::map<std::string, ClassicalScores> out;
  for (const auto& [institute, y] : mentions) {
    ClassicalScores s;
    s.complete = Rational(y);
    s.fractionalized_complete = Rational(y, n);
    s.whole = Rational(1);
    s.fractionalized_whole = Rational(1, m);
    out.emplace(institute, s);
  }
  return out;
}

CountingMethod counting_method_from_name(std::string_view name) {
  if (name == "mfc") return CountingMethod::mfc;
  if (name == "cmfc") return CountingMethod::cmfc;
  if (name == "pmfc") return CountingMethod::pmfc;
  throw std::invalid_argument("unknown counting method: '" + std::string(name) + "'");
}

std::string_view counting_method_name(CountingMethod method) {
  switch (method) {
    case CountingMethod::mfc: return "mfc";
    case CountingMethod::cmfc: return "cmfc";
    case CountingMethod::pmfc: return "pmfc";
  }
  return "mfc";
}

Score publication_score(const Publication& publication, std::string_view institute,
                        CountingMethod method, const KParam& k) {
  const long long y = static_cast<long long>(mention_count(publication, institute));
  const long long n = static_cast<long long>(publication.byline.size());
  if (n == 0) throw std::domain_error("byline is empty");
  if (y == 0) return Score::exact(Rational(0));

  switch (method) {
    case CountingMethod::mfc:
      if (k.is_infinite()) return Score::exact(Rational(1));
      if (k.is_one()) return Score::exact(Rational(y, n));
      return Score::approx(k.root(static_cast<double>(y) / static_cast<double>(n)));
    case CountingMethod::cmfc:
      if (k.is_infinite()) return Score::exact(Rational(y));
      if (k.is_one()) return Score::exact(Rational(y, n));
      return Score::approx(static_cast<double>(y) / k.root(static_cast<double>(n)));
    case CountingMethod::pmfc: {
      const long long m = static_cast<long long>(institute_count(publication));
      if (k.is_infinite()) return Score::exact(Rational(1));
      if (k.is_one()) return Score::exact(Rational(1, m));
      return Score::approx(k.root(1.0 / static_cast<double>(m)));
    }
  }
  throw std::invalid_argument("unknown counting method");
}

Score corpus_score(const Corpus& corpus, std::string_view institute, CountingMethod method,
                   const KParam& k) {
  Score total;
  for (const auto& publication : corpus.publications())
    total += publication_score(publication, institute, method, k);
  return total;
}

RoleWeightScheme::RoleWeightScheme() { weights_.fill(Rational(1)); }

void RoleWeightScheme::set(Role role, Rational weight) {
  if (!weight.is_positive()) throw std::domain_error("role weight must be positive");
  weights_[static_cast<std::size_t>(role)] = weight;
}

const Rational& RoleWeightScheme::weight(Role role) const {
  return weights_[static_cast<std::size_t>(role)];
}

Rational weighted_b_value(const Publication& publication, std::string_view institute,
                          const RoleWeightScheme& scheme) {
  validate_publication(publication);
  Rational member_sum(0);
  Rational total(0);
  for (std::size_t i = 0; i < publication.byline.size(); ++i) {
    const Rational& w = scheme.weight(effective_role(publication, i));
    total += w;
    if (publication.byline[i].institute == institute) member_sum += w;
  }
  return member_sum / total;
}

Score weighted_publication_score(const Publication& publication, std::string_view institute,
                                 const KParam& k, const RoleWeightScheme& scheme) {
  const Rational b = weighted_b_value(publication, institute, scheme);
  if (b.is_zero()) return Score::exact(Rational(0));
  if (k.is_infinite()) return Score::exact(Rational(1));
  if (k.is_one()) return Score::exact(b);
  return Score::approx(k.root(b.to_double()));
}

Score weighted_corpus_score(const Corpus& corpus, std::string_view institute, const KParam& k,
                            const RoleWeightScheme& scheme) {
  Score total;
  for (const auto& publication : corpus.publications())
    total += weighted_publication_score(publication, institute, k, scheme);
  return total;
}

}  // namespace mfc
