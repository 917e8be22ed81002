#include "mfc/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mfc {

namespace {

constexpr double kShareTolerance = 1e-12;

Direction classify_shares(double old_share, double new_share) {
  if (std::abs(new_share - old_share) <= kShareTolerance) return Direction::unchanged;
  return new_share > old_share ? Direction::increase : Direction::decrease;
}

void require_positive_amount(double amount, const char* what) {
  if (!(amount > 0.0) || !std::isfinite(amount))
    throw std::domain_error(std::string(what) + " must be positive");
}

}  // namespace

ParticipationArray::ParticipationArray(std::vector<double> counts)
    : counts_(std::move(counts)) {
  if (counts_.empty()) throw std::domain_error("participation array is empty");
  for (const double c : counts_) {
    if (!(c > 0.0) || !std::isfinite(c))
      throw std::domain_error("participation counts must be positive");
    total_ += c;
  }
}

double ParticipationArray::median() const {
  std::vector<double> sorted = counts_;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  if (n % 2 == 1) return sorted[n / 2];
  return (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
}

std::string_view direction_name(Direction direction) {
  switch (direction) {
    case Direction::increase: return "increase";
    case Direction::decrease: return "decrease";
    case Direction::unchanged: return "unchanged";
  }
  return "unchanged";
}

double entity_share_score(double count, double total, const KParam& k) {
  require_positive_amount(count, "count");
  require_positive_amount(total, "total");
  if (count > total) throw std::domain_error("count exceeds the total");
  return k.root(count / total);
}

EffectReport add_author_effect(std::uint64_t n_authors, const KParam& k) {
  if (n_authors < 1) throw std::domain_error("publication needs at least one author");
  const double n = static_cast<double>(n_authors);
  EntityEffect effect;
  effect.old_score = k.root(1.0 / n);
  effect.new_score = k.root(1.0 / (n + 1.0));
  effect.direction = k.is_infinite() ? Direction::unchanged : Direction::decrease;
  return {{effect}};
}

EffectReport add_entity_effect(const ParticipationArray& array, double new_entity_count,
                               const KParam& k) {
  require_positive_amount(new_entity_count, "new entity count");
  const double old_total = array.total();
  const double new_total = old_total + new_entity_count;
  EffectReport report;
  report.entities.reserve(array.size());
  for (const double count : array.counts()) {
    EntityEffect effect;
    effect.old_score = k.root(count / old_total);
    effect.new_score = k.root(count / new_total);
    // Shares strictly shrink no matter what k does to them.
    effect.direction = classify_shares(count / old_total, count / new_total);
    report.entities.push_back(effect);
  }
  return report;
}

EffectReport entity_adds_authors_effect(const ParticipationArray& array, std::size_t index,
                                        double added, const KParam& k) {
  if (index >= array.size()) throw std::domain_error("entity index out of range");
  require_positive_amount(added, "added author count");
  const double old_total = array.total();
  const double new_total = old_total + added;
  EffectReport report;
  report.entities.reserve(array.size());
  for (std::size_t i = 0; i < array.size(); ++i) {
    const double old_count = array.counts()[i];
    const double new_count = i == index ? old_count + added : old_count;
    EntityEffect effect;
    effect.old_score = k.root(old_count / old_total);
    effect.new_score = k.root(new_count / new_total);
    effect.direction = k.is_infinite()
                           ? Direction::unchanged
                           : classify_shares(old_count / old_total, new_count / new_total);
    report.entities.push_back(effect);
  }
  return report;
}

EffectReport uniform_addition_effect(const ParticipationArray& array, double added_each,
                                     const KParam& k) {
  require_positive_amount(added_each, "added author count");
  const double old_total = array.total();
  const double new_total = old_total + added_each * static_cast<double>(array.size());
  EffectReport report;
  report.entities.reserve(array.size());
  for (const double count : array.counts()) {
    EntityEffect effect;
    effect.old_score = k.root(count / old_total);
    effect.new_score = k.root((count + added_each) / new_total);
    // Equivalent to comparing the count against the mean; the k-th root
    // preserves the order, so the direction does not depend on k.
    effect.direction = classify_shares(count / old_total, (count + added_each) / new_total);
    report.entities.push_back(effect);
  }
  return report;
}

std::vector<std::size_t> median_threshold_indices(const ParticipationArray& array) {
  const auto& counts = array.counts();
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] < counts[i - 1])
      throw std::domain_error("array must be sorted non-decreasingly");
  const double half_median = array.median() / 2.0;
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] <= half_median) indices.push_back(i);
  return indices;
}

}  // namespace mfc
