#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "mfc/k_param.hpp"

namespace mfc {

// Per-entity author counts within one publication. Counts are positive
// reals, not just integers, so role-weighted contributions fit too.
class ParticipationArray {
 public:
  explicit ParticipationArray(std::vector<double> counts);

  const std::vector<double>& counts() const { return counts_; }
  std::size_t size() const { return counts_.size(); }
  double total() const { return total_; }
  double mean() const { return total_ / static_cast<double>(counts_.size()); }
  // Mean of the two central values for even sizes.
  double median() const;

 private:
  std::vector<double> counts_;
  double total_ = 0.0;
};

enum class Direction { increase, decrease, unchanged };

std::string_view direction_name(Direction direction);

struct EntityEffect {
  double old_score = 0.0;
  double new_score = 0.0;
  Direction direction = Direction::unchanged;
};

struct EffectReport {
  std::vector<EntityEffect> entities;
};

// Relative-participation score of one entity: (count/total)^(1/k).
double entity_share_score(double count, double total, const KParam& k);

// One more author joins an n-author publication; effect on one original
// author's credit. Unchanged only at k = infinity.
EffectReport add_author_effect(std::uint64_t n_authors, const KParam& k);

// A new entity with `new_entity_count` authors joins; every original
// entity's share strictly shrinks, so directions are classified on shares
// and decrease for every k.
EffectReport add_entity_effect(const ParticipationArray& array, double new_entity_count,
                               const KParam& k);

// Entity `index` (0-based) adds `added` authors. For finite k the entity
// gains and everyone else loses; at k = infinity all scores stay 1.
EffectReport entity_adds_authors_effect(const ParticipationArray& array, std::size_t index,
                                        double added, const KParam& k);

// Every entity adds the same number of authors. The direction per entity
// depends only on its count versus the mean: below the mean gains, above
// loses, equal stays. Independent of k and of the added amount.
EffectReport uniform_addition_effect(const ParticipationArray& array, double added_each,
                                     const KParam& k);

// For a non-decreasingly sorted array, the indices whose count is at most
// half the median. Every such entity (and every entity before it) cannot
// lose from a uniform addition. May be empty.
std::vector<std::size_t> median_threshold_indices(const ParticipationArray& array);

}  // namespace mfc
