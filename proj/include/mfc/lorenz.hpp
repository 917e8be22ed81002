#pragma once

#include <string_view>
#include <vector>

#include "mfc/k_param.hpp"

namespace mfc {

struct LorenzPoint {
  double x = 0.0;
  double y = 0.0;
};

// Piecewise-linear curve of cumulative shares of a decreasingly sorted
// array: starts at (0,0), ends at (1,1), concave. Note the decreasing-order
// convention; the classical curve sorts increasingly.
struct LorenzCurve {
  std::vector<LorenzPoint> points;
};

// Values must be non-negative with a positive total.
LorenzCurve lorenz_curve(std::vector<double> values);

// less_or_equal means the first array is majorized by the second, i.e. it
// is the more even one and its Lorenz curve lies on or below the other's.
enum class MajorizationResult { less_or_equal, greater_or_equal, equal, incomparable };

std::string_view majorization_name(MajorizationResult result);

// Compares normalized decreasing partial sums at every prefix. Arrays must
// have equal length; totals are normalized away, so the order is scale
// invariant.
MajorizationResult majorization_compare(std::vector<double> x, std::vector<double> xp);

// Total publication score from relative institute contributions b in [0,1]:
// sum of b^(1/k). A sum of concave transforms, so more even shares score
// higher for k > 1.
double diversity_sum(const std::vector<double>& shares, const KParam& k);

// Percentage of the publication total captured by one share:
// 100 * target^(1/k) / diversity_sum. The target must be one of the shares.
double percentage_of_total(double target_share, const std::vector<double>& shares,
                           const KParam& k);

}  // namespace mfc
