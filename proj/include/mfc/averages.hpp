#pragma once

#include <vector>

namespace mfc {

// Sample of strictly positive values with weights in [0, 1]; the weight sum
// must be positive.
struct WeightedSample {
  std::vector<double> values;
  std::vector<double> weights;
};

double weighted_arithmetic(const WeightedSample& sample);
double weighted_geometric(const WeightedSample& sample);
double weighted_harmonic(const WeightedSample& sample);

}  // namespace mfc
