#include "mfc/averages.hpp"

#include <cmath>
#include <stdexcept>

namespace mfc {

namespace {

double checked_weight_sum(const WeightedSample& sample) {
  if (sample.values.empty()) throw std::domain_error("weighted sample is empty");
  if (sample.values.size() != sample.weights.size())
    throw std::domain_error("values and weights differ in length");
  double weight_sum = 0.0;
  for (std::size_t i = 0; i < sample.values.size(); ++i) {
    const double x = sample.values[i];
    const double w = sample.weights[i];
    if (!(x > 0.0) || !std::isfinite(x))
      throw std::domain_error("sample values must be strictly positive");
    if (!(w >= 0.0 && w <= 1.0)) throw std::domain_error("weights must lie in [0, 1]");
    weight_sum += w;
  }
  if (!(weight_sum > 0.0)) throw std::domain_error("weight sum must be positive");
  return weight_sum;
}

}  // namespace

double weighted_arithmetic(const WeightedSample& sample) {
  const double weight_sum = checked_weight_sum(sample);
  double acc = 0.0;
  for (std::size_t i = 0; i < sample.values.size(); ++i)
    acc += sample.weights[i] * sample.values[i];
  return acc / weight_sum;
}

double weighted_geometric(const WeightedSample& sample) {
  const double weight_sum = checked_weight_sum(sample);
  double log_acc = 0.0;
  for (std::size_t i = 0; i < sample.values.size(); ++i)
    log_acc += sample.weights[i] * std::log(sample.values[i]);
  return std::exp(log_acc / weight_sum);
}

double weighted_harmonic(const WeightedSample& sample) {
  const double weight_sum = checked_weight_sum(sample);
  double acc = 0.0;
  for (std::size_t i = 0; i < sample.values.size(); ++i)
    acc += sample.weights[i] / sample.values[i];
  return weight_sum / acc;
}

}  // namespace mfc
