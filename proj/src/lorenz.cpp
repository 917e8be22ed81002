#include "mfc/lorenz.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace mfc {

namespace {

constexpr double kPrefixTolerance = 1e-12;

double checked_total(const std::vector<double>& values) {
  if (values.empty()) throw std::domain_error("value array is empty");
  double total = 0.0;
  for (const double v : values) {
    if (std::isnan(v) || v < 0.0 || !std::isfinite(v))
      throw std::domain_error("values must be non-negative");
    total += v;
  }
  if (!(total > 0.0)) throw std::domain_error("value total must be positive");
  return total;
}

}  // namespace

LorenzCurve lorenz_curve(std::vector<double> values) {
  const double total = checked_total(values);
  std::sort(values.begin(), values.end(), std::greater<>());
  LorenzCurve curve;
  curve.points.reserve(values.size() + 1);
  curve.points.push_back({0.0, 0.0});
  const double n = static_cast<double>(values.size());
  double prefix = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    prefix += values[i];
    curve.points.push_back({static_cast<double>(i + 1) / n, prefix / total});
  }
  curve.points.back().y = 1.0;
  return curve;
}

std::string_view majorization_name(MajorizationResult result) {
  switch (result) {
    case MajorizationResult::less_or_equal: return "less_or_equal";
    case MajorizationResult::greater_or_equal: return "greater_or_equal";
    case MajorizationResult::equal: return "equal";
    case MajorizationResult::incomparable: return "incomparable";
  }
  return "incomparable";
}

MajorizationResult majorization_compare(std::vector<double> x, std::vector<double> xp) {
  if (x.size() != xp.size()) throw std::domain_error("arrays differ in length");
  const double total_x = checked_total(x);
  const double total_xp = checked_total(xp);
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(xp.begin(), xp.end(), std::greater<>());

  bool le = true;
  bool ge = true;
  double prefix_x = 0.0;
  double prefix_xp = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    prefix_x += x[i];
    prefix_xp += xp[i];
    const double a = prefix_x / total_x;
    const double b = prefix_xp / total_xp;
    if (a > b + kPrefixTolerance) le = false;
    if (b > a + kPrefixTolerance) ge = false;
  }
  if (le && ge) return MajorizationResult::equal;
  if (le) return MajorizationResult::less_or_equal;
  if (ge) return MajorizationResult::greater_or_equal;
  return MajorizationResult::incomparable;
}

double diversity_sum(const std::vector<double>& shares, const KParam& k) {
  double total = 0.0;
  for (const double b : shares) {
    if (std::isnan(b) || b < 0.0 || b > 1.0)
      throw std::domain_error("shares must lie in [0, 1]");
    total += k.root(b);
  }
  return total;
}

double percentage_of_total(double target_share, const std::vector<double>& shares,
                           const KParam& k) {
  bool found = false;
  for (const double b : shares)
    if (std::abs(b - target_share) <= kPrefixTolerance) found = true;
  if (!found) throw std::domain_error("target share is not among the shares");
  const double total = diversity_sum(shares, k);
  if (!(total > 0.0)) throw std::domain_error("total score is zero");
  return 100.0 * k.root(target_share) / total;
}

}  // namespace mfc
