#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mfc {

// Point on the fractional-to-full counting continuum: a finite exponent
// k >= 1 or the full-counting limit k = infinity. The limit is handled
// symbolically, never by a large finite surrogate.
class KParam {
 public:
  KParam() : k_(1.0) {}

  static KParam finite(double k) {
    if (!std::isfinite(k)) throw std::domain_error("k must be finite");
    return from_double(k);
  }

  static KParam infinite() { return KParam(std::numeric_limits<double>::infinity()); }

  // Accepts any finite k >= 1 or +infinity.
  static KParam from_double(double k) {
    if (std::isnan(k)) throw std::domain_error("k must be a number");
    if (k < 1.0) throw std::domain_error("k must be >= 1");
    return KParam(k);
  }

  // Accepts decimal text or the literal token "inf".
  static KParam parse(std::string_view text);

  bool is_infinite() const { return std::isinf(k_); }
  bool is_one() const { return k_ == 1.0; }
  double value() const { return k_; }

  // x^(1/k) for x >= 0. 0 maps to 0 for every k, including the infinite
  // limit, so absent participations never produce spurious credit.
  double root(double x) const {
    if (std::isnan(x) || x < 0.0) throw std::domain_error("root argument must be >= 0");
    if (x == 0.0) return 0.0;
    if (is_infinite()) return 1.0;
    if (k_ == 1.0) return x;
    return std::pow(x, 1.0 / k_);
  }

  std::string str() const {
    if (is_infinite()) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", k_);
    return buf;
  }

  friend bool operator==(const KParam& a, const KParam& b) { return a.k_ == b.k_; }
  friend bool operator!=(const KParam& a, const KParam& b) { return a.k_ != b.k_; }

 private:
  explicit KParam(double k) : k_(k) {}

  double k_;
};

// Weight of the fractional-counting extreme in a two-point weighted average.
class Lambda {
 public:
  explicit Lambda(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) throw std::domain_error("lambda must lie in [0, 1]");
  }

  double value() const { return value_; }

 private:
  double value_;
};

}  // namespace mfc
