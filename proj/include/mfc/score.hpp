#pragma once

#include <variant>

#include "mfc/rational.hpp"

namespace mfc {

// Credit value that stays an exact rational where the counting method is
// exact (k = 1 and k = infinity) and degrades to floating point in between.
class Score {
 public:
  Score() : v_(Rational(0)) {}

  static Score exact(Rational r) {
    Score s;
    s.v_ = r;
    return s;
  }

  static Score approx(double v) {
    Score s;
    s.v_ = v;
    return s;
  }

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }

  double value() const {
    return is_exact() ? std::get<Rational>(v_).to_double() : std::get<double>(v_);
  }

  Score& operator+=(const Score& o) {
    if (is_exact() && o.is_exact())
      v_ = std::get<Rational>(v_) + std::get<Rational>(o.v_);
    else
      v_ = value() + o.value();
    return *this;
  }

 private:
  std::variant<Rational, double> v_;
};

}  // namespace mfc
