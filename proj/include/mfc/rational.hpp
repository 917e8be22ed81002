#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mfc {

// Exact rational with 64-bit numerator and denominator, normalized so the
// denominator is positive and gcd(|num|, den) == 1.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long numerator) : num_(numerator), den_(1) {}
  Rational(long long numerator, long long denominator) {
    *this = make(numerator, denominator);
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division of rational by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Accepts "3", "-4/7" and decimal text such as "0.25".
  static Rational parse(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      negative = text[i] == '-';
      ++i;
    }
    const __int128 whole = parse_digits(text, i);
    __int128 num = whole;
    __int128 den = 1;
    if (i < text.size() && text[i] == '/') {
      ++i;
      den = parse_digits(text, i);
    } else if (i < text.size() && text[i] == '.') {
      ++i;
      const std::size_t start = i;
      const __int128 frac = parse_digits(text, i);
      for (std::size_t d = start; d < i; ++d) {
        num *= 10;
        den *= 10;
      }
      num += frac;
    }
    if (i != text.size()) throw std::invalid_argument(bad_text(text));
    return make(negative ? -num : num, den);
  }

 private:
  using i128 = __int128;

  static std::string bad_text(std::string_view text) {
    return "not a rational number: '" + std::string(text) + "'";
  }

  static __int128 parse_digits(std::string_view text, std::size_t& i) {
    const std::size_t start = i;
    __int128 value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > std::numeric_limits<long long>::max()) throw std::overflow_error(bad_text(text));
      ++i;
    }
    if (i == start) throw std::invalid_argument(bad_text(text));
    return value;
  }

  static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
      const unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static long long narrow(__int128 v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
      throw std::overflow_error("rational arithmetic overflow");
    return static_cast<long long>(v);
  }

  static Rational make(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const unsigned __int128 g =
        gcd128(static_cast<unsigned __int128>(num < 0 ? -num : num),
               static_cast<unsigned __int128>(den));
    if (g > 1) {
      num /= static_cast<__int128>(g);
      den /= static_cast<__int128>(g);
    }
    Rational r;
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace mfc
