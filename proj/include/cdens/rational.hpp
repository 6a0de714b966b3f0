#pragma once

#include <cstdint>
#include <string>

#include "cdens/errors.hpp"

namespace cdens {

// Exact rational arithmetic backing the exact evaluation mode of the bound
// formulas. The values involved are tiny (binomials and small powers), so
// 64-bit components with 128-bit intermediates are plenty; anything that
// would not fit raises instead of silently wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  Rational pow(int exponent) const;  // exponent >= 0

  // True when both numerator and denominator are perfect squares, i.e. the
  // value has an exact rational square root.
  bool is_square() const;
  Rational sqrt() const;

  double to_double() const;
  std::string str() const;  // "p/q", or just "p" for integers

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace cdens
