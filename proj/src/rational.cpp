#include "cdens/rational.hpp"

#include <cmath>
#include <limits>

namespace cdens {

namespace {

using I128 = __int128;

std::int64_t narrow(I128 v, const char* where) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    raise(ErrorKind::limit, std::string("rational overflow in ") + where);
  }
  return static_cast<std::int64_t>(v);
}

struct Parts {
  std::int64_t num;
  std::int64_t den;
};

Parts make_normalized(I128 num, I128 den, const char* where) {
  if (den == 0) raise(ErrorKind::domain, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  // std::gcd is not defined for __int128 everywhere; do it by hand.
  I128 a = num < 0 ? -num : num;
  I128 b = den;
  while (b != 0) {
    const I128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  return {narrow(num / a, where), narrow(den / a, where)};
}


std::int64_t isqrt_exact(std::int64_t v) {
  // Returns the exact integer square root, or -1 when v is not a square.
  if (v < 0) return -1;
  auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  for (std::int64_t c = root > 2 ? root - 2 : 0; c <= root + 2; ++c) {
    if (c * c == v) return c;
  }
  return -1;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  const Parts p = make_normalized(num, den, "constructor");
  num_ = p.num;
  den_ = p.den;
}

Rational operator+(const Rational& a, const Rational& b) {
  const Parts p = make_normalized(I128(a.num_) * b.den_ + I128(b.num_) * a.den_,
                                  I128(a.den_) * b.den_, "addition");
  return Rational(p.num, p.den);
}

Rational operator-(const Rational& a, const Rational& b) {
  const Parts p = make_normalized(I128(a.num_) * b.den_ - I128(b.num_) * a.den_,
                                  I128(a.den_) * b.den_, "subtraction");
  return Rational(p.num, p.den);
}

Rational operator*(const Rational& a, const Rational& b) {
  const Parts p =
      make_normalized(I128(a.num_) * b.num_, I128(a.den_) * b.den_, "multiplication");
  return Rational(p.num, p.den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) raise(ErrorKind::domain, "rational division by zero");
  const Parts p =
      make_normalized(I128(a.num_) * b.den_, I128(a.den_) * b.num_, "division");
  return Rational(p.num, p.den);
}

bool operator<(const Rational& a, const Rational& b) {
  return I128(a.num_) * b.den_ < I128(b.num_) * a.den_;
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) raise(ErrorKind::argument, "rational pow expects a non-negative exponent");
  Rational acc(1);
  for (int i = 0; i < exponent; ++i) acc = acc * *this;
  return acc;
}

bool Rational::is_square() const {
  return num_ >= 0 && isqrt_exact(num_) >= 0 && isqrt_exact(den_) >= 0;
}

Rational Rational::sqrt() const {
  const std::int64_t rn = isqrt_exact(num_);
  const std::int64_t rd = isqrt_exact(den_);
  if (rn < 0 || rd < 0) raise(ErrorKind::domain, "rational value has no exact square root");
  return Rational(rn, rd);
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace cdens
