#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "radix/rational.hpp"

namespace cgr {

// Double-precision scalar with the same operation surface as Radical, so
// every higher module can be instantiated over either backend.  Equality is
// |x - y| <= 1e-10 * max(1, |x|, |y|).
class Approx {
 public:
  static constexpr double kEqTol = 1e-10;

  Approx() = default;
  explicit Approx(int v) : v_(v) {}
  explicit Approx(double v) : v_(v) {}
  explicit Approx(const Rational& q) : v_(to_double(q)) {}

  static Approx zero() { return Approx(); }
  static Approx one() { return Approx(1); }
  static Approx from_rational(const Rational& q) { return Approx(q); }
  static Approx sqrt_rational(const Rational& q) {
    if (q < 0) throw std::domain_error("sqrt of negative rational");
    return Approx(std::sqrt(to_double(q)));
  }

  double value() const { return v_; }
  bool is_zero() const { return std::fabs(v_) <= kEqTol; }

  Approx operator-() const { return Approx(-v_); }
  Approx& operator+=(const Approx& o) { v_ += o.v_; return *this; }
  Approx& operator-=(const Approx& o) { v_ -= o.v_; return *this; }
  friend Approx operator+(Approx a, const Approx& b) { return a += b; }
  friend Approx operator-(Approx a, const Approx& b) { return a -= b; }
  friend Approx operator*(const Approx& a, const Approx& b) { return Approx(a.v_ * b.v_); }
  friend Approx operator/(const Approx& a, const Approx& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return Approx(a.v_ / b.v_);
  }

  bool operator==(const Approx& o) const {
    double scale = std::max({1.0, std::fabs(v_), std::fabs(o.v_)});
    return std::fabs(v_ - o.v_) <= kEqTol * scale;
  }
  bool operator!=(const Approx& o) const { return !(*this == o); }

  double approx() const { return v_; }

  std::string to_string() const { return std::to_string(v_); }

 private:
  double v_ = 0.0;
};

}  // namespace cgr
