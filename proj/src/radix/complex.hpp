#pragma once

#include <string>

namespace cgr {

// Complex number over a scalar backend (Radical or Approx), componentwise
// arithmetic.  ComplexRadical in the docs is Cx<Radical>.
template <class S>
struct Cx {
  S re{};
  S im{};

  Cx() = default;
  explicit Cx(S r) : re(std::move(r)) {}
  Cx(S r, S i) : re(std::move(r)), im(std::move(i)) {}

  static Cx zero() { return Cx(); }
  static Cx one() { return Cx(S::one()); }
  static Cx i_unit() { return Cx(S::zero(), S::one()); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  Cx conj() const { return Cx(re, -im); }

  Cx operator-() const { return Cx(-re, -im); }
  Cx& operator+=(const Cx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Cx& operator-=(const Cx& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Cx operator+(Cx a, const Cx& b) { return a += b; }
  friend Cx operator-(Cx a, const Cx& b) { return a -= b; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return Cx(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  bool operator==(const Cx& o) const { return re == o.re && im == o.im; }
  bool operator!=(const Cx& o) const { return !(*this == o); }

  std::string to_string() const {
    return "(" + re.to_string() + ") + (" + im.to_string() + ")*i";
  }
};

}  // namespace cgr
