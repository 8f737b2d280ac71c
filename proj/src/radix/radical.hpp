#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "radix/rational.hpp"

namespace cgr {

// Division was requested for a divisor outside the supported field shapes
// (more than two radical terms).
struct unsupported_divisor : std::domain_error {
  using std::domain_error::domain_error;
};

// Decompose sqrt(q) = coeff * sqrt(radicand) with radicand square-free.
// Throws std::domain_error for negative q.
struct SqrtDecomposition {
  Rational coeff;
  std::int64_t radicand;
};
SqrtDecomposition sqrt_decompose(const Rational& q);

// Exact scalar of the form sum_i c_i * sqrt(d_i) with rational c_i and
// distinct square-free positive integer radicands d_i (d = 1 carries the
// rational part).  Values are immutable once built and canonical: equal
// values have identical term maps.
class Radical {
 public:
  using TermMap = std::map<std::int64_t, Rational>;

  Radical() = default;
  explicit Radical(int v) { set_term(1, Rational(v)); }
  explicit Radical(const Rational& v) { set_term(1, v); }

  static Radical zero() { return Radical(); }
  static Radical one() { return Radical(1); }
  static Radical from_rational(const Rational& q) { return Radical(q); }

  // Canonical form of sqrt(q), q >= 0.
  static Radical sqrt_rational(const Rational& q);

  // c * sqrt(d) for arbitrary integer d >= 0 (d is re-canonicalized).
  static Radical radical_term(const Rational& c, std::int64_t d);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
  }
  // At most one term (includes zero).
  bool is_pure_radical() const { return terms_.size() <= 1; }
  Rational rational_value() const;
  Rational coeff(std::int64_t radicand) const;
  int term_count() const { return static_cast<int>(terms_.size()); }

  Radical operator-() const;
  Radical& operator+=(const Radical& o);
  Radical& operator-=(const Radical& o);
  friend Radical operator+(Radical a, const Radical& b) { return a += b; }
  friend Radical operator-(Radical a, const Radical& b) { return a -= b; }
  friend Radical operator*(const Radical& a, const Radical& b);

  // Exact quotient.  The divisor must be nonzero and have at most two
  // radical terms; conjugate rationalization makes any such divisor
  // invertible.  Throws unsupported_divisor otherwise.
  friend Radical operator/(const Radical& a, const Radical& b);

  bool operator==(const Radical& o) const { return terms_ == o.terms_; }
  bool operator!=(const Radical& o) const { return !(*this == o); }

  double approx() const;

  std::string to_string() const;

 private:
  void set_term(std::int64_t d, const Rational& c) {
    if (c != 0) terms_[d] = c;
  }
  void add_term(std::int64_t d, const Rational& c);

  TermMap terms_;
};

inline Radical operator*(const Rational& c, const Radical& x) {
  return Radical(c) * x;
}

}  // namespace cgr
