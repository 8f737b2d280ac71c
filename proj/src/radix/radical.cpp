#include "radix/radical.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace cgr {

namespace {

// Largest trial divisor used when extracting the square part of an integer.
// Radicands arising from weights N <= 12 stay tiny; the wide margin only
// matters for unusual CLI input.
constexpr std::int64_t kTrialLimit = 1'000'003;

}  // namespace

SqrtDecomposition sqrt_decompose(const Rational& q) {
  if (q < 0) throw std::domain_error("sqrt of negative rational");
  if (q == 0) return {Rational(0), 1};
  // sqrt(num/den) = sqrt(num*den) / den
  Int m = numerator(q) * denominator(q);
  Int square_part = 1;
  Int radicand = 1;
  Int p = 2;
  while (p <= kTrialLimit && p * p <= m) {
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      for (int i = 0; i < e / 2; ++i) square_part *= p;
      if (e % 2 != 0) radicand *= p;
    }
    p = (p == 2) ? Int(3) : Int(p + 2);
  }
  if (m > 1) {
    if (p * p > m) {
      // Remaining cofactor is prime.
      radicand *= m;
    } else {
      Int r = sqrt(m);
      if (r * r == m) {
        square_part *= r;
      } else {
        throw std::domain_error("radicand too large to canonicalize: " + m.str());
      }
    }
  }
  if (radicand > std::numeric_limits<std::int64_t>::max())
    throw std::domain_error("square-free radicand exceeds 64-bit range");
  return {Rational(square_part, denominator(q)), radicand.convert_to<std::int64_t>()};
}

Radical Radical::sqrt_rational(const Rational& q) {
  SqrtDecomposition d = sqrt_decompose(q);
  Radical r;
  r.set_term(d.radicand, d.coeff);
  return r;
}

Radical Radical::radical_term(const Rational& c, std::int64_t d) {
  if (d < 0) throw std::domain_error("negative radicand");
  Radical r = sqrt_rational(Rational(d));
  Radical out;
  for (const auto& [rad, cf] : r.terms_) out.set_term(rad, cf * c);
  return out;
}

Rational Radical::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw std::domain_error("value is not rational");
  return terms_.begin()->second;
}

Rational Radical::coeff(std::int64_t radicand) const {
  auto it = terms_.find(radicand);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Radical::add_term(std::int64_t d, const Rational& c) {
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(d, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Radical Radical::operator-() const {
  Radical r;
  for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
  return r;
}

Radical& Radical::operator+=(const Radical& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

Radical& Radical::operator-=(const Radical& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

Radical operator*(const Radical& a, const Radical& b) {
  Radical r;
  for (const auto& [d1, c1] : a.terms_) {
    for (const auto& [d2, c2] : b.terms_) {
      // sqrt(d1)*sqrt(d2) = g*sqrt((d1/g)*(d2/g)) with g = gcd(d1,d2);
      // the product of the coprime cofactors is square-free.
      std::int64_t g = std::gcd(d1, d2);
      std::int64_t d = (d1 / g) * (d2 / g);
      r.add_term(d, c1 * c2 * g);
    }
  }
  return r;
}

Radical operator/(const Radical& a, const Radical& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (b.terms_.size() == 1) {
    auto [d, c] = *b.terms_.begin();
    // 1 / (c*sqrt(d)) = sqrt(d) / (c*d)
    Radical inv;
    inv.set_term(d, Rational(1) / (c * d));
    return a * inv;
  }
  if (b.terms_.size() == 2) {
    // Conjugate rationalization: (c1*sqrt(d1)+c2*sqrt(d2)) times its
    // conjugate is c1^2*d1 - c2^2*d2, a nonzero rational.
    auto it = b.terms_.begin();
    auto [d1, c1] = *it++;
    auto [d2, c2] = *it;
    Radical conj;
    conj.set_term(d1, c1);
    conj.set_term(d2, -c2);
    Rational norm = c1 * c1 * d1 - c2 * c2 * d2;
    return (a * conj) * Radical(Rational(1) / norm);
  }
  throw unsupported_divisor("divisor has more than two radical terms");
}

double Radical::approx() const {
  double v = 0.0;
  for (const auto& [d, c] : terms_)
    v += to_double(c) * std::sqrt(static_cast<double>(d));
  return v;
}

std::string Radical::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    Rational ac = c < 0 ? Rational(-c) : c;
    if (!first)
      os << (c < 0 ? " - " : " + ");
    else if (c < 0)
      os << "-";
    first = false;
    bool unit = (ac == 1 && d != 1);
    if (!unit) {
      os << numerator(ac).str();
      if (denominator(ac) != 1) os << "/" << denominator(ac).str();
      if (d != 1) os << "*";
    }
    if (d != 1) os << "sqrt(" << d << ")";
  }
  return os.str();
}

}  // namespace cgr
