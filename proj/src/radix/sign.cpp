#include "radix/sign.hpp"

#include <stdexcept>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace cgr {

namespace {
int rational_sign(const Rational& q) { return q == 0 ? 0 : (q > 0 ? 1 : -1); }
}  // namespace

int sign_of(const Radical& x) {
  const auto& t = x.terms();
  if (t.empty()) return 0;
  if (t.size() == 1) return rational_sign(t.begin()->second);
  if (t.size() == 2) {
    auto it = t.begin();
    auto [d1, c1] = *it++;
    auto [d2, c2] = *it;
    int s1 = rational_sign(c1), s2 = rational_sign(c2);
    if (s1 == s2) return s1;
    // Opposite signs: |c1|sqrt(d1) vs |c2|sqrt(d2) decides.
    int cmp = rational_sign(c1 * c1 * d1 - c2 * c2 * d2);
    return cmp >= 0 ? s1 : s2;  // cmp == 0 impossible for distinct radicands
  }
  using Big = boost::multiprecision::cpp_bin_float_100;
  Big v = 0;
  Big scale = 0;
  for (const auto& [d, c] : t) {
    Big term = Big(numerator(c)) / Big(denominator(c)) * sqrt(Big(d));
    v += term;
    scale += abs(term);
  }
  if (abs(v) > scale * Big(1e-60)) return v > 0 ? 1 : -1;
  throw std::domain_error("radical sign is numerically ambiguous");
}

}  // namespace cgr
