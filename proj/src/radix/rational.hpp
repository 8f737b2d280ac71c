#pragma once

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>
#include <boost/multiprecision/cpp_int.hpp>

namespace cgr {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Memoized, initialize-once-read-many; the table never shrinks and entries
// never change, so concurrent readers that race an extension see either the
// old or the new identical values.
inline Int factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  static const int kMax = 256;
  if (n > kMax) throw std::domain_error("factorial argument exceeds supported range");
  static std::mutex mu;
  static std::vector<Int> memo{Int(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(memo.size()) <= n)
    memo.push_back(memo.back() * static_cast<int>(memo.size()));
  return memo[n];
}

// Product a*(a+1)*...*b; empty range (b < a) is 1.
inline Int ascending_product(int a, int b) {
  Int r = 1;
  for (int i = a; i <= b; ++i) r *= i;
  return r;
}

inline int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

inline double to_double(const Rational& q) {
  return q.convert_to<double>();
}

}  // namespace cgr
