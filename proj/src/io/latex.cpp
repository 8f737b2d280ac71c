#include "io/latex.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cgr {

namespace {

std::string term_latex(const Rational& c, std::int64_t d) {
  // c > 0 here; the sign is emitted by the caller.
  Int num = numerator(c);
  Int den = denominator(c);
  std::ostringstream os;
  if (d == 1) {
    if (den == 1)
      os << num.str();
    else
      os << "\\frac{" << num.str() << "}{" << den.str() << "}";
    return os.str();
  }
  std::string root = "\\sqrt{" + std::to_string(d) + "}";
  std::string top = (num == 1) ? root : num.str() + root;
  if (den == 1) return top;
  return "\\frac{" + top + "}{" + den.str() + "}";
}

}  // namespace

std::string to_latex(const Radical& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : x.terms()) {
    bool neg = c < 0;
    Rational ac = neg ? Rational(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += term_latex(ac, d);
    first = false;
  }
  return out;
}

std::string to_latex(const Approx& x) { return std::to_string(x.value()); }

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("latex parse error at " + std::to_string(pos) + ": " + why);
  }

  Int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return Int(s.substr(start, pos - start));
  }

  std::int64_t sqrt_radicand() {
    if (!eat_word("\\sqrt{")) fail("expected \\sqrt{");
    Int d = integer();
    if (!eat('}')) fail("expected }");
    return d.convert_to<std::int64_t>();
  }

  // integer? sqrt? within a numerator or bare term
  Radical numerator_part() {
    skip_ws();
    bool have_int = pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    Int num = have_int ? integer() : Int(1);
    skip_ws();
    if (pos < s.size() && s[pos] == '\\') {
      std::int64_t d = sqrt_radicand();
      return Radical::radical_term(Rational(num), d);
    }
    if (!have_int) fail("expected integer or \\sqrt");
    return Radical(Rational(num));
  }

  Radical term() {
    skip_ws();
    if (eat_word("\\frac{")) {
      Radical top = numerator_part();
      if (!eat('}')) fail("expected } after numerator");
      if (!eat('{')) fail("expected { before denominator");
      Int den = integer();
      if (!eat('}')) fail("expected } after denominator");
      return top * Radical(Rational(1, den));
    }
    return numerator_part();
  }

  Radical parse() {
    skip_ws();
    Radical acc;
    bool neg = eat('-');
    Radical t = term();
    acc = neg ? -t : t;
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        fail("expected + or -");
    }
    return acc;
  }
};

}  // namespace

Radical radical_from_latex(const std::string& s) {
  if (s == "0") return Radical();
  Parser p(s);
  return p.parse();
}

}  // namespace cgr
