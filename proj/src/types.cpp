#include "adasub/types.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

#include "adasub/errors.hpp"

namespace adasub {

double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational parse_unsigned(const std::string& tok) {
  auto slash = tok.find('/');
  if (slash != std::string::npos) {
    std::string num = tok.substr(0, slash);
    std::string den = tok.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw InvalidArgumentError("malformed rational: " + tok);
    Rational d{boost::multiprecision::cpp_int(den)};
    if (d == 0) throw InvalidArgumentError("zero denominator: " + tok);
    return Rational{boost::multiprecision::cpp_int(num)} / d;
  }
  auto dot = tok.find('.');
  if (dot != std::string::npos) {
    std::string whole = tok.substr(0, dot);
    std::string frac = tok.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac))
      throw InvalidArgumentError("malformed number: " + tok);
    Rational value{boost::multiprecision::cpp_int(whole)};
    Rational scale = 1;
    for (char c : frac) {
      scale /= 10;
      value += scale * (c - '0');
    }
    return value;
  }
  if (!all_digits(tok)) throw InvalidArgumentError("malformed number: " + tok);
  return Rational{boost::multiprecision::cpp_int(tok)};
}

}  // namespace

Rational parse_rational(const std::string& token) {
  if (token.empty()) throw InvalidArgumentError("empty number");
  if (token[0] == '-') return -parse_unsigned(token.substr(1));
  if (token[0] == '+') return parse_unsigned(token.substr(1));
  return parse_unsigned(token);
}

std::string rational_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string double_str(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace adasub
