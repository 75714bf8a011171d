#include "spingpc/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace spingpc {

Rat rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty numeric token");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    bool neg = false;
    if (!num.empty() && (num[0] == '+' || num[0] == '-')) {
      neg = num[0] == '-';
      num.erase(num.begin());
    }
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed fraction '" + text + "'");
    }
    Rat r{mpz_class(num), mpz_class(den)};
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    r.canonicalize();
    return neg ? Rat(-r) : r;
  }

  // decimal / scientific form
  std::size_t pos = 0;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = s[pos] == '-';
    ++pos;
  }
  std::string int_part, frac_part;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) int_part += s[pos++];
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) frac_part += s[pos++];
  }
  long exponent = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    bool eneg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      eneg = s[pos] == '-';
      ++pos;
    }
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
    if (digits.empty()) throw std::invalid_argument("malformed exponent in '" + text + "'");
    exponent = std::strtol(digits.c_str(), nullptr, 10);
    if (eneg) exponent = -exponent;
  }
  if (pos != s.size() || (int_part.empty() && frac_part.empty())) {
    throw std::invalid_argument("malformed number '" + text + "'");
  }

  mpz_class mantissa(int_part.empty() ? std::string("0") : int_part);
  for (char c : frac_part) {
    mantissa *= 10;
    mantissa += c - '0';
  }
  long shift = exponent - static_cast<long>(frac_part.size());
  Rat r(mantissa);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  if (shift > 0) {
    r *= Rat(pow10);
  } else if (shift < 0) {
    r /= Rat(pow10);
  }
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

std::string rat_to_string(const Rat& value) {
  Rat v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

double rat_to_double(const Rat& value) { return value.get_d(); }

Rat rat_abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rat sum(std::span<const Rat> values) {
  Rat acc = 0;
  for (const auto& v : values) acc += v;
  return acc;
}

Rat rationalize(double value, unsigned long denominator) {
  if (!std::isfinite(value)) throw std::invalid_argument("rationalize: non-finite input");
  double scaled = value * static_cast<double>(denominator);
  Rat r{mpz_class(static_cast<long>(std::llround(scaled))), mpz_class(denominator)};
  r.canonicalize();
  return r;
}

}  // namespace spingpc
