#include "rat.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace tric {

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  Rat q(x);  // exact
  q.canonicalize();
  return q;
}

double rat_to_double(const Rat& q) { return q.get_d(); }

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat rat_parse(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  Rat value;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("bad rational literal: " + text);
    Int n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    value = rat(n, d);
  } else if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("bad decimal literal: " + text);
    Int n(whole, 10);
    Int scale(1);
    for (char c : frac) {
      n = n * 10 + (c - '0');
      scale *= 10;
    }
    value = rat(n, scale);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("bad integer literal: " + text);
    value = rat(Int(s, 10), Int(1));
  }
  return neg ? Rat(-value) : value;
}

Int int_parse(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("bad integer literal: " + text);
  Int n(s, 10);
  return neg ? Int(-n) : n;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return rat(1);
  bool inv = exp < 0;
  unsigned long e = inv ? -exp : exp;
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  if (inv) {
    if (r == 0) throw std::domain_error("0 to a negative power");
    r = 1 / r;
  }
  return r;
}

}  // namespace tric
