#include "dwbc/exact/rational.hpp"

#include <cctype>

#include "dwbc/error.hpp"

namespace dwbc {

std::string to_string(const Rational& q) { return q.get_str(10); }

namespace {

bool all_digits(const std::string& s, std::size_t from) {
  if (from >= s.size()) return false;
  for (std::size_t i = from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) fail(ErrorKind::Parse, "empty rational");

  std::size_t sign_off = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string ip = s.substr(sign_off, dot - sign_off);
    std::string fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip, 0)) ||
        (!fp.empty() && !all_digits(fp, 0)))
      fail(ErrorKind::Parse, "bad decimal '" + text + "'");
    mpz_class num(ip.empty() ? "0" : ip, 10);
    mpz_class den = 1;
    for (char ch : fp) {
      num = num * 10 + (ch - '0');
      den *= 10;
    }
    Rational r(num, den);
    r.canonicalize();
    return s[0] == '-' ? Rational(-r) : r;
  }

  auto slash = s.find('/');
  std::string ns = s.substr(0, slash);
  std::size_t noff = (ns[0] == '-' || ns[0] == '+') ? 1 : 0;
  if (!all_digits(ns, noff)) fail(ErrorKind::Parse, "bad rational '" + text + "'");
  if (ns[0] == '+') ns = ns.substr(1);
  mpz_class num(ns, 10);
  mpz_class den = 1;
  if (slash != std::string::npos) {
    std::string ds = s.substr(slash + 1);
    if (!all_digits(ds, 0)) fail(ErrorKind::Parse, "bad rational '" + text + "'");
    den = mpz_class(ds, 10);
    if (den == 0) fail(ErrorKind::ZeroDenominator, "zero denominator in '" + text + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational pow(const Rational& x, long k) {
  if (k < 0) {
    if (sgn(x) == 0) fail(ErrorKind::ZeroDenominator, "negative power of zero");
    Rational inv = 1 / x;
    return pow(inv, -k);
  }
  Rational result = 1, base = x;
  unsigned long e = static_cast<unsigned long>(k);
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

}  // namespace dwbc
