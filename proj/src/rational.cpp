#include "topfan/rational.hpp"

#include "topfan/errors.hpp"

#include <charconv>
#include <numeric>

namespace topfan {

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("bad rational: '" + std::string(whole) + "'");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("bad rational: '" + std::string(whole) + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw ParseError("bad rational: '" + std::string(whole) + "'");
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

int sign(const Rational& q) { return q.sign(); }

Rational abs(const Rational& q) { return q.sign() < 0 ? Rational(-q) : q; }

QVec to_qvec(const ZVec& v) {
  QVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Rational dot(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational l1_norm(const QVec& v) {
  Rational s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

std::int64_t gcd_of(const ZVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

}  // namespace topfan
