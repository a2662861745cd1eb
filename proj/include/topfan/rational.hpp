#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace topfan {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using QVec = std::vector<Rational>;
using ZVec = std::vector<std::int64_t>;

// "p", "-p", "p/q"; throws ParseError
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
int sign(const Rational& q);
Rational abs(const Rational& q);

QVec to_qvec(const ZVec& v);
bool is_zero(const QVec& v);
Rational dot(const QVec& a, const QVec& b);
Rational l1_norm(const QVec& v);

std::int64_t gcd_of(const ZVec& v);

}  // namespace topfan
