#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace liekit {

using Integer = mpz_class;
using Rational = mpq_class;

using IVec = std::vector<int64_t>;
using QVec = std::vector<Rational>;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q"; the result is canonicalized. Throws ParseError.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Throws std::overflow_error if the value does not fit.
int64_t to_int64(const Integer& z);

QVec to_qvec(const IVec& v);

std::string format_vec(const IVec& v, char sep = ',');

// Comma-separated integers, e.g. "1,0,2". Throws ParseError.
IVec parse_ivec(std::string_view text);

} // namespace liekit
