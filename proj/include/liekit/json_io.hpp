#pragma once

#include <json.hpp>

#include "liekit/polynomial.hpp"
#include "liekit/rational.hpp"
#include "liekit/rootsys.hpp"
#include "liekit/symfun.hpp"

namespace liekit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "liekit/1";

// Top-level object carrying the schema tag.
Json json_document(const std::string& kind);

Json json_rational(const Rational& q);
Json json_integer(const Integer& z);
Json json_vec(const IVec& v);
Json json_qvec(const QVec& v);
// [{"exponents": [...], "coeff": "p/q"}, ...] sorted lexicographically by exponents.
Json json_poly(const IntPoly& p);
Json json_poly(const RatPoly& p);
Json json_poly(const SparsePoly& p);

// Integer arrays; throws ParseError.
Partition parse_partition(const std::string& text);

// Throws InvalidFile if the file cannot be read or is not JSON.
std::string read_text_file(const std::string& path);
Json parse_json(const std::string& text);

// {"rank": r, "entries": [[...], ...]}; the axioms are checked later by validate_cartan.
CartanMatrix cartan_from_json(const std::string& text);

} // namespace liekit
