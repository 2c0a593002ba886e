// Exact rational scalar used throughout the engine.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace semifree {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q) { return q.str(); }

/// True when q has denominator 1.
inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

/// Converts an integral rational to int64. Throws std::domain_error otherwise.
std::int64_t to_int64(const Rational& q);

}  // namespace semifree
