#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cremona {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;

/// Narrowing conversion; std::nullopt when the value does not fit.
std::optional<std::int64_t> to_int64(const Integer& value);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

Integer gcd_of(const IntVector& values);

/// Exact integer dot product.
Integer dot(const IntVector& a, const IntVector& b);

IntVector make_ints(std::initializer_list<long long> values);

}  // namespace cremona
