#include "cremona/integer.hpp"

#include <limits>

#include "cremona/error.hpp"

namespace cremona {

std::optional<std::int64_t> to_int64(const Integer& value) {
  static const Integer kMin = std::numeric_limits<std::int64_t>::min();
  static const Integer kMax = std::numeric_limits<std::int64_t>::max();
  if (value < kMin || value > kMax) return std::nullopt;
  return value.convert_to<std::int64_t>();
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer gcd_of(const IntVector& values) {
  Integer g = 0;
  for (const auto& v : values) g = boost::multiprecision::gcd(g, v);
  return abs(g);
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimension, "dot product of vectors with lengths " +
                                           std::to_string(a.size()) + " and " +
                                           std::to_string(b.size()));
  }
  Integer sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

IntVector make_ints(std::initializer_list<long long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long long v : values) out.emplace_back(v);
  return out;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLatticeMismatch: return "LATTICE_MISMATCH";
    case ErrorCode::kDimension: return "DIMENSION";
    case ErrorCode::kAdjunctionParity: return "ADJUNCTION_PARITY";
    case ErrorCode::kConfiguration: return "CONFIGURATION";
    case ErrorCode::kModel: return "MODEL";
    case ErrorCode::kNotPlanar: return "NOT_PLANAR";
    case ErrorCode::kContradiction: return "CONTRADICTION";
    case ErrorCode::kRank: return "RANK";
    case ErrorCode::kPredicate: return "PREDICATE";
    case ErrorCode::kOutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::kParse: return "PARSE";
    case ErrorCode::kOverflow: return "OVERFLOW";
    case ErrorCode::kIo: return "IO";
  }
  return "UNKNOWN";
}

}  // namespace cremona
