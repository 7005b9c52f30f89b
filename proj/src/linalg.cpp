#include "linalg.hpp"

#include <utility>

namespace cremona::detail {

namespace {

// Reduces [a | b] to reduced row echelon form in place; returns the pivot
// column of each nonzero row.
std::vector<std::size_t> reduce(RatMatrix& a, std::vector<Rational>* b) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    if (b) std::swap((*b)[p], (*b)[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    if (b) (*b)[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      if (b) (*b)[i] -= f * (*b)[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

SolveResult solve_linear(RatMatrix a, std::vector<Rational> b) {
  SolveResult out;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  const auto pivots = reduce(a, &b);
  out.rank = pivots.size();
  for (std::size_t r = out.rank; r < a.size(); ++r) {
    if (b[r] != 0) {
      out.status = SolveStatus::kInconsistent;
      return out;
    }
  }
  if (out.rank < cols) {
    out.status = SolveStatus::kUnderdetermined;
    return out;
  }
  out.status = SolveStatus::kUnique;
  out.solution.assign(cols, Rational(0));
  for (std::size_t r = 0; r < out.rank; ++r) out.solution[pivots[r]] = b[r];
  return out;
}

std::size_t rank_of(RatMatrix a) { return reduce(a, nullptr).size(); }

std::optional<RatMatrix> inverse(RatMatrix a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) return std::nullopt;
    a[i].resize(2 * n, Rational(0));
    a[i][n + i] = 1;
  }
  const auto pivots = reduce(a, nullptr);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  for (auto& row : a) row.erase(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
  return a;
}

RatMatrix to_rational(const std::vector<IntVector>& rows) {
  RatMatrix out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    RatRow r;
    r.reserve(row.size());
    for (const auto& v : row) r.emplace_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

IntVector primitive_integer_multiple(const std::vector<Rational>& v) {
  Integer lcm = 1;
  for (const auto& x : v) {
    const Integer d = boost::multiprecision::denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v)
    out.push_back(boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x)));
  const Integer g = gcd_of(out);
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace cremona::detail
