#include <algorithm>
#include <map>

#include "cremona/error.hpp"
#include "cremona/obstruction.hpp"
#include "linalg.hpp"

namespace cremona {

namespace {

using Terms = std::vector<std::pair<std::size_t, Integer>>;

// Current form of an equation together with how to obtain it from lines
// already present in the derivation.
struct Derived {
  LinearEquation eq;
  Terms terms;
};

bool all_nonneg(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; });
}

bool all_nonpos(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x <= 0; });
}

bool all_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Terms merge_terms(const Terms& terms) {
  std::map<std::size_t, Integer> acc;
  for (const auto& [idx, mult] : terms) acc[idx] += mult;
  Terms out;
  for (auto& [idx, mult] : acc)
    if (mult != 0) out.emplace_back(idx, mult);
  return out;
}

void negate(Derived& d) {
  for (auto& c : d.eq.coeffs) c = -c;
  d.eq.constant = -d.eq.constant;
  for (auto& t : d.terms) t.second = -t.second;
}

// Flip so that a sign-uniform line has nonnegative coefficients and a
// contradictory constant becomes negative.
void normalize(Derived& d) {
  const bool zero = all_zero(d.eq.coeffs);
  if ((zero && d.eq.constant > 0) || (!zero && all_nonpos(d.eq.coeffs))) negate(d);
}

bool forces_zero(const Derived& d) {
  return d.eq.constant == 0 && !all_zero(d.eq.coeffs) && all_nonneg(d.eq.coeffs);
}

bool negative_contradiction(const Derived& d) { return d.eq.constant < 0 && all_nonneg(d.eq.coeffs); }

bool divisibility_contradiction(const Derived& d) {
  const Integer g = gcd_of(d.eq.coeffs);
  return g != 0 && d.eq.constant % g != 0;
}

class Solver {
 public:
  Solver(const FeasibilitySystem& system, Integer bound)
      : system_(system), bound_(std::move(bound)), n_(system.unknown_count()), forced_(n_, false),
        unit_line_(n_, 0) {
    for (std::size_t i = 0; i < system.equations().size(); ++i)
      current_.push_back(Derived{system.equations()[i], {{i, Integer(1)}}});
  }

  FeasibilityCertificate run() {
    while (true) {
      substitute_forced();
      for (auto& d : current_) normalize(d);

      if (auto src = find(current_, forces_zero)) {
        apply_force_zero(*src);
        continue;
      }
      if (auto c = find(current_, negative_contradiction)) return conclude(*c, ContradictionKind::kNegativeNonnegCombination);
      if (auto c = find(current_, divisibility_contradiction)) return conclude(*c, ContradictionKind::kDivisibility);

      const auto elementary = elementary_lines();
      if (auto src = find(elementary, forces_zero)) {
        apply_force_zero(*src);
        continue;
      }
      if (auto c = find(elementary, negative_contradiction)) return conclude(*c, ContradictionKind::kNegativeNonnegCombination);
      if (auto c = find(elementary, divisibility_contradiction)) return conclude(*c, ContradictionKind::kDivisibility);
      break;
    }
    return enumerate();
  }

 private:
  template <typename Pred>
  static std::optional<Derived> find(const std::vector<Derived>& lines, Pred pred) {
    for (const auto& d : lines)
      if (pred(d)) return d;
    return std::nullopt;
  }

  std::size_t line_count() const { return system_.equations().size() + chain_.size(); }

  std::size_t materialize(const Derived& d) {
    Terms terms = merge_terms(d.terms);
    if (terms.size() == 1 && terms.front().second == 1) return terms.front().first;
    chain_.push_back(DerivationStep{DerivationStep::Kind::kCombination, std::move(terms), d.eq});
    return line_count() - 1;
  }

  void substitute_forced() {
    for (auto& d : current_) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (!forced_[j] || d.eq.coeffs[j] == 0) continue;
        d.terms.emplace_back(unit_line_[j], -d.eq.coeffs[j]);
        d.eq.coeffs[j] = 0;
      }
    }
  }

  void apply_force_zero(const Derived& source) {
    const std::size_t src = materialize(source);
    for (std::size_t j = 0; j < n_; ++j) {
      if (source.eq.coeffs[j] == 0 || forced_[j]) continue;
      IntVector unit(n_, Integer(0));
      unit[j] = 1;
      chain_.push_back(DerivationStep{DerivationStep::Kind::kForceZero, {{src, Integer(1)}}, {std::move(unit), 0}});
      forced_[j] = true;
      unit_line_[j] = line_count() - 1;
    }
  }

  FeasibilityCertificate conclude(const Derived& d, ContradictionKind kind) {
    Terms terms = merge_terms(d.terms);
    const bool reuse = terms.size() == 1 && terms.front().second == 1 &&
                       terms.front().first + 1 == line_count() && !chain_.empty();
    if (!reuse) chain_.push_back(DerivationStep{DerivationStep::Kind::kCombination, std::move(terms), d.eq});
    return FeasibilityCertificate::infeasible(system_, std::move(chain_), kind);
  }

  std::vector<std::size_t> active_columns() const {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n_; ++j)
      if (!forced_[j]) cols.push_back(j);
    return cols;
  }

  // Combinations of the current lines vanishing on every active column,
  // then the minimal-support ones: for each choice of r active columns with
  // invertible minor, the combinations vanishing on all but one of them. Every sign-uniform combination is a conformal sum
  // of these, so checking them finds a Farkas-type certificate whenever
  // one exists over the reals.
  std::vector<Derived> elementary_lines() const {
    const auto cols = active_columns();
    std::vector<std::size_t> rows;
    detail::RatMatrix basis;
    for (std::size_t i = 0; i < current_.size(); ++i) {
      detail::RatRow row;
      for (auto c : cols) row.emplace_back(current_[i].eq.coeffs[c]);
      auto trial = basis;
      trial.push_back(row);
      if (detail::rank_of(trial) > basis.size()) {
        basis = std::move(trial);
        rows.push_back(i);
      }
    }
    const std::size_t r = rows.size();
    std::vector<Derived> out;
    if (r == 0 || r > cols.size()) return out;

    auto combine = [&](const std::vector<std::pair<std::size_t, Integer>>& mults) {
      Derived d{{IntVector(n_, Integer(0)), 0}, {}};
      for (const auto& [row, y] : mults) {
        if (y == 0) continue;
        const Derived& src = current_[row];
        for (std::size_t j = 0; j < n_; ++j) d.eq.coeffs[j] += y * src.eq.coeffs[j];
        d.eq.constant += y * src.eq.constant;
        for (const auto& [idx, mult] : src.terms) d.terms.emplace_back(idx, y * mult);
      }
      normalize(d);
      return d;
    };

    // Rows outside the basis minus their expansion in it: zero on every
    // column, so a nonzero constant means the system is inconsistent.
    for (std::size_t i = 0; i < current_.size(); ++i) {
      if (std::find(rows.begin(), rows.end(), i) != rows.end()) continue;
      detail::RatMatrix bt(cols.size(), detail::RatRow(r));
      std::vector<Rational> target;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t k = 0; k < r; ++k) bt[c][k] = basis[k][c];
        target.emplace_back(current_[i].eq.coeffs[cols[c]]);
      }
      const auto res = detail::solve_linear(bt, target);
      if (res.status != detail::SolveStatus::kUnique) continue;
      std::vector<Rational> y{Rational(1)};
      for (const auto& l : res.solution) y.push_back(-l);
      const IntVector m = detail::primitive_integer_multiple(y);
      std::vector<std::pair<std::size_t, Integer>> mults{{i, m[0]}};
      for (std::size_t k = 0; k < r; ++k) mults.emplace_back(rows[k], m[k + 1]);
      out.push_back(combine(mults));
    }

    constexpr std::size_t kMaxMinors = 200000;
    std::vector<bool> pick(cols.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
    std::size_t minors = 0;
    do {
      if (++minors > kMaxMinors) break;
      std::vector<std::size_t> chosen;
      for (std::size_t k = 0; k < cols.size(); ++k)
        if (pick[k]) chosen.push_back(k);
      // Transposed minor: y^T M = e_i  <=>  M^T y = e_i.
      detail::RatMatrix mt(r, detail::RatRow(r));
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) mt[b][a] = basis[a][chosen[b]];
      const auto inv = detail::inverse(std::move(mt));
      if (!inv) continue;
      for (std::size_t i = 0; i < r; ++i) {
        std::vector<Rational> column;
        for (std::size_t k = 0; k < r; ++k) column.push_back((*inv)[k][i]);
        const IntVector y = detail::primitive_integer_multiple(column);
        std::vector<std::pair<std::size_t, Integer>> mults;
        for (std::size_t k = 0; k < r; ++k) mults.emplace_back(rows[k], y[k]);
        out.push_back(combine(mults));
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
  }

  FeasibilityCertificate enumerate() {
    const auto cols = active_columns();
    // Reduced row echelon form of the current lines over the active columns.
    detail::RatMatrix a;
    std::vector<Rational> b;
    for (const auto& d : current_) {
      detail::RatRow row;
      for (auto c : cols) row.emplace_back(d.eq.coeffs[c]);
      a.push_back(std::move(row));
      b.emplace_back(d.eq.constant);
    }
    std::vector<std::size_t> pivot_of_row;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols.size() && r < a.size(); ++c) {
      std::size_t p = r;
      while (p < a.size() && a[p][c] == 0) ++p;
      if (p == a.size()) continue;
      std::swap(a[p], a[r]);
      std::swap(b[p], b[r]);
      const Rational inv = 1 / a[r][c];
      for (auto& x : a[r]) x *= inv;
      b[r] *= inv;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == r || a[i][c] == 0) continue;
        const Rational f = a[i][c];
        for (std::size_t j = 0; j < cols.size(); ++j) a[i][j] -= f * a[r][j];
        b[i] -= f * b[r];
      }
      pivot_of_row.push_back(c);
      ++r;
    }
    for (std::size_t i = r; i < a.size(); ++i)
      if (b[i] != 0) return FeasibilityCertificate::unknown(bound_);  // caught earlier as 0 = c

    std::vector<bool> is_pivot(cols.size(), false);
    for (auto c : pivot_of_row) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (!is_pivot[c]) free_cols.push_back(c);

    // Integer form: den_i x_{p_i} + sum_f coef_if x_f = rhs_i.
    struct PivotRow {
      std::size_t col;
      Integer den;
      IntVector free_coef;
      Integer rhs;
    };
    std::vector<PivotRow> pivots;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Rational> v{a[i][pivot_of_row[i]]};
      for (auto f : free_cols) v.push_back(a[i][f]);
      v.push_back(b[i]);
      Integer lcm = 1;
      for (const auto& x : v) {
        const Integer d = boost::multiprecision::denominator(x);
        lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
      }
      auto scaled = [&](const Rational& x) {
        return Integer(boost::multiprecision::numerator(x) * (lcm / boost::multiprecision::denominator(x)));
      };
      PivotRow row{pivot_of_row[i], scaled(v.front()), {}, scaled(v.back())};
      for (std::size_t k = 0; k < free_cols.size(); ++k) row.free_coef.push_back(scaled(v[k + 1]));
      pivots.push_back(std::move(row));
    }

    // Per-unknown caps: the search bound, tightened by any line with
    // nonnegative coefficients.
    IntVector cap(cols.size(), bound_);
    for (const auto& d : current_) {
      if (!all_nonneg(d.eq.coeffs) || d.eq.constant < 0) continue;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        const Integer& c = d.eq.coeffs[cols[k]];
        if (c > 0) cap[k] = std::min(cap[k], Integer(d.eq.constant / c));
      }
    }

    IntVector free_values(free_cols.size(), Integer(0));
    IntVector assignment(n_, Integer(0));
    if (search(0, free_cols, pivots, cap, cols, free_values, assignment)) {
      return FeasibilityCertificate::feasible(system_, assignment);
    }
    return FeasibilityCertificate::unknown(bound_);
  }

  template <typename PivotRows>
  bool search(std::size_t depth, const std::vector<std::size_t>& free_cols, const PivotRows& pivots,
              const IntVector& cap, const std::vector<std::size_t>& cols, IntVector& free_values,
              IntVector& assignment) const {
    if (depth == free_cols.size()) {
      for (const auto& p : pivots) {
        Integer num = p.rhs;
        for (std::size_t k = 0; k < free_values.size(); ++k) num -= p.free_coef[k] * free_values[k];
        if (num % p.den != 0) return false;
        const Integer value = num / p.den;
        if (value < 0 || value > cap[p.col]) return false;
        assignment[cols[p.col]] = value;
      }
      for (std::size_t k = 0; k < free_cols.size(); ++k) assignment[cols[free_cols[k]]] = free_values[k];
      return true;
    }
    for (Integer v = 0; v <= cap[free_cols[depth]]; ++v) {
      free_values[depth] = v;
      if (search(depth + 1, free_cols, pivots, cap, cols, free_values, assignment)) return true;
    }
    return false;
  }

  const FeasibilitySystem& system_;
  Integer bound_;
  std::size_t n_;
  std::vector<bool> forced_;
  std::vector<std::size_t> unit_line_;
  std::vector<Derived> current_;
  std::vector<DerivationStep> chain_;
};

}  // namespace

FeasibilityCertificate solve_nonneg(const FeasibilitySystem& system, const Integer& bound) {
  if (bound < 0) throw Error(ErrorCode::kOutOfRange, "search bound must be nonnegative");
  return Solver(system, bound).run();
}

}  // namespace cremona
