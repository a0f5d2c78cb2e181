// Exact linear algebra over arbitrary-precision integers: incremental
// fraction-free row reduction for rank queries, plus a coefficient-tracking
// span for expressing vectors over a generating set with rational weights.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace bpk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

// Pivot column search direction. Running the same input under both scans
// gives two genuinely different elimination orders with one rank.
enum class PivotScan { LeftToRight, RightToLeft };

namespace detail {

inline BigInt abs_of(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Divides every entry of the given rows by their joint content (gcd).
inline void strip_content(std::vector<std::vector<BigInt>*> rows) {
  BigInt g = 0;
  for (auto* row : rows)
    for (const BigInt& x : *row) {
      if (x != 0) g = boost::multiprecision::gcd(g, abs_of(x));
      if (g == 1) return;
    }
  if (g <= 1) return;
  for (auto* row : rows)
    for (BigInt& x : *row) x /= g;
}

inline bool all_zero(const std::vector<BigInt>& v) {
  for (const BigInt& x : v)
    if (x != 0) return false;
  return true;
}

// boost::rational rejects negative denominators for unbounded integers, so
// normalize the sign up front.
inline Rational make_rational(BigInt num, BigInt den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

}  // namespace detail

// Maintains an integer row-echelon basis of the span of absorbed rows.
// Reduction uses cross-multiplication only (no rational arithmetic); rows are
// kept primitive by dividing out their content after every elimination step.
class ExactEliminator {
 public:
  explicit ExactEliminator(std::size_t cols, PivotScan scan = PivotScan::LeftToRight)
      : cols_(cols), scan_(scan) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  // Residual of `row` after elimination against the stored rows.
  std::vector<BigInt> reduce(std::vector<BigInt> row) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const BigInt lead = row[pivots_[i]];
      if (lead == 0) continue;
      const BigInt& piv = rows_[i][pivots_[i]];
      for (std::size_t c = 0; c < cols_; ++c)
        row[c] = row[c] * piv - lead * rows_[i][c];
      detail::strip_content({&row});
    }
    return row;
  }

  bool in_span(const std::vector<BigInt>& row) const { return detail::all_zero(reduce(row)); }

  // Absorbs a row; returns true when it enlarged the span.
  bool absorb(std::vector<BigInt> row) { return absorb_residual(reduce(std::move(row))); }

  // Same as absorb() for a row already reduced by reduce().
  bool absorb_residual(std::vector<BigInt> residual) {
    const std::size_t p = find_pivot(residual);
    if (p == cols_) return false;
    if (residual[p] < 0)
      for (BigInt& x : residual) x = -x;
    rows_.push_back(std::move(residual));
    pivots_.push_back(p);
    return true;
  }

 private:
  std::size_t find_pivot(const std::vector<BigInt>& row) const {
    if (scan_ == PivotScan::LeftToRight) {
      for (std::size_t c = 0; c < cols_; ++c)
        if (row[c] != 0) return c;
    } else {
      for (std::size_t c = cols_; c-- > 0;)
        if (row[c] != 0) return c;
    }
    return cols_;
  }

  std::size_t cols_;
  PivotScan scan_;
  std::vector<std::vector<BigInt>> rows_;
  std::vector<std::size_t> pivots_;
};

// Rank over the rationals of a list of equal-length integer vectors.
template <typename Row>
std::size_t exact_rank(const std::vector<Row>& vectors, PivotScan scan = PivotScan::LeftToRight) {
  if (vectors.empty()) return 0;
  ExactEliminator elim(vectors.front().size(), scan);
  for (const Row& v : vectors) elim.absorb(std::vector<BigInt>(v.begin(), v.end()));
  return elim.rank();
}

// Echelon span that remembers how each stored row combines the generators,
// so dependent generators and arbitrary in-span vectors can be expressed
// with exact rational coefficients.
class TrackedSpan {
 public:
  explicit TrackedSpan(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t generators() const { return gens_; }

  // Adds a generator. Independent generators are stored and get the next
  // index; for a dependent one, returns its coefficients over the generators
  // added before it and stores nothing.
  std::optional<std::vector<Rational>> add(const std::vector<BigInt>& gen) {
    Work w = reduce_tracked(gen, /*own_index=*/true);
    if (!detail::all_zero(w.vec)) {
      // w.coef.back() is the (nonzero) weight of the generator itself.
      rows_.push_back(Row{std::move(w.vec), std::move(w.coef), 0});
      rows_.back().pivot = pivot_of(rows_.back().vec);
      ++gens_;
      return std::nullopt;
    }
    std::vector<Rational> out(gens_);
    const BigInt& own = w.coef.back();
    for (std::size_t j = 0; j < gens_; ++j) out[j] = detail::make_rational(-w.coef[j], own);
    return out;
  }

  // Coefficients expressing `target` over the generators, or nullopt when the
  // target lies outside the span.
  std::optional<std::vector<Rational>> represent(const std::vector<BigInt>& target) const {
    std::vector<BigInt> v = target;
    BigInt scale = 1;
    std::vector<BigInt> weight(gens_, BigInt(0));
    for (const Row& r : rows_) {
      const BigInt lead = v[r.pivot];
      if (lead == 0) continue;
      const BigInt& piv = r.vec[r.pivot];
      for (std::size_t c = 0; c < cols_; ++c) v[c] = v[c] * piv - lead * r.vec[c];
      scale *= piv;
      for (std::size_t j = 0; j < weight.size(); ++j) {
        weight[j] *= piv;
        if (j < r.coef.size()) weight[j] += lead * r.coef[j];
      }
      std::vector<BigInt> s{scale};
      detail::strip_content({&v, &weight, &s});
      scale = s[0];
    }
    if (!detail::all_zero(v)) return std::nullopt;
    std::vector<Rational> out(gens_);
    for (std::size_t j = 0; j < gens_; ++j) out[j] = detail::make_rational(weight[j], scale);
    return out;
  }

 private:
  struct Row {
    std::vector<BigInt> vec;   // reduced generator combination
    std::vector<BigInt> coef;  // vec == sum coef[j] * generator[j]
    std::size_t pivot;
  };

  struct Work {
    std::vector<BigInt> vec;
    std::vector<BigInt> coef;
  };

  std::size_t pivot_of(const std::vector<BigInt>& v) const {
    for (std::size_t c = 0; c < cols_; ++c)
      if (v[c] != 0) return c;
    return cols_;
  }

  Work reduce_tracked(const std::vector<BigInt>& gen, bool own_index) const {
    Work w;
    w.vec = gen;
    w.coef.assign(gens_ + (own_index ? 1 : 0), BigInt(0));
    if (own_index) w.coef.back() = 1;
    for (const Row& r : rows_) {
      const BigInt lead = w.vec[r.pivot];
      if (lead == 0) continue;
      const BigInt& piv = r.vec[r.pivot];
      for (std::size_t c = 0; c < cols_; ++c) w.vec[c] = w.vec[c] * piv - lead * r.vec[c];
      for (std::size_t j = 0; j < w.coef.size(); ++j) {
        w.coef[j] *= piv;
        if (j < r.coef.size()) w.coef[j] -= lead * r.coef[j];
      }
      detail::strip_content({&w.vec, &w.coef});
    }
    return w;
  }

  std::size_t cols_;
  std::size_t gens_ = 0;
  std::vector<Row> rows_;
};

}  // namespace bpk
