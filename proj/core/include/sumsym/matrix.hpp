#pragma once

#include "sumsym/errors.hpp"
#include "sumsym/ordered_group.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sumsym {

// Dense n x n matrix over an ordered group, row-major, 0-based internally.
template <OrderedAbelianGroup G>
class SquareMatrix {
 public:
  using value_type = G;

  explicit SquareMatrix(std::size_t n) : n_(n), entries_(n * n) {
    if (n == 0) throw InvalidArgument("matrix dimension must be positive");
  }

  SquareMatrix(std::initializer_list<std::initializer_list<G>> rows)
      : SquareMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw InvalidArgument("matrix rows must all have length n");
      std::size_t j = 0;
      for (const auto& v : row) (*this)(i, j++) = v;
      ++i;
    }
  }

  static SquareMatrix from_rows(const std::vector<std::vector<G>>& rows) {
    SquareMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw InvalidArgument("matrix rows must all have length n");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t size() const { return n_; }

  G& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const G& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  std::span<const G> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }
  std::span<const G> entries() const { return entries_; }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    if (o.n_ != n_) throw InvalidArgument("matrix dimensions differ");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }

  SquareMatrix transposed() const {
    SquareMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<G> entries_;
};

template <OrderedAbelianGroup G>
struct SumProfile {
  std::vector<G> row_sums;
  std::vector<G> col_sums;
};

template <OrderedAbelianGroup G>
SumProfile<G> sums(const SquareMatrix<G>& t) {
  const std::size_t n = t.size();
  SumProfile<G> p{std::vector<G>(n), std::vector<G>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      p.row_sums[i] += t(i, j);
      p.col_sums[j] += t(i, j);
    }
  }
  return p;
}

// First index i with row_sums[i] != col_sums[i], if any.
template <OrderedAbelianGroup G>
std::optional<std::size_t> first_unbalanced_index(const SumProfile<G>& p) {
  for (std::size_t i = 0; i < p.row_sums.size(); ++i) {
    if (p.row_sums[i] != p.col_sums[i]) return i;
  }
  return std::nullopt;
}

template <OrderedAbelianGroup G>
bool is_sum_symmetric(const SquareMatrix<G>& t) {
  return !first_unbalanced_index(sums(t)).has_value();
}

template <OrderedAbelianGroup G>
std::size_t nonzero_count(const SquareMatrix<G>& t) {
  std::size_t count = 0;
  for (const auto& v : t.entries()) count += (v != G{}) ? 1 : 0;
  return count;
}

template <OrderedAbelianGroup G>
bool is_zero(const SquareMatrix<G>& t) {
  return nonzero_count(t) == 0;
}

template <OrderedAbelianGroup G>
std::optional<std::pair<std::size_t, std::size_t>> first_negative_entry(const SquareMatrix<G>& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      if (t(i, j) < G{}) return std::pair{i, j};
  return std::nullopt;
}

template <OrderedAbelianGroup G>
bool is_nonnegative(const SquareMatrix<G>& t) {
  return !first_negative_entry(t).has_value();
}

// Throws NotNonnegative naming the first negative entry.
template <OrderedAbelianGroup G>
void require_nonnegative(const SquareMatrix<G>& t) {
  if (auto at = first_negative_entry(t)) {
    throw NotNonnegative(at->first, at->second, to_string(t(at->first, at->second)));
  }
}

// Throws NotSumSymmetric naming the first offending index and its two sums.
template <OrderedAbelianGroup G>
void require_sum_symmetric(const SquareMatrix<G>& t) {
  const auto p = sums(t);
  if (auto i = first_unbalanced_index(p)) {
    throw NotSumSymmetric(*i, to_string(p.row_sums[*i]), to_string(p.col_sums[*i]));
  }
}

}  // namespace sumsym
