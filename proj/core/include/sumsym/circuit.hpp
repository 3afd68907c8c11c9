#pragma once

// Decomposition of nonnegative sum-symmetric matrices into weighted circuit
// matrices, and of doubly balanced matrices into weighted permutation
// matrices. Everything is generic over an exact ordered Abelian group, so the
// same code runs on integers, rationals and lexicographic pairs.
//
// Indices are 0-based here; the text formats in circuit_io.hpp are 1-based.

#include "sumsym/errors.hpp"
#include "sumsym/matrix.hpp"
#include "sumsym/ordered_group.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sumsym {

// A cycle i_1 -> i_2 -> ... -> i_m -> i_1 of distinct indices carrying a
// positive weight. Stored rotated so that the cycle begins at its smallest
// index; a single index is a self-loop.
template <OrderedAbelianGroup G>
class Circuit {
 public:
  Circuit(std::vector<std::size_t> cycle, G weight) : cycle_(std::move(cycle)), weight_(std::move(weight)) {
    if (cycle_.empty()) throw InvalidArgument("circuit must visit at least one index");
    if (!is_positive(weight_)) throw InvalidArgument("circuit weight must be positive, got " + to_string(weight_));
    auto sorted = cycle_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument("circuit indices must be pairwise distinct");
    }
    std::rotate(cycle_.begin(), std::min_element(cycle_.begin(), cycle_.end()), cycle_.end());
  }

  const std::vector<std::size_t>& cycle() const { return cycle_; }
  const G& weight() const { return weight_; }
  std::size_t length() const { return cycle_.size(); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::vector<std::size_t> cycle_;
  G weight_;
};

// weight times the permutation matrix of sigma, where sigma[i] is the image
// of i (entry (i, sigma[i]) carries the weight).
template <OrderedAbelianGroup G>
class WeightedPermutation {
 public:
  WeightedPermutation(std::vector<std::size_t> sigma, G weight) : sigma_(std::move(sigma)), weight_(std::move(weight)) {
    if (sigma_.empty()) throw InvalidArgument("permutation must act on at least one index");
    if (!is_positive(weight_)) throw InvalidArgument("permutation weight must be positive, got " + to_string(weight_));
    std::vector<bool> hit(sigma_.size(), false);
    for (std::size_t image : sigma_) {
      if (image >= sigma_.size() || hit[image]) throw InvalidArgument("sigma is not a bijection");
      hit[image] = true;
    }
  }

  const std::vector<std::size_t>& sigma() const { return sigma_; }
  const G& weight() const { return weight_; }
  std::size_t size() const { return sigma_.size(); }

  friend bool operator==(const WeightedPermutation&, const WeightedPermutation&) = default;

 private:
  std::vector<std::size_t> sigma_;
  G weight_;
};

template <OrderedAbelianGroup G>
SquareMatrix<G> circuit_to_matrix(const Circuit<G>& c, std::size_t n) {
  SquareMatrix<G> t(n);
  const auto& cyc = c.cycle();
  for (std::size_t a = 0; a < cyc.size(); ++a) {
    if (cyc[a] >= n) {
      throw InvalidArgument("circuit index " + std::to_string(cyc[a] + 1) + " out of range for n = " +
                            std::to_string(n));
    }
  }
  for (std::size_t a = 0; a < cyc.size(); ++a) {
    t(cyc[a], cyc[(a + 1) % cyc.size()]) = c.weight();
  }
  return t;
}

template <OrderedAbelianGroup G>
SquareMatrix<G> permutation_to_matrix(const WeightedPermutation<G>& p) {
  SquareMatrix<G> t(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) t(i, p.sigma()[i]) = p.weight();
  return t;
}

namespace detail {

// Walks from the smallest index with a positive row sum, always stepping to
// the smallest column with a positive entry, and returns the cycle closed by
// the first revisited node. Requires t nonnegative, sum-symmetric, nonzero:
// then every visited row has a positive entry, so the walk cannot stall.
template <OrderedAbelianGroup G>
std::vector<std::size_t> walk_to_cycle(const SquareMatrix<G>& t) {
  const std::size_t n = t.size();
  auto first_positive = [&](std::size_t i) -> std::optional<std::size_t> {
    for (std::size_t j = 0; j < n; ++j)
      if (is_positive(t(i, j))) return j;
    return std::nullopt;
  };

  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < n && !start; ++i)
    if (first_positive(i)) start = i;
  if (!start) throw NoCycle("matrix is zero; it contains no positive cycle");

  std::vector<std::optional<std::size_t>> position(n);
  std::vector<std::size_t> path;
  std::size_t node = *start;
  while (!position[node]) {
    position[node] = path.size();
    path.push_back(node);
    auto next = first_positive(node);
    if (!next) {
      throw TheoremViolated("walk stalled at index " + std::to_string(node + 1) +
                            " of a nonnegative sum-symmetric matrix");
    }
    node = *next;
  }
  return {path.begin() + static_cast<std::ptrdiff_t>(*position[node]), path.end()};
}

template <OrderedAbelianGroup G>
G cycle_minimum(const SquareMatrix<G>& t, const std::vector<std::size_t>& cycle) {
  G least = t(cycle[0], cycle[1 % cycle.size()]);
  for (std::size_t a = 1; a < cycle.size(); ++a) {
    least = std::min(least, t(cycle[a], cycle[(a + 1) % cycle.size()]));
  }
  return least;
}

// Augmenting-path search over positive entries. Each row first takes the
// smallest free positive column; only if none exists does it try to reroute
// the owners of its positive columns, again in ascending column order.
template <OrderedAbelianGroup G>
class PositiveSupportMatcher {
 public:
  explicit PositiveSupportMatcher(const SquareMatrix<G>& t) : t_(t), owner_(t.size()) {}

  std::optional<std::vector<std::size_t>> perfect_matching() {
    const std::size_t n = t_.size();
    std::fill(owner_.begin(), owner_.end(), std::nullopt);
    for (std::size_t r = 0; r < n; ++r) {
      seen_.assign(n, false);
      if (!augment(r)) return std::nullopt;
    }
    std::vector<std::size_t> sigma(n);
    for (std::size_t c = 0; c < n; ++c) sigma[*owner_[c]] = c;
    return sigma;
  }

 private:
  bool augment(std::size_t r) {
    const std::size_t n = t_.size();
    for (std::size_t c = 0; c < n; ++c) {
      if (!seen_[c] && !owner_[c] && is_positive(t_(r, c))) {
        seen_[c] = true;
        owner_[c] = r;
        return true;
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (seen_[c] || !is_positive(t_(r, c))) continue;
      seen_[c] = true;
      if (augment(*owner_[c])) {
        owner_[c] = r;
        return true;
      }
    }
    return false;
  }

  const SquareMatrix<G>& t_;
  std::vector<std::optional<std::size_t>> owner_;
  std::vector<bool> seen_;
};

}  // namespace detail

// The support of one positive cycle, found by the deterministic walk
// described in detail::walk_to_cycle and rotated to start at its smallest
// index. Throws NoCycle for the zero matrix and PreconditionError when t is
// not nonnegative and sum-symmetric.
template <OrderedAbelianGroup G>
std::vector<std::size_t> find_positive_cycle(const SquareMatrix<G>& t) {
  require_nonnegative(t);
  require_sum_symmetric(t);
  auto cycle = detail::walk_to_cycle(t);
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  return cycle;
}

// Writes t as a sum of positive circuit matrices. Each round finds a positive
// cycle, takes the least entry along it as the weight and subtracts that
// circuit; the remainder stays nonnegative and sum-symmetric and loses at
// least one nonzero entry, so there are at most nonzero_count(t) rounds.
template <OrderedAbelianGroup G>
std::vector<Circuit<G>> circuit_decompose(const SquareMatrix<G>& t) {
  require_nonnegative(t);
  require_sum_symmetric(t);

  const std::size_t budget = nonzero_count(t);
  SquareMatrix<G> rest = t;
  std::vector<Circuit<G>> out;
  while (!is_zero(rest)) {
    if (out.size() == budget) {
      throw TheoremViolated("circuit extraction did not terminate within nonzero_count rounds");
    }
    auto cycle = detail::walk_to_cycle(rest);
    G weight = detail::cycle_minimum(rest, cycle);
    for (std::size_t a = 0; a < cycle.size(); ++a) {
      rest(cycle[a], cycle[(a + 1) % cycle.size()]) -= weight;
    }
    out.emplace_back(std::move(cycle), std::move(weight));
  }
  return out;
}

// Throws NotDoublyBalanced naming the first row or column whose sum differs
// from the first row sum. Returns the common sum.
template <OrderedAbelianGroup G>
G require_doubly_balanced(const SquareMatrix<G>& t) {
  const auto p = sums(t);
  const G& common = p.row_sums[0];
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (p.row_sums[i] != common) {
      throw NotDoublyBalanced("matrix is not doubly balanced: row " + std::to_string(i + 1) + " sums to " +
                              to_string(p.row_sums[i]) + " but row 1 sums to " + to_string(common));
    }
  }
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (p.col_sums[j] != common) {
      throw NotDoublyBalanced("matrix is not doubly balanced: column " + std::to_string(j + 1) + " sums to " +
                              to_string(p.col_sums[j]) + " but row 1 sums to " + to_string(common));
    }
  }
  return common;
}

// Writes a doubly balanced t as a sum of weighted permutation matrices. Each
// round takes a perfect matching on the positive entries (one exists by
// Hall's theorem), weights it by its least matched entry and subtracts it.
template <OrderedAbelianGroup G>
std::vector<WeightedPermutation<G>> birkhoff_decompose(const SquareMatrix<G>& t) {
  require_nonnegative(t);
  require_doubly_balanced(t);

  const std::size_t budget = nonzero_count(t);
  SquareMatrix<G> rest = t;
  std::vector<WeightedPermutation<G>> out;
  while (!is_zero(rest)) {
    if (out.size() == budget) {
      throw TheoremViolated("permutation extraction did not terminate within nonzero_count rounds");
    }
    auto sigma = detail::PositiveSupportMatcher<G>(rest).perfect_matching();
    if (!sigma) {
      throw TheoremViolated("no perfect matching on the positive support of a doubly balanced matrix");
    }
    G weight = rest(0, (*sigma)[0]);
    for (std::size_t i = 1; i < rest.size(); ++i) weight = std::min(weight, rest(i, (*sigma)[i]));
    for (std::size_t i = 0; i < rest.size(); ++i) rest(i, (*sigma)[i]) -= weight;
    out.emplace_back(std::move(*sigma), std::move(weight));
  }
  return out;
}

// Splits a permutation into its disjoint cycles, each carrying p's weight,
// ordered by smallest element.
template <OrderedAbelianGroup G>
std::vector<Circuit<G>> permutation_to_circuits(const WeightedPermutation<G>& p) {
  std::vector<Circuit<G>> out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t j = i; !done[j]; j = p.sigma()[j]) {
      done[j] = true;
      cycle.push_back(j);
    }
    out.emplace_back(std::move(cycle), p.weight());
  }
  return out;
}

}  // namespace sumsym
