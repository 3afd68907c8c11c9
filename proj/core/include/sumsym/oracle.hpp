#pragma once

// Brute-force verifiers. None of these reuse the construction paths they
// check: feasible partitions are enumerated directly, reconstruction sums
// cycle edges without going through circuit_to_matrix.

#include "sumsym/allocation.hpp"
#include "sumsym/circuit.hpp"
#include "sumsym/matrix.hpp"
#include "sumsym/ordered_group.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace sumsym {

// Enumeration refuses (CapExceeded) rather than truncating.
struct OracleCaps {
  std::size_t max_items = 10;
  std::uint64_t max_allocations = 1'000'000;
};

// |X|! / (q_1! ... q_k!).
Integer feasible_count(const Scenario& sc);

// Calls visit once per feasible allocation, in lexicographic order of the
// class vector. Validates sc and checks caps before visiting anything.
void enumerate_feasible(const Scenario& sc, const OracleCaps& caps,
                        const std::function<void(const Allocation&)>& visit);

std::vector<Allocation> feasible_allocations(const Scenario& sc, const OracleCaps& caps = {});

struct BestScore {
  Rational max_score;
  Allocation witness;  // lexicographically first maximizer
};

BestScore brute_force_best(const Scenario& sc, const OracleCaps& caps = {});

// k x k matrix whose (i, j) entry counts items in class i of p and class j
// of q. Both must be feasible for sc.
SquareMatrix<Integer> overlap_matrix(const Allocation& p, const Allocation& q, const Scenario& sc);

// sum_j s_j u_j >= sum_j s_{sigma(j)} u_j. sigma is 0-based.
bool check_rearrangement(std::span<const Rational> s, std::span<const Rational> u,
                         std::span<const std::size_t> sigma);

struct CheckResult {
  bool passed = true;
  std::string diagnostic;  // first problem found, empty on success

  explicit operator bool() const { return passed; }
};

template <OrderedAbelianGroup G>
CheckResult verify_decomposition(const SquareMatrix<G>& t, std::span<const Circuit<G>> circuits) {
  const std::size_t n = t.size();
  std::vector<G> rebuilt(n * n);
  for (std::size_t k = 0; k < circuits.size(); ++k) {
    const auto& cyc = circuits[k].cycle();
    if (!(circuits[k].weight() > G{})) {
      return {false, "circuit " + std::to_string(k + 1) + " has nonpositive weight " + to_string(circuits[k].weight())};
    }
    for (std::size_t a = 0; a < cyc.size(); ++a) {
      const std::size_t from = cyc[a];
      const std::size_t to = cyc[a + 1 == cyc.size() ? 0 : a + 1];
      if (from >= n) {
        return {false, "circuit " + std::to_string(k + 1) + " uses index " + std::to_string(from + 1) +
                           " but the matrix has n = " + std::to_string(n)};
      }
      rebuilt[from * n + to] += circuits[k].weight();
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rebuilt[i * n + j] != t(i, j)) {
        return {false, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): matrix has " +
                           to_string(t(i, j)) + " but the circuits sum to " + to_string(rebuilt[i * n + j])};
      }
    }
  }
  return {};
}

template <OrderedAbelianGroup G>
CheckResult verify_decomposition(const SquareMatrix<G>& t, const std::vector<Circuit<G>>& circuits) {
  return verify_decomposition(t, std::span<const Circuit<G>>(circuits));
}

template <OrderedAbelianGroup G>
CheckResult verify_permutations(const SquareMatrix<G>& t, std::span<const WeightedPermutation<G>> perms) {
  const std::size_t n = t.size();
  std::vector<G> rebuilt(n * n);
  for (std::size_t k = 0; k < perms.size(); ++k) {
    if (perms[k].size() != n) {
      return {false, "permutation " + std::to_string(k + 1) + " acts on " + std::to_string(perms[k].size()) +
                         " indices but the matrix has n = " + std::to_string(n)};
    }
    for (std::size_t i = 0; i < n; ++i) rebuilt[i * n + perms[k].sigma()[i]] += perms[k].weight();
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rebuilt[i * n + j] != t(i, j)) {
        return {false, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): matrix has " +
                           to_string(t(i, j)) + " but the permutations sum to " + to_string(rebuilt[i * n + j])};
      }
    }
  }
  return {};
}

}  // namespace sumsym
