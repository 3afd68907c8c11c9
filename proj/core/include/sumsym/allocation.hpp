#pragma once

// Discrete optimal resource allocation: every item receives exactly one of k
// treatments, treatment i is given to exactly quota_i items, and an
// allocation scores sum_i potency_i * (sum of responsiveness over class i).

#include "sumsym/ordered_group.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace sumsym {

struct Item {
  std::string id;
  Rational responsiveness;
};

struct Treatment {
  Rational potency;
  std::size_t quota = 0;
};

// Valid scenarios (see validate) have unique ids, nonnegative responsiveness,
// nondecreasing potencies and quotas summing to the item count.
struct Scenario {
  std::vector<Item> items;
  std::vector<Treatment> treatments;

  std::size_t item_count() const { return items.size(); }
  std::size_t treatment_count() const { return treatments.size(); }
};

// Throws ValidationError describing the first violated invariant.
void validate(const Scenario& sc);

// A feasible partition. classes[x] is the 0-based treatment of item x, in the
// scenario's item order.
struct Allocation {
  std::vector<std::size_t> classes;
  std::vector<std::size_t> class_sizes;
  std::vector<Rational> class_masses;
  Rational score;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

// Builds the allocation for a class vector, computing sizes, masses and the
// score. Throws InfeasibleAllocation when a class index is out of range or a
// class size differs from its quota.
Allocation make_allocation(const Scenario& sc, std::vector<std::size_t> classes);

// Same, from an id -> 1-based treatment map. Unknown or missing ids are
// infeasible.
Allocation make_allocation(const Scenario& sc, const std::map<std::string, std::size_t>& assignment);

// Exact score of a; rechecks feasibility rather than trusting a.score.
Rational score(const Scenario& sc, const Allocation& a);

// Sort items by (responsiveness, id) ascending and deal them out to the
// treatments in order: the first quota_1 go to treatment 1, the next quota_2
// to treatment 2, and so on. Validates sc first.
Allocation optimal_partition(const Scenario& sc);

// max responsiveness over class i <= min over class j for every pair i < j
// of nonempty classes.
bool is_sorted_partition(const Scenario& sc, const Allocation& a);

}  // namespace sumsym
