#include "sumsym/allocation.hpp"

#include "sumsym/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace sumsym {

void validate(const Scenario& sc) {
  using Kind = ValidationError::Kind;
  if (sc.treatments.empty()) throw ValidationError(Kind::kNoTreatments, "scenario has no treatments");

  std::set<std::string_view> seen;
  for (const auto& item : sc.items) {
    if (!seen.insert(item.id).second) {
      throw ValidationError(Kind::kDuplicateId, "duplicate item id '" + item.id + "'");
    }
    if (item.responsiveness.sign() < 0) {
      throw ValidationError(Kind::kNegativeResponsiveness, "item '" + item.id + "' has negative responsiveness " +
                                                               item.responsiveness.str());
    }
  }

  for (std::size_t i = 0; i + 1 < sc.treatments.size(); ++i) {
    if (sc.treatments[i].potency > sc.treatments[i + 1].potency) {
      throw ValidationError(Kind::kPotencyOrder,
                            "potencies must be nondecreasing: treatment " + std::to_string(i + 1) + " has potency " +
                                sc.treatments[i].potency.str() + " but treatment " + std::to_string(i + 2) +
                                " has potency " + sc.treatments[i + 1].potency.str());
    }
  }

  const std::size_t total = std::accumulate(sc.treatments.begin(), sc.treatments.end(), std::size_t{0},
                                            [](std::size_t acc, const Treatment& t) { return acc + t.quota; });
  if (total != sc.items.size()) {
    throw ValidationError(Kind::kQuotaSum, "quotas sum to " + std::to_string(total) + " but there are " +
                                               std::to_string(sc.items.size()) + " items");
  }
}

Allocation make_allocation(const Scenario& sc, std::vector<std::size_t> classes) {
  const std::size_t k = sc.treatments.size();
  if (classes.size() != sc.items.size()) {
    throw InfeasibleAllocation("allocation covers " + std::to_string(classes.size()) + " items but the scenario has " +
                               std::to_string(sc.items.size()));
  }
  Allocation a;
  a.class_sizes.assign(k, 0);
  a.class_masses.assign(k, Rational{});
  for (std::size_t x = 0; x < classes.size(); ++x) {
    if (classes[x] >= k) {
      throw InfeasibleAllocation("item '" + sc.items[x].id + "' assigned to treatment " +
                                 std::to_string(classes[x] + 1) + " but there are " + std::to_string(k));
    }
    ++a.class_sizes[classes[x]];
    a.class_masses[classes[x]] += sc.items[x].responsiveness;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (a.class_sizes[i] != sc.treatments[i].quota) {
      throw InfeasibleAllocation("treatment " + std::to_string(i + 1) + " receives " +
                                 std::to_string(a.class_sizes[i]) + " items but its quota is " +
                                 std::to_string(sc.treatments[i].quota));
    }
    a.score += sc.treatments[i].potency * a.class_masses[i];
  }
  a.classes = std::move(classes);
  return a;
}

Allocation make_allocation(const Scenario& sc, const std::map<std::string, std::size_t>& assignment) {
  std::map<std::string_view, std::size_t> index;
  for (std::size_t x = 0; x < sc.items.size(); ++x) index.emplace(sc.items[x].id, x);

  std::vector<std::optional<std::size_t>> slots(sc.items.size());
  for (const auto& [id, treatment] : assignment) {
    auto it = index.find(id);
    if (it == index.end()) throw InfeasibleAllocation("unknown item id '" + id + "'");
    if (treatment == 0) throw InfeasibleAllocation("item '" + id + "' assigned to treatment 0; indices are 1-based");
    slots[it->second] = treatment - 1;
  }
  std::vector<std::size_t> classes(sc.items.size());
  for (std::size_t x = 0; x < slots.size(); ++x) {
    if (!slots[x]) throw InfeasibleAllocation("item '" + sc.items[x].id + "' is not assigned");
    classes[x] = *slots[x];
  }
  return make_allocation(sc, std::move(classes));
}

Rational score(const Scenario& sc, const Allocation& a) { return make_allocation(sc, a.classes).score; }

Allocation optimal_partition(const Scenario& sc) {
  validate(sc);
  std::vector<std::size_t> order(sc.items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = sc.items[a];
    const auto& y = sc.items[b];
    if (x.responsiveness != y.responsiveness) return x.responsiveness < y.responsiveness;
    return x.id < y.id;
  });

  std::vector<std::size_t> classes(sc.items.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < sc.treatments.size(); ++i) {
    for (std::size_t q = 0; q < sc.treatments[i].quota; ++q) classes[order[next++]] = i;
  }
  return make_allocation(sc, std::move(classes));
}

bool is_sorted_partition(const Scenario& sc, const Allocation& a) {
  const std::size_t k = sc.treatments.size();
  std::vector<std::optional<Rational>> lo(k);
  std::vector<std::optional<Rational>> hi(k);
  for (std::size_t x = 0; x < a.classes.size(); ++x) {
    const auto c = a.classes[x];
    const auto& f = sc.items[x].responsiveness;
    if (!lo[c] || f < *lo[c]) lo[c] = f;
    if (!hi[c] || f > *hi[c]) hi[c] = f;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (hi[i] && lo[j] && *hi[i] > *lo[j]) return false;
    }
  }
  return true;
}

}  // namespace sumsym
