#pragma once

// Scenario JSON:
//   {"items": [{"id": "a", "f": "3/2"}, ...],
//    "treatments": [{"potency": "-1", "quota": 2}, ...]}
// Allocation JSON:
//   {"assignment": {"a": 1, ...}, "class_sizes": [...],
//    "class_masses": ["..."], "score": "..."}
// Scalars are strings in the exact literal grammar; treatment indices are
// 1-based. JSON numbers are never accepted where a scalar is expected.

#include "sumsym/allocation.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace sumsym {

// Structural parse only; call validate() for the scenario invariants.
Scenario parse_scenario_json(std::string_view text, std::string_view source);

struct AllocationClaim {
  std::map<std::string, std::size_t> assignment;  // id -> 1-based treatment
  std::optional<std::string> score;               // as written, if present
};

// Accepts the allocation output format; only "assignment" is required.
AllocationClaim parse_allocation_json(std::string_view text, std::string_view source);

// Deterministic, 2-space indented, trailing newline. Items appear in scenario
// order. `approximate_score` adds a clearly labelled decimal field.
std::string format_allocation_json(const Scenario& sc, const Allocation& a, bool approximate_score = false);

// Decimal rendering rounded half away from zero to `digits` places.
std::string approximate_decimal(const Rational& v, unsigned digits);

}  // namespace sumsym
