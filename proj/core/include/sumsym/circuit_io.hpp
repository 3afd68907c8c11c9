#pragma once

// Line-oriented decomposition records, 1-based:
//
//   CIRCUIT 1>2>3 @ 5        cycle 1->2->3->1 with weight 5
//   PERM 2,3,1 @ 2           sigma in one-line image notation
//     CIRCUIT 1>2>3 @ 2      indented: a cycle of the PERM above it
//   SUMMARY key=value ...    informational, ignored when reading
//   # ...                    comment, ignored when reading

#include "sumsym/circuit.hpp"
#include "sumsym/errors.hpp"
#include "sumsym/ordered_group.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sumsym {

template <OrderedAbelianGroup G>
std::string format_circuit(const Circuit<G>& c) {
  std::string out = "CIRCUIT ";
  for (std::size_t a = 0; a < c.cycle().size(); ++a) {
    if (a > 0) out += '>';
    out += std::to_string(c.cycle()[a] + 1);
  }
  return out + " @ " + to_string(c.weight());
}

template <OrderedAbelianGroup G>
std::string format_permutation(const WeightedPermutation<G>& p) {
  std::string out = "PERM ";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p.sigma()[i] + 1);
  }
  return out + " @ " + to_string(p.weight());
}

template <OrderedAbelianGroup G>
struct DecompositionRecords {
  std::vector<Circuit<G>> circuits;                  // top-level CIRCUIT lines
  std::vector<WeightedPermutation<G>> permutations;  // PERM lines
  std::vector<std::vector<Circuit<G>>> refinements;  // indented lines, one list per PERM
};

namespace detail {

// Positive decimal without leading zeros, returned 0-based.
inline std::size_t parse_index(std::string_view t, const std::string& where) {
  if (t.empty() || t.size() > 9 || t[0] == '0') throw ParseError(where + "invalid index '" + std::string(t) + "'");
  std::size_t v = 0;
  for (char ch : t) {
    if (ch < '0' || ch > '9') throw ParseError(where + "invalid index '" + std::string(t) + "'");
    v = v * 10 + static_cast<std::size_t>(ch - '0');
  }
  return v - 1;
}

inline std::vector<std::size_t> parse_index_list(std::string_view t, char sep, const std::string& where) {
  std::vector<std::size_t> out;
  while (true) {
    const auto k = t.find(sep);
    out.push_back(parse_index(t.substr(0, k), where));
    if (k == std::string_view::npos) break;
    t.remove_prefix(k + 1);
  }
  return out;
}

}  // namespace detail

template <OrderedAbelianGroup G>
DecompositionRecords<G> parse_decomposition(std::string_view text, std::string_view source) {
  DecompositionRecords<G> records;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string where = std::string(source) + ":" + std::to_string(number) + ": ";

    const bool indented = line.starts_with("  ");
    std::string_view body = indented ? line.substr(2) : line;
    if (body.empty() || body.starts_with('#') || body.starts_with("SUMMARY")) continue;

    const auto at = body.find(" @ ");
    if (at == std::string_view::npos) throw ParseError(where + "expected '<record> @ <weight>'");
    G weight;
    try {
      weight = parse_scalar<G>(body.substr(at + 3));
    } catch (const ParseError& e) {
      throw ParseError(where + "weight: " + e.what());
    }
    const auto head = body.substr(0, at);
    try {
      if (head.starts_with("CIRCUIT ")) {
        Circuit<G> c(detail::parse_index_list(head.substr(8), '>', where), weight);
        if (indented) {
          if (records.permutations.empty()) throw ParseError(where + "indented CIRCUIT without a preceding PERM");
          records.refinements.back().push_back(std::move(c));
        } else {
          records.circuits.push_back(std::move(c));
        }
      } else if (head.starts_with("PERM ") && !indented) {
        records.permutations.emplace_back(detail::parse_index_list(head.substr(5), ',', where), weight);
        records.refinements.emplace_back();
      } else {
        throw ParseError(where + "unknown record '" + std::string(head) + "'");
      }
    } catch (const InvalidArgument& e) {
      throw ParseError(where + e.what());
    }
  }
  return records;
}

}  // namespace sumsym
