#pragma once

// CSV matrix format: n lines of n comma-separated scalar literals, optionally
// preceded by a header line "# domain: int|rational|lexpair".

#include "sumsym/matrix.hpp"
#include "sumsym/ordered_group.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace sumsym {

using AnyMatrix = std::variant<SquareMatrix<Integer>, SquareMatrix<Rational>, SquareMatrix<LexPair>>;

// `source` names the input in error messages. When both the header and
// `requested` name a domain they must agree; with neither, the domain is int.
AnyMatrix parse_matrix_csv(std::string_view text, std::string_view source,
                           std::optional<Domain> requested = std::nullopt);

template <OrderedAbelianGroup G>
std::string format_matrix_csv(const SquareMatrix<G>& t) {
  std::string out = "# domain: " + std::string(domain_name(DomainOf<G>::value)) + "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (j > 0) out += ',';
      out += to_string(t(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace sumsym
