#include "sumsym/matrix_io.hpp"

#include "sumsym/errors.hpp"

#include <string>
#include <vector>

namespace sumsym {

namespace {

constexpr std::string_view kHeaderPrefix = "# domain: ";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

struct Line {
  std::size_t number;  // 1-based
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    lines.push_back({number++, line});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  while (!lines.empty() && trim(lines.back().text).empty()) lines.pop_back();
  return lines;
}

// Splits on commas outside parentheses so "(1,2),(3,4)" yields two cells.
std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < line.size(); ++k) {
    if (line[k] == '(') ++depth;
    if (line[k] == ')') --depth;
    if (line[k] == ',' && depth == 0) {
      cells.push_back(trim(line.substr(start, k - start)));
      start = k + 1;
    }
  }
  cells.push_back(trim(line.substr(start)));
  return cells;
}

std::string where(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line) + ": ";
}

template <OrderedAbelianGroup G>
SquareMatrix<G> parse_rows(const std::vector<Line>& rows, std::string_view source) {
  const std::size_t n = rows.size();
  SquareMatrix<G> t(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto cells = split_cells(rows[i].text);
    if (cells.size() != n) {
      throw ParseError(where(source, rows[i].number) + "expected " + std::to_string(n) +
                       " cells in a " + std::to_string(n) + "x" + std::to_string(n) +
                       " matrix, found " + std::to_string(cells.size()));
    }
    for (std::size_t j = 0; j < n; ++j) {
      try {
        t(i, j) = parse_scalar<G>(cells[j]);
      } catch (const ParseError& e) {
        throw ParseError(where(source, rows[i].number) + "cell " + std::to_string(j + 1) + ": " +
                         e.what() + " for domain " + std::string(domain_name(DomainOf<G>::value)));
      }
    }
  }
  return t;
}

}  // namespace

AnyMatrix parse_matrix_csv(std::string_view text, std::string_view source,
                           std::optional<Domain> requested) {
  auto lines = split_lines(text);
  std::optional<Domain> header;
  std::size_t first_row = 0;
  if (!lines.empty() && trim(lines[0].text).starts_with('#')) {
    const auto head = trim(lines[0].text);
    if (!head.starts_with(kHeaderPrefix)) {
      throw ParseError(where(source, 1) + "header must read '# domain: int|rational|lexpair'");
    }
    try {
      header = parse_domain(head.substr(kHeaderPrefix.size()));
    } catch (const ParseError& e) {
      throw ParseError(where(source, 1) + e.what());
    }
    first_row = 1;
  }
  if (header && requested && *header != *requested) {
    throw ParseError(where(source, 1) + "header declares domain " +
                     std::string(domain_name(*header)) + " but domain " +
                     std::string(domain_name(*requested)) + " was requested");
  }
  const Domain domain = header ? *header : requested.value_or(Domain::kInteger);

  std::vector<Line> rows(lines.begin() + static_cast<std::ptrdiff_t>(first_row), lines.end());
  if (rows.empty()) throw ParseError(std::string(source) + ": matrix has no rows");
  for (const auto& row : rows) {
    if (trim(row.text).empty()) throw ParseError(where(source, row.number) + "blank line inside matrix");
    if (trim(row.text).starts_with('#')) {
      throw ParseError(where(source, row.number) + "comment lines are only allowed as the header");
    }
  }

  switch (domain) {
    case Domain::kInteger: return parse_rows<Integer>(rows, source);
    case Domain::kRational: return parse_rows<Rational>(rows, source);
    case Domain::kLexPair: return parse_rows<LexPair>(rows, source);
  }
  throw InvalidArgument("unknown domain");
}

}  // namespace sumsym
