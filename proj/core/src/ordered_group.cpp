#include "sumsym/ordered_group.hpp"

#include "sumsym/errors.hpp"

#include <string>

namespace sumsym {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// -?(0|[1-9][0-9]*) without "-0".
bool is_integer_literal(std::string_view t) {
  std::size_t i = 0;
  if (i < t.size() && t[i] == '-') ++i;
  if (i == t.size()) return false;
  if (t[i] == '0') return i + 1 == t.size() && i == 0;
  for (std::size_t j = i; j < t.size(); ++j) {
    if (!is_digit(t[j])) return false;
  }
  return true;
}

std::string quoted(std::string_view t) { return "'" + std::string(t) + "'"; }

}  // namespace

Integer Integer::parse(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw ParseError("invalid integer literal " + quoted(text));
  }
  return Integer(mpz_class(std::string(text), 10));
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.sign() == 0) throw InvalidArgument("rational with zero denominator");
  value_ = mpq_class(num.mpz(), den.mpz());
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) throw ParseError("invalid rational literal " + quoted(text));
    return Rational(Integer::parse(text));
  }
  const auto num_text = text.substr(0, slash);
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text)) {
    throw ParseError("invalid rational literal " + quoted(text));
  }
  const Integer num = Integer::parse(num_text);
  const Integer den = Integer::parse(den_text);
  if (den.sign() <= 0) {
    throw ParseError("rational literal " + quoted(text) + " needs a positive denominator");
  }
  mpz_class g;
  mpz_class abs_num = abs(num.mpz());
  mpz_gcd(g.get_mpz_t(), abs_num.get_mpz_t(), den.mpz().get_mpz_t());
  if (g != 1) {
    throw ParseError("rational literal " + quoted(text) + " is not in lowest terms");
  }
  return Rational(num, den);
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

LexPair LexPair::parse(std::string_view text) {
  const auto comma = text.find(',');
  if (text.size() < 5 || text.front() != '(' || text.back() != ')' ||
      comma == std::string_view::npos) {
    throw ParseError("invalid lexpair literal " + quoted(text));
  }
  const auto first = text.substr(1, comma - 1);
  const auto second = text.substr(comma + 1, text.size() - comma - 2);
  if (!is_integer_literal(first) || !is_integer_literal(second)) {
    throw ParseError("invalid lexpair literal " + quoted(text));
  }
  return {Integer::parse(first), Integer::parse(second)};
}

std::string_view domain_name(Domain d) {
  switch (d) {
    case Domain::kInteger: return "int";
    case Domain::kRational: return "rational";
    case Domain::kLexPair: return "lexpair";
  }
  return "?";
}

Domain parse_domain(std::string_view name) {
  if (name == "int") return Domain::kInteger;
  if (name == "rational") return Domain::kRational;
  if (name == "lexpair") return Domain::kLexPair;
  throw ParseError("unknown scalar domain " + quoted(name) + " (expected int, rational or lexpair)");
}

Domain domain_of(const Scalar& s) {
  return std::visit([](const auto& v) { return DomainOf<std::decay_t<decltype(v)>>::value; }, s);
}

Scalar zero(Domain d) {
  switch (d) {
    case Domain::kInteger: return Integer{};
    case Domain::kRational: return Rational{};
    case Domain::kLexPair: return LexPair{};
  }
  throw InvalidArgument("unknown domain");
}

namespace {

template <typename F>
auto same_domain(const Scalar& a, const Scalar& b, const char* op, F&& f) {
  if (a.index() != b.index()) {
    throw DomainMismatch(std::string(op) + ": operands from domains " +
                         std::string(domain_name(domain_of(a))) + " and " +
                         std::string(domain_name(domain_of(b))));
  }
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return f(x, std::get<T>(b));
      },
      a);
}

}  // namespace

Scalar add(const Scalar& a, const Scalar& b) {
  return same_domain(a, b, "add", [](const auto& x, const auto& y) { return Scalar(x + y); });
}

Scalar sub(const Scalar& a, const Scalar& b) {
  return same_domain(a, b, "sub", [](const auto& x, const auto& y) { return Scalar(x - y); });
}

std::strong_ordering compare(const Scalar& a, const Scalar& b) {
  return same_domain(a, b, "compare", [](const auto& x, const auto& y) { return x <=> y; });
}

Scalar parse_scalar(std::string_view text, Domain d) {
  switch (d) {
    case Domain::kInteger: return Integer::parse(text);
    case Domain::kRational: return Rational::parse(text);
    case Domain::kLexPair: return LexPair::parse(text);
  }
  throw InvalidArgument("unknown domain");
}

std::string to_string(const Scalar& s) {
  return std::visit([](const auto& v) { return v.str(); }, s);
}

}  // namespace sumsym
