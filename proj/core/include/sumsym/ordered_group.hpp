#pragma once

// Exact linearly ordered Abelian groups used as matrix entries:
// arbitrary-precision integers, reduced rationals, and lexicographically
// ordered integer pairs. The generic algorithms only need G{} as zero,
// +, -, unary -, and a total order compatible with addition.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

namespace sumsym {

template <typename G>
concept OrderedAbelianGroup = std::regular<G> && std::totally_ordered<G> &&
    requires(const G a, const G b) {
      { a + b } -> std::same_as<G>;
      { a - b } -> std::same_as<G>;
      { -a } -> std::same_as<G>;
    };

class Integer {
 public:
  Integer() = default;
  template <std::signed_integral I>
  Integer(I v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::unsigned_integral I>
  Integer(I v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Integer(mpz_class v) : value_(std::move(v)) {}

  // Accepts -?(0|[1-9][0-9]*), rejecting "-0".
  static Integer parse(std::string_view text);

  const mpz_class& mpz() const { return value_; }
  int sign() const { return sgn(value_); }
  std::string str() const { return value_.get_str(); }

  Integer& operator+=(const Integer& o) { value_ += o.value_; return *this; }
  Integer& operator-=(const Integer& o) { value_ -= o.value_; return *this; }
  Integer& operator*=(const Integer& o) { value_ *= o.value_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.value_)); }

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpz_class value_;
};

// Always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : Rational(Integer(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : value_(v.mpz()) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  // Accepts an Integer literal or "p/q" with q > 0 and gcd(|p|, q) = 1.
  static Rational parse(std::string_view text);

  const mpq_class& mpq() const { return value_; }
  Integer numerator() const { return Integer(mpz_class(value_.get_num())); }
  Integer denominator() const { return Integer(mpz_class(value_.get_den())); }
  int sign() const { return sgn(value_); }
  // "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

// Z x Z under the lexicographic order; the smallest non-Archimedean group.
struct LexPair {
  Integer major;
  Integer minor;

  // Accepts "(a,b)" with Integer literals and no whitespace.
  static LexPair parse(std::string_view text);
  std::string str() const { return "(" + major.str() + "," + minor.str() + ")"; }

  LexPair& operator+=(const LexPair& o) { major += o.major; minor += o.minor; return *this; }
  LexPair& operator-=(const LexPair& o) { major -= o.major; minor -= o.minor; return *this; }

  friend LexPair operator+(LexPair a, const LexPair& b) { return a += b; }
  friend LexPair operator-(LexPair a, const LexPair& b) { return a -= b; }
  friend LexPair operator-(const LexPair& a) { return {-a.major, -a.minor}; }

  friend bool operator==(const LexPair&, const LexPair&) = default;
  friend std::strong_ordering operator<=>(const LexPair&, const LexPair&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }
inline std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }
inline std::ostream& operator<<(std::ostream& os, const LexPair& v) { return os << v.str(); }

inline std::string to_string(const Integer& v) { return v.str(); }
inline std::string to_string(const Rational& v) { return v.str(); }
inline std::string to_string(const LexPair& v) { return v.str(); }

enum class Domain { kInteger, kRational, kLexPair };

// "int", "rational", "lexpair".
std::string_view domain_name(Domain d);
Domain parse_domain(std::string_view name);

template <typename G>
struct DomainOf;
template <>
struct DomainOf<Integer> { static constexpr Domain value = Domain::kInteger; };
template <>
struct DomainOf<Rational> { static constexpr Domain value = Domain::kRational; };
template <>
struct DomainOf<LexPair> { static constexpr Domain value = Domain::kLexPair; };

template <typename G>
G parse_scalar(std::string_view text) {
  return G::parse(text);
}

// Strict positivity, written out because it reads better at call sites.
template <OrderedAbelianGroup G>
bool is_positive(const G& v) {
  return v > G{};
}

// Runtime-tagged scalar. Arithmetic between different alternatives throws
// DomainMismatch.
using Scalar = std::variant<Integer, Rational, LexPair>;

Domain domain_of(const Scalar& s);
Scalar zero(Domain d);
Scalar add(const Scalar& a, const Scalar& b);
Scalar sub(const Scalar& a, const Scalar& b);
std::strong_ordering compare(const Scalar& a, const Scalar& b);
Scalar parse_scalar(std::string_view text, Domain d);
std::string to_string(const Scalar& s);

}  // namespace sumsym
