#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>

namespace stdbasis {

// X^alpha as an exponent vector. The total degree is cached since every
// graded order looks at it first.
class Monomial {
 public:
  using Exponent = std::int32_t;

  Monomial() = default;
  // The constant monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  // X_index^power, index is 0-based.
  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept {
    return {exps_.data(), exps_.size()};
  }
  std::int64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  // Throws UsageError on length mismatch or exponent overflow.
  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  boost::container::small_vector<Exponent, 8> exps_;
  std::int64_t degree_ = 0;
};

enum class OrderKind { Lex, DegLex, DegRevLex, NegDegLex };

// Lex, DegLex, DegRevLex are monomial (global) orders; NegDegLex is local.
bool is_local(OrderKind order) noexcept;

std::string_view order_name(OrderKind order) noexcept;
// Accepts "lex", "deglex", "degrevlex", "negdeglex" (case-insensitive).
OrderKind parse_order(std::string_view name);

// Total, multiplicative order on monomials of equal length. Variables are
// ranked X_1 > X_2 > ... > X_n.
std::strong_ordering compare(OrderKind order, const Monomial& a, const Monomial& b);

bool mono_divides(const Monomial& a, const Monomial& b);
// b / a; throws UsageError unless a divides b.
Monomial mono_quotient(const Monomial& b, const Monomial& a);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
// True iff the componentwise minimum is zero.
bool mono_coprime(const Monomial& a, const Monomial& b);

}  // namespace stdbasis
