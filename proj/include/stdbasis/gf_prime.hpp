#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

namespace stdbasis {

bool is_prime(std::uint32_t n);

// An element of F_p. The modulus travels with the value so that mixing
// elements of different fields is caught at the API boundary.
class FieldElement {
 public:
  // Reduces `value` into [0, modulus). Does not re-check primality; use
  // PrimeField::element for validated construction.
  FieldElement(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

// Throw UsageError on modulus mismatch.
FieldElement operator+(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a, FieldElement b);
FieldElement operator*(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a);

// Throws DivisionByZeroError for zero.
FieldElement inverse(FieldElement a);

// The ambient field of a computation. The modulus is checked for primality
// once, here. Arithmetic on raw residues is provided for the polynomial
// kernels, which store coefficients without a per-term modulus check.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }
  FieldElement element(std::int64_t v) const { return FieldElement(v, p_); }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t reduce(std::int64_t v) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

// C(m, t) mod p by Pascal's recurrence, reducing at every step. Returns 0
// for t > m and 1 for t == 0. Negative arguments throw UsageError.
FieldElement binom_mod_p(std::int64_t m, std::int64_t t, std::uint32_t p);

}  // namespace stdbasis
