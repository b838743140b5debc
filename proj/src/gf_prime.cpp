#include "stdbasis/gf_prime.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "stdbasis/errors.hpp"

namespace stdbasis {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldElement::FieldElement(std::int64_t value, std::uint32_t modulus)
    : value_(0), modulus_(modulus) {
  if (modulus < 2) throw UsageError("field modulus must be at least 2");
  std::int64_t r = value % static_cast<std::int64_t>(modulus);
  if (r < 0) r += modulus;
  value_ = static_cast<std::uint32_t>(r);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
  return os << a.value() << " (mod " << a.modulus() << ")";
}

namespace {

std::uint32_t common_modulus(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) {
    throw UsageError("field element modulus mismatch: " +
                     std::to_string(a.modulus()) + " vs " +
                     std::to_string(b.modulus()));
  }
  return a.modulus();
}

}  // namespace

FieldElement operator+(FieldElement a, FieldElement b) {
  const auto p = common_modulus(a, b);
  return FieldElement(static_cast<std::int64_t>(a.value()) + b.value(), p);
}

FieldElement operator-(FieldElement a, FieldElement b) {
  const auto p = common_modulus(a, b);
  return FieldElement(static_cast<std::int64_t>(a.value()) - b.value(), p);
}

FieldElement operator*(FieldElement a, FieldElement b) {
  const auto p = common_modulus(a, b);
  return FieldElement(static_cast<std::int64_t>(
                          static_cast<std::uint64_t>(a.value()) * b.value() % p),
                      p);
}

FieldElement operator-(FieldElement a) {
  return FieldElement(-static_cast<std::int64_t>(a.value()), a.modulus());
}

FieldElement inverse(FieldElement a) {
  if (a.is_zero()) throw DivisionByZeroError("inverse of zero in F_p");
  // Extended Euclid on (a, p); p need not be re-validated here.
  std::int64_t old_r = a.value(), r = a.modulus();
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw DivisionByZeroError("element is not invertible");
  return FieldElement(old_s, a.modulus());
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw UsageError("modulus " + std::to_string(p) + " is not prime");
  }
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  return inverse(FieldElement(a, p_)).value();
}

std::uint32_t PrimeField::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
}

FieldElement binom_mod_p(std::int64_t m, std::int64_t t, std::uint32_t p) {
  if (m < 0 || t < 0) throw UsageError("binom_mod_p: negative argument");
  if (t > m) return FieldElement(0, p);
  if (t == 0 || t == m) return FieldElement(1, p);
  // One Pascal row at a time; only entries 0..t are needed.
  std::vector<std::uint32_t> row(static_cast<std::size_t>(t) + 1, 0);
  row[0] = 1 % p;
  for (std::int64_t i = 1; i <= m; ++i) {
    const std::int64_t top = std::min(i, t);
    for (std::int64_t j = top; j >= 1; --j) {
      std::uint32_t s = row[j] + row[j - 1];
      row[j] = s >= p ? s - p : s;
    }
  }
  return FieldElement(row[static_cast<std::size_t>(t)], p);
}

}  // namespace stdbasis
