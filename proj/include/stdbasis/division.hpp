#pragma once

#include <span>
#include <vector>

#include "stdbasis/poly.hpp"

namespace stdbasis {

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division under a global order: f = sum a_i f_i + r, where no
// monomial of r is divisible by any lm(f_i). At each step the first divisor
// (in sequence order) whose leading monomial divides lm(p) is used.
//
// Throws UsageError for a local order (use weak_normal_form), a zero
// divisor, or divisors from another ring.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors);

// Checks that divisors share f's ring and are nonzero.
void check_divisors(const Polynomial& f, std::span<const Polynomial> divisors);

}  // namespace stdbasis
