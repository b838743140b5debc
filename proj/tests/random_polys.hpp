#pragma once

// Hand-rolled generators for property tests and the acceptance suite.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "stdbasis/poly.hpp"

namespace testgen {

inline stdbasis::Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int max_degree) {
  std::vector<stdbasis::Monomial::Exponent> e(n, 0);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  const int d = deg(rng);
  for (int i = 0; i < d; ++i) ++e[var(rng)];
  return stdbasis::Monomial(std::span<const stdbasis::Monomial::Exponent>(e));
}

inline stdbasis::Polynomial random_poly(std::mt19937_64& rng, const stdbasis::Ring& ring,
                                        int max_degree, std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> count(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> coeff(1, ring.characteristic() - 1);
  std::vector<stdbasis::Term> raw;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) {
    raw.push_back({ring.field().element(coeff(rng)), random_monomial(rng, ring.nvars(), max_degree)});
  }
  return stdbasis::Polynomial(ring, std::move(raw));
}

inline stdbasis::Polynomial random_nonzero_poly(std::mt19937_64& rng, const stdbasis::Ring& ring,
                                                int max_degree, std::size_t max_terms) {
  while (true) {
    auto f = random_poly(rng, ring, max_degree, max_terms);
    if (!f.is_zero()) return f;
  }
}

// Nonzero polynomial with no constant term, i.e. inside the maximal ideal at
// the origin.
inline stdbasis::Polynomial random_nonunit_poly(std::mt19937_64& rng, const stdbasis::Ring& ring,
                                                int max_degree, std::size_t max_terms) {
  while (true) {
    auto f = random_nonzero_poly(rng, ring, max_degree, max_terms);
    if (std::none_of(f.terms().begin(), f.terms().end(),
                     [](const stdbasis::Term& t) { return t.mono.is_one(); })) {
      return f;
    }
  }
}

// Divisor lists for Mora's algorithm: 1 to 3 monomials or binomials inside the
// maximal ideal. Dense divisors or divisors containing units make the
// minimal-ecart selection climb in degree for a very long time on a small
// fraction of draws.
inline std::vector<stdbasis::Polynomial> random_local_divisors(std::mt19937_64& rng,
                                                               const stdbasis::Ring& ring,
                                                               int max_degree) {
  std::vector<stdbasis::Polynomial> G;
  const std::size_t count = 1 + rng() % 3;
  for (std::size_t i = 0; i < count; ++i) G.push_back(random_nonunit_poly(rng, ring, max_degree, 2));
  return G;
}

inline std::uint32_t random_small_prime(std::mt19937_64& rng) {
  static constexpr std::uint32_t primes[] = {2, 3, 5};
  return primes[rng() % 3];
}

}  // namespace testgen
