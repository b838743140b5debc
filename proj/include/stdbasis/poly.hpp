#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stdbasis/gf_prime.hpp"
#include "stdbasis/monomial.hpp"

namespace stdbasis {

// The ambient context of a polynomial: F_p, the variable count and the
// order its terms are sorted by.
class Ring {
 public:
  Ring(std::uint32_t p, std::size_t nvars, OrderKind order);

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  std::size_t nvars() const noexcept { return nvars_; }
  OrderKind order() const noexcept { return order_; }

  Ring with_order(OrderKind order) const { return Ring(field_, nvars_, order); }

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(PrimeField field, std::size_t nvars, OrderKind order)
      : field_(field), nvars_(nvars), order_(order) {}

  PrimeField field_;
  std::size_t nvars_;
  OrderKind order_;
};

struct Term {
  FieldElement coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

// A sparse polynomial over F_p. Terms are kept strictly descending under
// the ring's order with no zero coefficients; the zero polynomial has no
// terms. A polynomial never changes order implicitly, see in_order().
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(ring) {}
  // Merges duplicate monomials, drops zeros and sorts. Throws UsageError on
  // a modulus or variable-count mismatch.
  Polynomial(Ring ring, std::vector<Term> raw);

  static Polynomial constant(Ring ring, std::int64_t c);
  static Polynomial term(Ring ring, std::int64_t c, Monomial mono);
  // X_{index+1}.
  static Polynomial variable(Ring ring, std::size_t index);

  const Ring& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  // The following throw UsageError on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  FieldElement leading_coeff() const { return leading_term().coeff; }
  // Maximal total degree of a term.
  std::int64_t degree() const;

  // All terms but the leading one; zero stays zero.
  Polynomial tail() const;
  Polynomial monic() const;
  Polynomial scaled(FieldElement c) const;
  Polynomial times_term(FieldElement c, const Monomial& m) const;
  // Re-sorts the same terms under another order.
  Polynomial in_order(OrderKind order) const;

  // this - c * m * g in a single merge pass.
  Polynomial minus_multiple(FieldElement c, const Monomial& m, const Polynomial& g) const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  struct Sorted {};
  Polynomial(Ring ring, std::vector<Term> terms, Sorted) : ring_(ring), terms_(std::move(terms)) {}

  void check_same_ring(const Polynomial& other) const;

  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& f, unsigned exponent);

struct LeadingData {
  Term lt;
  Monomial lm;
  FieldElement lc;
};

LeadingData leading_data(const Polynomial& f);

// red(f, g) = f - (lt(f)/lt(g)) g. Requires lm(g) | lm(f).
Polynomial reduce_step(const Polynomial& f, const Polynomial& g);

// (X^gamma/lt(f)) f - (X^gamma/lt(g)) g with X^gamma = lcm(lm f, lm g).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// deg(f) - deg(lm(f)).
std::int64_t ecart(const Polynomial& f);

// Substitutes X_i -> X_i + shift for every variable.
Polynomial shift_variables(const Polynomial& f, FieldElement shift);

// Total order on polynomials of one ring (term-by-term under the ring order,
// a proper prefix sorts first). Used to canonicalize sets.
bool canonical_less(const Polynomial& f, const Polynomial& g);

// Monic, zero-free and deduplicated, largest leading monomial first.
std::vector<Polynomial> canonical_set(std::span<const Polynomial> polys);

}  // namespace stdbasis
