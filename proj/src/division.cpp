#include "stdbasis/division.hpp"

#include <string>

#include "stdbasis/errors.hpp"

namespace stdbasis {

void check_divisors(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (!(divisors[i].ring() == f.ring())) {
      throw UsageError("divisor " + std::to_string(i + 1) + " belongs to a different ring");
    }
    if (divisors[i].is_zero()) {
      throw UsageError("divisor " + std::to_string(i + 1) + " is zero");
    }
  }
}

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  const Ring& ring = f.ring();
  if (is_local(ring.order())) {
    throw UsageError("division requires a global order; use weak_normal_form for " +
                     std::string(order_name(ring.order())));
  }
  check_divisors(f, divisors);

  std::vector<std::vector<Term>> quotient_terms(divisors.size());
  std::vector<Term> remainder_terms;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Term& lg = divisors[i].leading_term();
      if (mono_divides(lg.mono, lt.mono)) {
        const FieldElement c = lt.coeff * inverse(lg.coeff);
        Monomial m = mono_quotient(lt.mono, lg.mono);
        p = p.minus_multiple(c, m, divisors[i]);
        quotient_terms[i].push_back({c, std::move(m)});
        divided = true;
        break;
      }
    }
    if (!divided) {
      remainder_terms.push_back(lt);
      p = p.tail();
    }
  }

  DivisionResult result{{}, Polynomial(ring, std::move(remainder_terms))};
  result.quotients.reserve(divisors.size());
  for (auto& q : quotient_terms) result.quotients.emplace_back(ring, std::move(q));
  return result;
}

}  // namespace stdbasis
