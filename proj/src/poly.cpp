#include "stdbasis/poly.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "stdbasis/errors.hpp"

namespace stdbasis {

Ring::Ring(std::uint32_t p, std::size_t nvars, OrderKind order)
    : field_(p), nvars_(nvars), order_(order) {
  if (nvars == 0) throw UsageError("a ring needs at least one variable");
}

namespace {

// Sorts descending and merges; coefficients are assumed reduced.
std::vector<Term> sort_and_merge(const Ring& ring, std::vector<Term> raw) {
  const OrderKind order = ring.order();
  std::sort(raw.begin(), raw.end(), [order](const Term& a, const Term& b) {
    return compare(order, a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(raw.size());
  for (auto& t : raw) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = out.back().coeff + t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(Ring ring, std::vector<Term> raw) : ring_(ring) {
  for (const auto& t : raw) {
    if (t.coeff.modulus() != ring_.characteristic()) {
      throw UsageError("term coefficient modulus does not match the ring");
    }
    if (t.mono.size() != ring_.nvars()) {
      throw UsageError("term monomial has " + std::to_string(t.mono.size()) +
                       " variables, ring has " + std::to_string(ring_.nvars()));
    }
  }
  terms_ = sort_and_merge(ring_, std::move(raw));
}

Polynomial Polynomial::constant(Ring ring, std::int64_t c) {
  return term(ring, c, Monomial(ring.nvars()));
}

Polynomial Polynomial::term(Ring ring, std::int64_t c, Monomial mono) {
  std::vector<Term> t;
  t.push_back({ring.field().element(c), std::move(mono)});
  return Polynomial(ring, std::move(t));
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  return term(ring, 1, Monomial::variable(ring.nvars(), index));
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw UsageError("leading term of the zero polynomial");
  return terms_.front();
}

std::int64_t Polynomial::degree() const {
  if (terms_.empty()) throw UsageError("degree of the zero polynomial");
  std::int64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::tail() const {
  if (terms_.empty()) return *this;
  return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()), Sorted{});
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(inverse(leading_coeff()));
}

Polynomial Polynomial::scaled(FieldElement c) const {
  if (c.modulus() != ring_.characteristic()) throw UsageError("scalar modulus mismatch");
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = t.coeff * c;
  return Polynomial(ring_, std::move(out), Sorted{});
}

Polynomial Polynomial::times_term(FieldElement c, const Monomial& m) const {
  if (c.modulus() != ring_.characteristic()) throw UsageError("scalar modulus mismatch");
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.coeff * c, t.mono * m});
  // Multiplicativity of the order keeps the sequence sorted.
  return Polynomial(ring_, std::move(out), Sorted{});
}

Polynomial Polynomial::in_order(OrderKind order) const {
  const Ring r = ring_.with_order(order);
  return Polynomial(r, sort_and_merge(r, terms_), Sorted{});
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (!(ring_ == other.ring_)) {
    throw UsageError("polynomials belong to different rings (modulus, variables or order)");
  }
}

Polynomial Polynomial::minus_multiple(FieldElement c, const Monomial& m,
                                      const Polynomial& g) const {
  check_same_ring(g);
  if (c.modulus() != ring_.characteristic()) throw UsageError("scalar modulus mismatch");
  if (c.is_zero() || g.is_zero()) return *this;
  const PrimeField& F = ring_.field();
  const OrderKind order = ring_.order();
  const std::uint32_t neg_c = F.neg(c.value());
  const std::uint32_t p = F.characteristic();

  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto fi = terms_.begin();
  auto gi = g.terms_.begin();
  Monomial shifted;
  bool have_shifted = false;
  while (gi != g.terms_.end()) {
    if (!have_shifted) {
      shifted = gi->mono * m;
      have_shifted = true;
    }
    if (fi == terms_.end()) {
      out.push_back({FieldElement(F.mul(neg_c, gi->coeff.value()), p), std::move(shifted)});
      ++gi;
      have_shifted = false;
      continue;
    }
    const auto cmp = compare(order, fi->mono, shifted);
    if (cmp > 0) {
      out.push_back(*fi++);
    } else if (cmp < 0) {
      out.push_back({FieldElement(F.mul(neg_c, gi->coeff.value()), p), std::move(shifted)});
      ++gi;
      have_shifted = false;
    } else {
      const std::uint32_t v = F.add(fi->coeff.value(), F.mul(neg_c, gi->coeff.value()));
      if (v != 0) out.push_back({FieldElement(v, p), fi->mono});
      ++fi;
      ++gi;
      have_shifted = false;
    }
  }
  out.insert(out.end(), fi, terms_.end());
  return Polynomial(ring_, std::move(out), Polynomial::Sorted{});
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  return f.minus_multiple(-f.ring().field().element(1), Monomial(f.ring().nvars()), g);
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  return f.minus_multiple(f.ring().field().element(1), Monomial(f.ring().nvars()), g);
}

Polynomial operator-(const Polynomial& f) {
  return f.scaled(-f.ring().field().element(1));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.check_same_ring(g);
  std::vector<Term> raw;
  raw.reserve(f.size() * g.size());
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) raw.push_back({a.coeff * b.coeff, a.mono * b.mono});
  }
  return Polynomial(f.ring_, sort_and_merge(f.ring_, std::move(raw)), Polynomial::Sorted{});
}

Polynomial pow(const Polynomial& f, unsigned exponent) {
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (exponent != 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

LeadingData leading_data(const Polynomial& f) {
  const Term& lt = f.leading_term();
  return {lt, lt.mono, lt.coeff};
}

Polynomial reduce_step(const Polynomial& f, const Polynomial& g) {
  const Term& lf = f.leading_term();
  const Term& lg = g.leading_term();
  if (!mono_divides(lg.mono, lf.mono)) {
    throw UsageError("reduce_step: lm(g) does not divide lm(f)");
  }
  return f.minus_multiple(lf.coeff * inverse(lg.coeff), mono_quotient(lf.mono, lg.mono), g);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Term& lf = f.leading_term();
  const Term& lg = g.leading_term();
  const Monomial gamma = mono_lcm(lf.mono, lg.mono);
  const Polynomial left = f.times_term(inverse(lf.coeff), mono_quotient(gamma, lf.mono));
  return left.minus_multiple(inverse(lg.coeff), mono_quotient(gamma, lg.mono), g);
}

std::int64_t ecart(const Polynomial& f) {
  return f.degree() - f.leading_monomial().degree();
}

Polynomial shift_variables(const Polynomial& f, FieldElement shift) {
  const Ring& ring = f.ring();
  const std::uint32_t p = ring.characteristic();
  if (shift.modulus() != p) throw UsageError("shift modulus mismatch");
  const PrimeField& F = ring.field();
  const std::size_t n = ring.nvars();

  std::vector<Term> raw;
  std::vector<Monomial::Exponent> beta(n);
  for (const auto& t : f.terms()) {
    // c X^alpha -> c * prod_i sum_{b_i <= alpha_i} C(alpha_i, b_i) shift^(alpha_i - b_i) X_i^b_i
    std::fill(beta.begin(), beta.end(), 0);
    while (true) {
      std::uint32_t coeff = t.coeff.value();
      for (std::size_t i = 0; i < n && coeff != 0; ++i) {
        const auto a = t.mono[i];
        std::uint32_t factor = binom_mod_p(a, beta[i], p).value();
        for (Monomial::Exponent e = 0; e < a - beta[i]; ++e) factor = F.mul(factor, shift.value());
        coeff = F.mul(coeff, factor);
      }
      if (coeff != 0) raw.push_back({FieldElement(coeff, p), Monomial(std::span<const Monomial::Exponent>(beta))});
      // Odometer over beta <= alpha, last variable fastest.
      std::size_t i = n;
      for (; i > 0; --i) {
        if (beta[i - 1] < t.mono[i - 1]) {
          ++beta[i - 1];
          break;
        }
        beta[i - 1] = 0;
      }
      if (i == 0) break;
    }
  }
  return Polynomial(ring, std::move(raw));
}

bool canonical_less(const Polynomial& f, const Polynomial& g) {
  const OrderKind order = f.ring().order();
  const auto a = f.terms();
  const auto b = g.terms();
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    const auto c = compare(order, a[i].mono, b[i].mono);
    if (c != 0) return c < 0;
    if (a[i].coeff.value() != b[i].coeff.value()) return a[i].coeff.value() < b[i].coeff.value();
  }
  return a.size() < b.size();
}

std::vector<Polynomial> canonical_set(std::span<const Polynomial> polys) {
  std::vector<Polynomial> out;
  for (const auto& f : polys) {
    if (!f.is_zero()) out.push_back(f.monic());
  }
  std::sort(out.begin(), out.end(),
            [](const Polynomial& a, const Polynomial& b) { return canonical_less(b, a); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace stdbasis
