#pragma once

// Test-only reference arithmetic: polynomials as an exponent-vector ->
// coefficient map with schoolbook operations. Shares nothing with the
// library's sorted-term kernels, so it can check them.

#include <cstdint>
#include <map>
#include <vector>

#include "stdbasis/poly.hpp"

namespace oracle {

using Exps = std::vector<int>;

struct MapPoly {
  std::uint32_t p;
  std::size_t n;
  std::map<Exps, std::int64_t> terms;  // coefficients kept in [1, p)

  MapPoly(std::uint32_t p_, std::size_t n_) : p(p_), n(n_) {}

  void add_term(const Exps& e, std::int64_t c) {
    std::int64_t& slot = terms[e];
    slot = ((slot + c) % p + p) % p;
    if (slot == 0) terms.erase(e);
  }

  static MapPoly constant(std::uint32_t p, std::size_t n, std::int64_t c) {
    MapPoly r(p, n);
    r.add_term(Exps(n, 0), c);
    return r;
  }

  static MapPoly var(std::uint32_t p, std::size_t n, std::size_t i) {
    MapPoly r(p, n);
    Exps e(n, 0);
    e[i] = 1;
    r.add_term(e, 1);
    return r;
  }

  MapPoly operator+(const MapPoly& o) const {
    MapPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
  }

  MapPoly operator-(const MapPoly& o) const {
    MapPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, -c);
    return r;
  }

  MapPoly operator*(const MapPoly& o) const {
    MapPoly r(p, n);
    for (const auto& [a, ca] : terms) {
      for (const auto& [b, cb] : o.terms) {
        Exps e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = a[i] + b[i];
        r.add_term(e, ca * cb % p);
      }
    }
    return r;
  }

  MapPoly scaled(std::int64_t c) const { return *this * constant(p, n, c); }

  // Repeated multiplication, no binomial coefficients involved.
  MapPoly power(unsigned k) const {
    MapPoly r = constant(p, n, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  bool operator==(const MapPoly& o) const { return p == o.p && n == o.n && terms == o.terms; }
};

inline MapPoly from_poly(const stdbasis::Polynomial& f) {
  MapPoly r(f.ring().characteristic(), f.ring().nvars());
  for (const auto& t : f.terms()) {
    auto span = t.mono.exponents();
    r.add_term(Exps(span.begin(), span.end()), t.coeff.value());
  }
  return r;
}

inline stdbasis::Polynomial to_poly(const MapPoly& m, const stdbasis::Ring& ring) {
  std::vector<stdbasis::Term> raw;
  for (const auto& [e, c] : m.terms) {
    std::vector<stdbasis::Monomial::Exponent> ex(e.begin(), e.end());
    raw.push_back({ring.field().element(c), stdbasis::Monomial(std::span<const int>(ex))});
  }
  return stdbasis::Polynomial(ring, std::move(raw));
}

}  // namespace oracle
