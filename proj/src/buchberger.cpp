#include "stdbasis/buchberger.hpp"

#include <string>

#include "completion.hpp"
#include "stdbasis/division.hpp"
#include "stdbasis/errors.hpp"

namespace stdbasis {

namespace {

std::vector<Polynomial> monic_nonzero(std::span<const Polynomial> gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    if (!out.empty() && !(g.ring() == out.front().ring())) {
      throw UsageError("generators belong to different rings");
    }
    if (!g.is_zero()) out.push_back(g.monic());
  }
  return out;
}

void require_global(std::span<const Polynomial> gens) {
  for (const auto& g : gens) {
    if (is_local(g.ring().order())) {
      throw UsageError("Buchberger's algorithm requires a global order; use standard_basis for " +
                       std::string(order_name(g.ring().order())));
    }
  }
}

}  // namespace

bool product_criterion(const Polynomial& f, const Polynomial& g) {
  return mono_coprime(f.leading_monomial(), g.leading_monomial());
}

std::vector<Polynomial> groebner(std::span<const Polynomial> gens, const PairTrace& trace) {
  require_global(gens);
  std::vector<Polynomial> basis = monic_nonzero(gens);
  detail::complete(
      basis,
      [](const Polynomial& s, const std::vector<Polynomial>& g) { return divide(s, g).remainder; },
      trace);
  return basis;
}

std::vector<Polynomial> minimalize(std::span<const Polynomial> basis) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    const Monomial& lm = basis[i].leading_monomial();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (j == i || basis[j].is_zero()) continue;
      const Monomial& other = basis[j].leading_monomial();
      if (mono_divides(other, lm) && (!(other == lm) || j < i)) redundant = true;
    }
    if (!redundant) out.push_back(basis[i]);
  }
  return out;
}

std::vector<Polynomial> reduce_basis(std::span<const Polynomial> basis) {
  require_global(basis);
  std::vector<Polynomial> minimal = minimalize(monic_nonzero(basis));
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    reduced.push_back(divide(minimal[i], others).remainder.monic());
  }
  return canonical_set(reduced);
}

}  // namespace stdbasis
