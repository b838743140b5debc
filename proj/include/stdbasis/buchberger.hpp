#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "stdbasis/poly.hpp"

namespace stdbasis {

// One processed critical pair, reported to an optional trace sink. Indices
// refer to the basis as it stood when the pair was created.
struct PairEvent {
  std::size_t i;
  std::size_t j;
  bool skipped_by_product_criterion;
  Polynomial reduced;  // remainder / weak normal form of the S-polynomial
  bool added;
};

using PairTrace = std::function<void(const PairEvent&)>;

// True iff lm(f) and lm(g) are coprime, in which case spoly(f, g) reduces to
// zero modulo {f, g} and the pair can be skipped.
bool product_criterion(const Polynomial& f, const Polynomial& g);

// Buchberger's algorithm under a global order. Zero generators are dropped
// and the rest made monic; the result keeps the (monic) inputs first, in
// order, followed by the elements added during completion. Not reduced; see
// reduce_basis. Throws UsageError for a local order or mixed rings.
std::vector<Polynomial> groebner(std::span<const Polynomial> gens, const PairTrace& trace = {});

// Drops every element whose leading monomial is divisible by the leading
// monomial of another (the earlier one wins on equality). Zero elements are
// dropped too. Order of survivors is preserved.
std::vector<Polynomial> minimalize(std::span<const Polynomial> basis);

// The reduced Gröbner basis of <G>, given a Gröbner basis G under a global
// order. Canonically sorted (largest leading monomial first).
std::vector<Polynomial> reduce_basis(std::span<const Polynomial> basis);

}  // namespace stdbasis
