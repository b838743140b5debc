#pragma once

// Critical-pair completion shared by the Gröbner and standard basis loops.
// Internal header.

#include <cstddef>
#include <functional>
#include <vector>

#include "stdbasis/buchberger.hpp"
#include "stdbasis/poly.hpp"

namespace stdbasis::detail {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Normal selection strategy: the pair with the smallest lcm under the active
// order, ties going to the lexicographically smallest (i, j).
class PairQueue {
 public:
  explicit PairQueue(OrderKind order) : order_(order) {}

  void add_pairs_with(const std::vector<Polynomial>& basis, std::size_t newest);
  bool empty() const noexcept { return pairs_.empty(); }
  CriticalPair pop();

 private:
  OrderKind order_;
  std::vector<CriticalPair> pairs_;
};

using Reducer = std::function<Polynomial(const Polynomial&, const std::vector<Polynomial>&)>;

// Runs the completion loop over `basis` in place. New elements are made
// monic before insertion. Coprime pairs are skipped by the product criterion.
void complete(std::vector<Polynomial>& basis, const Reducer& reduce, const PairTrace& trace);

}  // namespace stdbasis::detail
