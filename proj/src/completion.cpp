#include "completion.hpp"

#include <utility>

namespace stdbasis::detail {

void PairQueue::add_pairs_with(const std::vector<Polynomial>& basis, std::size_t newest) {
  for (std::size_t i = 0; i < newest; ++i) {
    pairs_.push_back(
        {i, newest, mono_lcm(basis[i].leading_monomial(), basis[newest].leading_monomial())});
  }
}

CriticalPair PairQueue::pop() {
  std::size_t best = 0;
  for (std::size_t k = 1; k < pairs_.size(); ++k) {
    const auto c = compare(order_, pairs_[k].lcm, pairs_[best].lcm);
    if (c < 0 || (c == 0 && std::pair(pairs_[k].i, pairs_[k].j) <
                                std::pair(pairs_[best].i, pairs_[best].j))) {
      best = k;
    }
  }
  CriticalPair out = std::move(pairs_[best]);
  pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
  return out;
}

void complete(std::vector<Polynomial>& basis, const Reducer& reduce, const PairTrace& trace) {
  if (basis.empty()) return;
  PairQueue queue(basis.front().ring().order());
  for (std::size_t k = 1; k < basis.size(); ++k) queue.add_pairs_with(basis, k);

  while (!queue.empty()) {
    const CriticalPair pair = queue.pop();
    const Polynomial& f = basis[pair.i];
    const Polynomial& g = basis[pair.j];
    if (product_criterion(f, g)) {
      if (trace) trace({pair.i, pair.j, true, Polynomial(f.ring()), false});
      continue;
    }
    Polynomial h = reduce(s_polynomial(f, g), basis);
    const bool added = !h.is_zero();
    if (trace) trace({pair.i, pair.j, false, h, added});
    if (added) {
      basis.push_back(h.monic());
      queue.add_pairs_with(basis, basis.size() - 1);
    }
  }
}

}  // namespace stdbasis::detail
