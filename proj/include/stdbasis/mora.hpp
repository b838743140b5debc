#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stdbasis/buchberger.hpp"
#include "stdbasis/poly.hpp"

namespace stdbasis {

// Instrumentation of one Mora run. `max_reducers` is the largest size the
// reducer list L reached (inputs plus appended intermediate remainders).
struct MoraStats {
  std::size_t steps = 0;
  std::size_t appended = 0;
  std::size_t max_reducers = 0;
};

// u f = sum a_i f_i + h with lt(u) = 1, so u is a unit of the localization.
struct WeakNormalFormResult {
  Polynomial h;
  Polynomial unit;
  std::vector<Polynomial> coefficients;
  MoraStats stats;
};

struct MoraStep {
  enum class Kind { AppendToReducers, Reduce };
  Kind kind;
  const Polynomial& h;        // before the step
  const Polynomial& divisor;
  std::int64_t h_ecart;
  std::int64_t divisor_ecart;
  std::size_t reducers;       // |L| after the step
};

using MoraTrace = std::function<void(const MoraStep&)>;

// Mora's normal form algorithm under a local order. Among the reducers whose
// leading monomial divides lm(h) the one of minimal ecart is selected (the
// earliest inserted on ties); if its ecart exceeds ecart(h), the current h
// is appended to the reducer list before reducing.
//
// Throws UsageError for a global order (use divide), a zero element of G or
// mixed rings.
WeakNormalFormResult weak_normal_form(const Polynomial& f, std::span<const Polynomial> G,
                                      const MoraTrace& trace = {});

// Same reduction without the certificate bookkeeping.
Polynomial mora_reduce(const Polynomial& f, std::span<const Polynomial> G,
                       const MoraTrace& trace = {}, MoraStats* stats = nullptr);

// Re-checks every invariant of a weak normal form result by exact
// arithmetic. Returns a description of the first violation, if any.
std::optional<std::string> check_weak_normal_form(const Polynomial& f,
                                                  std::span<const Polynomial> G,
                                                  const WeakNormalFormResult& result);

// The plain reduction loop of the global division algorithm, run under
// whatever order the inputs carry, stopping after `budget` steps. Under a
// local order this need not terminate.
struct BoundedReduction {
  Polynomial h;
  std::size_t steps;
  bool budget_exhausted;
};

BoundedReduction naive_reduce(const Polynomial& f, std::span<const Polynomial> G,
                              std::size_t budget);

// Standard basis under a local order: pair completion with Mora's normal
// form in place of division, product criterion for coprime pairs, then
// minimalization. Canonically sorted.
std::vector<Polynomial> standard_basis(std::span<const Polynomial> gens,
                                       const PairTrace& trace = {});

struct StandardBasisCheck {
  bool ok = true;
  std::string diagnostic;
};

// S is a standard basis of the ideal generated by gens iff every S-pair with
// non-coprime leading monomials has weak normal form zero modulo S (coprime
// pairs are settled by the product criterion) and the two sets generate the same ideal of
// the localization (each side reduces to zero modulo a standard basis of
// the other).
StandardBasisCheck is_standard_basis(std::span<const Polynomial> S,
                                     std::span<const Polynomial> gens);

// Reduces tail terms of degree at most `max_degree` by the first element of
// G whose leading monomial divides them. Terms above the bound are left
// alone, which keeps the pass finite under a local order. Leading term and
// ideal class are unchanged.
Polynomial tail_reduce(const Polynomial& h, std::span<const Polynomial> G,
                       std::int64_t max_degree);

}  // namespace stdbasis
