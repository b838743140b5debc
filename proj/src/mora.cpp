#include "stdbasis/mora.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "completion.hpp"
#include "stdbasis/division.hpp"
#include "stdbasis/errors.hpp"

namespace stdbasis {

namespace {

void require_local(const Ring& ring) {
  if (!is_local(ring.order())) {
    throw UsageError("Mora's normal form requires a local order; use divide for " +
                     std::string(order_name(ring.order())));
  }
}

// A reducer in L: either input G[index] or an earlier remainder together with
// its certificate (unit, coefficients).
struct ReducerEntry {
  Polynomial poly;
  std::int64_t ecart;
  std::optional<std::size_t> input_index;
  std::optional<Polynomial> unit;
  std::vector<Polynomial> coefficients;
};

class MoraRun {
 public:
  MoraRun(const Polynomial& f, std::span<const Polynomial> G, bool certify,
          const MoraTrace& trace)
      : h_(f), unit_(Polynomial::constant(f.ring(), 1)), certify_(certify), trace_(trace) {
    require_local(f.ring());
    check_divisors(f, G);
    reducers_.reserve(G.size());
    for (std::size_t i = 0; i < G.size(); ++i) {
      reducers_.push_back({G[i], ecart(G[i]), i, std::nullopt, {}});
    }
    if (certify_) coefficients_.assign(G.size(), Polynomial(f.ring()));
    stats_.max_reducers = reducers_.size();
  }

  void run() {
    while (!h_.is_zero()) {
      const std::optional<std::size_t> pick = select();
      if (!pick) break;
      const std::int64_t h_ecart = ecart(h_);
      if (reducers_[*pick].ecart > h_ecart) append_current(h_ecart, *pick);
      reduce_by(*pick, h_ecart);
    }
  }

  Polynomial& h() { return h_; }
  Polynomial& unit() { return unit_; }
  std::vector<Polynomial>& coefficients() { return coefficients_; }
  const MoraStats& stats() const { return stats_; }

 private:
  std::optional<std::size_t> select() const {
    const Monomial& lm = h_.leading_monomial();
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < reducers_.size(); ++k) {
      if (!mono_divides(reducers_[k].poly.leading_monomial(), lm)) continue;
      if (!best || reducers_[k].ecart < reducers_[*best].ecart) best = k;
    }
    return best;
  }

  void append_current(std::int64_t h_ecart, std::size_t chosen_index) {
    ReducerEntry e{h_, h_ecart, std::nullopt, std::nullopt, {}};
    if (certify_) {
      e.unit = unit_;
      e.coefficients = coefficients_;
    }
    reducers_.push_back(std::move(e));
    ++stats_.appended;
    stats_.max_reducers = std::max(stats_.max_reducers, reducers_.size());
    if (trace_) {
      const ReducerEntry& chosen = reducers_[chosen_index];
      trace_({MoraStep::Kind::AppendToReducers, h_, chosen.poly, h_ecart, chosen.ecart,
              reducers_.size()});
    }
  }

  void reduce_by(std::size_t index, std::int64_t h_ecart) {
    const ReducerEntry& g = reducers_[index];
    const Term& lh = h_.leading_term();
    const Term& lg = g.poly.leading_term();
    const FieldElement c = lh.coeff * inverse(lg.coeff);
    const Monomial m = mono_quotient(lh.mono, lg.mono);
    Polynomial next = h_.minus_multiple(c, m, g.poly);
    if (certify_) {
      if (g.input_index) {
        auto& a = coefficients_[*g.input_index];
        a = a.minus_multiple(-c, m, Polynomial::constant(h_.ring(), 1));
      } else {
        unit_ = unit_.minus_multiple(c, m, *g.unit);
        for (std::size_t i = 0; i < coefficients_.size(); ++i) {
          coefficients_[i] = coefficients_[i].minus_multiple(c, m, g.coefficients[i]);
        }
      }
    }
    ++stats_.steps;
    if (trace_) {
      trace_({MoraStep::Kind::Reduce, h_, g.poly, h_ecart, g.ecart, reducers_.size()});
    }
    h_ = std::move(next);
  }

  Polynomial h_;
  Polynomial unit_;
  std::vector<Polynomial> coefficients_;
  std::vector<ReducerEntry> reducers_;
  bool certify_;
  const MoraTrace& trace_;
  MoraStats stats_;
};

}  // namespace

WeakNormalFormResult weak_normal_form(const Polynomial& f, std::span<const Polynomial> G,
                                      const MoraTrace& trace) {
  MoraRun run(f, G, true, trace);
  run.run();
  return {std::move(run.h()), std::move(run.unit()), std::move(run.coefficients()),
          run.stats()};
}

Polynomial mora_reduce(const Polynomial& f, std::span<const Polynomial> G,
                       const MoraTrace& trace, MoraStats* stats) {
  MoraRun run(f, G, false, trace);
  run.run();
  if (stats) *stats = run.stats();
  return std::move(run.h());
}

std::optional<std::string> check_weak_normal_form(const Polynomial& f,
                                                  std::span<const Polynomial> G,
                                                  const WeakNormalFormResult& result) {
  const Ring& ring = f.ring();
  if (result.coefficients.size() != G.size()) return "coefficient count differs from |G|";
  Polynomial lhs = result.unit * f;
  for (std::size_t i = 0; i < G.size(); ++i) lhs = lhs - result.coefficients[i] * G[i];
  lhs = lhs - result.h;
  if (!lhs.is_zero()) return "certificate identity u*f = sum a_i f_i + h fails";

  if (result.unit.is_zero() || !result.unit.leading_monomial().is_one() ||
      result.unit.leading_coeff().value() != 1) {
    return "leading term of the unit is not 1";
  }
  if (!result.h.is_zero()) {
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (mono_divides(G[i].leading_monomial(), result.h.leading_monomial())) {
        return "lm(h) is divisible by lm of element " + std::to_string(i + 1);
      }
    }
  }
  for (std::size_t i = 0; i < G.size(); ++i) {
    const Polynomial& a = result.coefficients[i];
    if (a.is_zero()) continue;
    if (f.is_zero()) return "nonzero coefficient for f = 0";
    const Monomial prod = a.leading_monomial() * G[i].leading_monomial();
    if (compare(ring.order(), f.leading_monomial(), prod) < 0) {
      return "lt(f) < lt(a_i) lt(f_i) for element " + std::to_string(i + 1);
    }
  }
  return std::nullopt;
}

BoundedReduction naive_reduce(const Polynomial& f, std::span<const Polynomial> G,
                              std::size_t budget) {
  check_divisors(f, G);
  BoundedReduction out{f, 0, false};
  while (!out.h.is_zero()) {
    const Polynomial* divisor = nullptr;
    for (const auto& g : G) {
      if (mono_divides(g.leading_monomial(), out.h.leading_monomial())) {
        divisor = &g;
        break;
      }
    }
    if (!divisor) break;
    if (out.steps == budget) {
      out.budget_exhausted = true;
      break;
    }
    out.h = reduce_step(out.h, *divisor);
    ++out.steps;
  }
  return out;
}

std::vector<Polynomial> standard_basis(std::span<const Polynomial> gens, const PairTrace& trace) {
  std::vector<Polynomial> basis;
  for (const auto& g : gens) {
    require_local(g.ring());
    if (!basis.empty() && !(g.ring() == basis.front().ring())) {
      throw UsageError("generators belong to different rings");
    }
    if (!g.is_zero()) basis.push_back(g.monic());
  }
  detail::complete(
      basis,
      [](const Polynomial& s, const std::vector<Polynomial>& g) { return mora_reduce(s, g); },
      trace);
  return canonical_set(minimalize(basis));
}

StandardBasisCheck is_standard_basis(std::span<const Polynomial> S,
                                     std::span<const Polynomial> gens) {
  std::vector<Polynomial> basis;
  for (const auto& s : S) {
    if (!s.is_zero()) basis.push_back(s);
  }
  if (!basis.empty()) require_local(basis.front().ring());

  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (product_criterion(basis[i], basis[j])) continue;
      if (!mora_reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) {
        return {false, "S-polynomial of elements " + std::to_string(i + 1) + " and " +
                           std::to_string(j + 1) + " has a nonzero weak normal form"};
      }
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    if (basis.empty() || !mora_reduce(gens[i], basis).is_zero()) {
      return {false, "generator " + std::to_string(i + 1) +
                         " does not reduce to zero modulo the candidate basis"};
    }
  }
  const std::vector<Polynomial> reference = standard_basis(gens);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (reference.empty() || !mora_reduce(basis[i], reference).is_zero()) {
      return {false, "basis element " + std::to_string(i + 1) +
                         " does not lie in the ideal generated by the generators"};
    }
  }
  return {};
}

Polynomial tail_reduce(const Polynomial& h, std::span<const Polynomial> G,
                       std::int64_t max_degree) {
  if (h.is_zero()) return h;
  check_divisors(h, G);
  const Ring& ring = h.ring();
  std::vector<Term> done{h.leading_term()};
  Polynomial rest = h.tail();
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    const Polynomial* divisor = nullptr;
    if (lt.mono.degree() <= max_degree) {
      for (const auto& g : G) {
        if (mono_divides(g.leading_monomial(), lt.mono)) {
          divisor = &g;
          break;
        }
      }
    }
    if (divisor) {
      rest = reduce_step(rest, *divisor);
    } else {
      done.push_back(lt);
      rest = rest.tail();
    }
  }
  return Polynomial(ring, std::move(done));
}

}  // namespace stdbasis
