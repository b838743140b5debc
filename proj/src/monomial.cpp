#include "stdbasis/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <string>

#include "stdbasis/errors.hpp"

namespace stdbasis {

namespace {

void check_same_length(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) {
    throw UsageError("monomial length mismatch: " + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()));
  }
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : exps_(nvars, 0) {}

Monomial::Monomial(std::initializer_list<Exponent> exps)
    : Monomial(std::span<const Exponent>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {
  for (Exponent e : exps_) {
    if (e < 0) throw UsageError("negative exponent in monomial");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  if (index >= nvars) throw UsageError("variable index out of range");
  if (power < 0) throw UsageError("negative exponent in monomial");
  Monomial m(nvars);
  m.exps_[index] = power;
  m.degree_ = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_same_length(*this, other);
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (other.exps_[i] > std::numeric_limits<Exponent>::max() - r.exps_[i]) {
      throw UsageError("exponent overflow in monomial product");
    }
    r.exps_[i] += other.exps_[i];
  }
  r.degree_ += other.degree_;
  return r;
}

bool is_local(OrderKind order) noexcept { return order == OrderKind::NegDegLex; }

std::string_view order_name(OrderKind order) noexcept {
  switch (order) {
    case OrderKind::Lex: return "lex";
    case OrderKind::DegLex: return "deglex";
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::NegDegLex: return "negdeglex";
  }
  return "?";
}

OrderKind parse_order(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "lex") return OrderKind::Lex;
  if (lower == "deglex") return OrderKind::DegLex;
  if (lower == "degrevlex") return OrderKind::DegRevLex;
  if (lower == "negdeglex") return OrderKind::NegDegLex;
  throw UsageError("unknown monomial order '" + std::string(name) + "'");
}

namespace {

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

// Greater iff the last differing exponent is smaller.
std::strong_ordering revlex_tiebreak(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare(OrderKind order, const Monomial& a, const Monomial& b) {
  check_same_length(a, b);
  switch (order) {
    case OrderKind::Lex:
      return lex_compare(a, b);
    case OrderKind::DegLex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return lex_compare(a, b);
    case OrderKind::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex_tiebreak(a, b);
    case OrderKind::NegDegLex:
      if (a.degree() != b.degree()) return b.degree() <=> a.degree();
      return lex_compare(a, b);
  }
  return std::strong_ordering::equal;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  check_same_length(a, b);
  if (a.degree() > b.degree()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial mono_quotient(const Monomial& b, const Monomial& a) {
  if (!mono_divides(a, b)) throw UsageError("monomial quotient: divisor does not divide");
  boost::container::small_vector<Monomial::Exponent, 8> q(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
  return Monomial(std::span<const Monomial::Exponent>(q.data(), q.size()));
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  check_same_length(a, b);
  boost::container::small_vector<Monomial::Exponent, 8> l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return Monomial(std::span<const Monomial::Exponent>(l.data(), l.size()));
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  check_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

}  // namespace stdbasis
