#include "stdbasis/code_ideal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "stdbasis/errors.hpp"
#include "stdbasis/mora.hpp"

namespace stdbasis {

MatrixError::MatrixError(const std::string& what, std::size_t row, std::size_t column)
    : std::runtime_error(what), row_(row), column_(column) {}

GeneratorMatrix::GeneratorMatrix(std::uint32_t p, std::vector<std::vector<std::uint32_t>> rows)
    : p_(p), n_(rows.empty() ? 0 : rows.front().size()), rows_(std::move(rows)) {
  if (!is_prime(p_)) throw MatrixError("modulus p=" + std::to_string(p_) + " is not prime");
  const std::size_t k = rows_.size();
  if (k == 0) throw MatrixError("generator matrix needs at least one row");
  if (k > n_) {
    throw MatrixError("k=" + std::to_string(k) + " exceeds n=" + std::to_string(n_));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (rows_[i].size() != n_) {
      throw MatrixError("row " + std::to_string(i + 1) + " has " +
                            std::to_string(rows_[i].size()) + " entries, expected " +
                            std::to_string(n_),
                        i + 1);
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (rows_[i][j] >= p_) {
        throw MatrixError("entry " + std::to_string(rows_[i][j]) + " at row " +
                              std::to_string(i + 1) + ", column " + std::to_string(j + 1) +
                              " is outside [0, " + std::to_string(p_) + ")",
                          i + 1, j + 1);
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (rows_[i][j] != (i == j ? 1u : 0u)) {
        throw MatrixError("not in standard form: left k x k block is not the identity (row " +
                              std::to_string(i + 1) + ", column " + std::to_string(j + 1) + ")",
                          i + 1, j + 1);
      }
    }
  }
}

std::vector<std::uint32_t> GeneratorMatrix::encode(std::span<const std::uint32_t> message) const {
  if (message.size() != k()) throw UsageError("message length must equal k");
  std::vector<std::uint32_t> word(n_, 0);
  for (std::size_t i = 0; i < k(); ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      word[j] = static_cast<std::uint32_t>(
          (word[j] + static_cast<std::uint64_t>(message[i] % p_) * rows_[i][j]) % p_);
    }
  }
  return word;
}

namespace {

// Cursor over one line of a matrix file, with 1-based columns.
class LineCursor {
 public:
  LineCursor(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  void skip_space() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= line_.size() || line_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }
  std::uint64_t number() {
    skip_space();
    if (pos_ >= line_.size() || !std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
      fail("expected a non-negative integer");
    }
    std::uint64_t v = 0;
    while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(line_[pos_] - '0');
      if (v > 0xFFFFFFFFull) fail("integer too large");
      ++pos_;
    }
    if (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_])) &&
        line_[pos_] != '=') {
      fail("unexpected character '" + std::string(1, line_[pos_]) + "'");
    }
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_no_, pos_ + 1);
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

MatrixText parse_matrix_text(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      lines.emplace_back(line_no, line);
    }
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("empty matrix file", 1, 1);

  MatrixText out{};
  {
    LineCursor c(lines[0].second, lines[0].first);
    c.expect('p');
    c.expect('=');
    out.p = static_cast<std::uint32_t>(c.number());
    if (!c.at_end()) c.fail("trailing characters after p");
  }
  if (lines.size() < 2) throw ParseError("missing 'k=<int> n=<int>' line", line_no, 1);
  {
    LineCursor c(lines[1].second, lines[1].first);
    c.expect('k');
    c.expect('=');
    out.k = c.number();
    c.expect('n');
    c.expect('=');
    out.n = c.number();
    if (!c.at_end()) c.fail("trailing characters after n");
  }
  if (lines.size() - 2 != out.k) {
    const std::size_t where = lines.size() > out.k + 2 ? lines[out.k + 2].first : line_no;
    throw ParseError("expected " + std::to_string(out.k) + " matrix rows, found " +
                         std::to_string(lines.size() - 2),
                     where, 1);
  }
  for (std::size_t i = 0; i < out.k; ++i) {
    LineCursor c(lines[i + 2].second, lines[i + 2].first);
    std::vector<std::uint32_t> row;
    while (!c.at_end()) {
      if (row.size() == out.n) c.fail("row has more than n=" + std::to_string(out.n) + " entries");
      row.push_back(static_cast<std::uint32_t>(c.number()));
    }
    if (row.size() != out.n) {
      c.fail("row has " + std::to_string(row.size()) + " entries, expected n=" +
             std::to_string(out.n));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

GeneratorMatrix parse_matrix(std::string_view text) {
  MatrixText raw = parse_matrix_text(text);
  if (raw.k > raw.n) {
    throw MatrixError("k=" + std::to_string(raw.k) + " exceeds n=" + std::to_string(raw.n));
  }
  return GeneratorMatrix(raw.p, std::move(raw.rows));
}

std::string format_matrix(const GeneratorMatrix& G) {
  std::ostringstream os;
  os << "p=" << G.p() << "\nk=" << G.k() << " n=" << G.n() << "\n";
  for (const auto& row : G.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "\n";
  }
  return os.str();
}

RowEchelon rref(std::uint32_t p, std::vector<std::vector<std::uint32_t>> rows) {
  const PrimeField F(p);
  RowEchelon out;
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] % p == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const std::uint32_t inv = F.inv(rows[r][col] % p);
    for (auto& v : rows[r]) v = F.mul(v % p, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const std::uint32_t factor = rows[i][col] % p;
      if (factor == 0) continue;
      for (std::size_t j = 0; j < ncols; ++j) {
        rows[i][j] = F.sub(rows[i][j] % p, F.mul(factor, rows[r][j]));
      }
    }
    out.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

GeneratorMatrix to_standard_form(std::uint32_t p, std::vector<std::vector<std::uint32_t>> rows) {
  if (!is_prime(p)) throw MatrixError("modulus p=" + std::to_string(p) + " is not prime");
  const std::size_t k = rows.size();
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  RowEchelon e = rref(p, std::move(rows));
  if (e.rows.size() < k) {
    throw MatrixError("rows are linearly dependent (rank " + std::to_string(e.rows.size()) +
                      " < k=" + std::to_string(k) + ")");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (e.pivots[i] != i) {
      std::vector<std::size_t> perm(e.pivots.begin(), e.pivots.end());
      for (std::size_t j = 0; j < n; ++j) {
        if (std::find(e.pivots.begin(), e.pivots.end(), j) == e.pivots.end()) perm.push_back(j);
      }
      std::ostringstream os;
      os << "matrix cannot be brought to standard form by row operations; pivot columns are";
      for (auto c : e.pivots) os << ' ' << c + 1;
      os << "; the column order";
      for (auto c : perm) os << ' ' << c + 1;
      os << " would be needed (this changes the code)";
      throw MatrixError(os.str(), i + 1, e.pivots[i] + 1);
    }
  }
  return GeneratorMatrix(p, std::move(e.rows));
}

MiVector mi_vector(const GeneratorMatrix& G, std::size_t row) {
  if (row >= G.k()) {
    throw UsageError("row index " + std::to_string(row) + " out of range for k=" +
                     std::to_string(G.k()));
  }
  MiVector m;
  m.values.assign(G.n(), 0);
  for (std::size_t j = G.k(); j < G.n(); ++j) {
    m.values[j] = (G.p() - G.entry(row, j)) % G.p();
    if (m.values[j] != 0) m.support.push_back(j);
  }
  return m;
}

namespace {

Monomial exponent_monomial(std::span<const std::uint32_t> values) {
  std::vector<Monomial::Exponent> e(values.begin(), values.end());
  return Monomial(std::span<const Monomial::Exponent>(e));
}

}  // namespace

std::vector<Polynomial> lex_code_basis(const GeneratorMatrix& G) {
  const Ring ring(G.p(), G.n(), OrderKind::Lex);
  std::vector<Polynomial> basis;
  for (std::size_t i = 0; i < G.k(); ++i) {
    const MiVector m = mi_vector(G, i);
    basis.push_back(Polynomial::variable(ring, i) -
                    Polynomial::term(ring, 1, exponent_monomial(m.values)));
  }
  for (std::size_t i = G.k(); i < G.n(); ++i) {
    const auto p = static_cast<Monomial::Exponent>(G.p());
    basis.push_back(Polynomial::term(ring, 1, Monomial::variable(G.n(), i, p)) -
                    Polynomial::constant(ring, 1));
  }
  return basis;
}

std::vector<Polynomial> translated_generators(const GeneratorMatrix& G) {
  std::vector<Polynomial> out;
  for (const auto& f : lex_code_basis(G)) {
    out.push_back(shift_variables(f, f.ring().field().element(1)).in_order(OrderKind::NegDegLex));
  }
  return out;
}

std::vector<Polynomial> closed_form_basis(const GeneratorMatrix& G) {
  const Ring ring(G.p(), G.n(), OrderKind::NegDegLex);
  const std::uint32_t p = G.p();
  std::vector<Polynomial> basis;
  for (std::size_t i = 0; i < G.k(); ++i) {
    const MiVector m = mi_vector(G, i);
    std::vector<Term> terms;
    terms.push_back({ring.field().element(1), Monomial::variable(G.n(), i)});

    // Odometer over (t_1, ..., t_sigma), last index fastest, bounds m_i[j_l].
    std::vector<std::uint32_t> t(m.sigma(), 0);
    std::vector<Monomial::Exponent> exps(G.n(), 0);
    while (true) {
      std::size_t l = m.sigma();
      for (; l > 0; --l) {
        if (t[l - 1] < m.values[m.support[l - 1]]) {
          ++t[l - 1];
          break;
        }
        t[l - 1] = 0;
      }
      if (l == 0) break;  // wrapped back to the all-zero tuple

      FieldElement coeff = ring.field().element(1);
      std::fill(exps.begin(), exps.end(), 0);
      for (std::size_t h = 0; h < m.sigma(); ++h) {
        coeff = coeff * binom_mod_p(m.values[m.support[h]], t[h], p);
        exps[m.support[h]] = static_cast<Monomial::Exponent>(t[h]);
      }
      terms.push_back({-coeff, Monomial(std::span<const Monomial::Exponent>(exps))});
    }
    basis.emplace_back(ring, std::move(terms));
  }
  for (std::size_t i = G.k(); i < G.n(); ++i) {
    basis.push_back(
        Polynomial::term(ring, 1, Monomial::variable(G.n(), i, static_cast<Monomial::Exponent>(p))));
  }
  return basis;
}

std::vector<Polynomial> binary_closed_form_basis(const GeneratorMatrix& G) {
  if (G.p() != 2) throw UsageError("binary closed form requires p = 2");
  const Ring ring(2, G.n(), OrderKind::NegDegLex);
  std::vector<Polynomial> basis;
  for (std::size_t i = 0; i < G.k(); ++i) {
    const MiVector m = mi_vector(G, i);
    std::vector<Term> terms;
    terms.push_back({ring.field().element(1), Monomial::variable(G.n(), i)});
    const std::size_t subsets = std::size_t{1} << m.sigma();
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      std::vector<Monomial::Exponent> exps(G.n(), 0);
      for (std::size_t h = 0; h < m.sigma(); ++h) {
        if (mask >> h & 1u) exps[m.support[h]] = 1;
      }
      terms.push_back({ring.field().element(1), Monomial(std::span<const Monomial::Exponent>(exps))});
    }
    basis.emplace_back(ring, std::move(terms));
  }
  for (std::size_t i = G.k(); i < G.n(); ++i) {
    basis.push_back(Polynomial::term(ring, 1, Monomial::variable(G.n(), i, 2)));
  }
  return basis;
}

MainTheoremReport verify_main_theorem(const GeneratorMatrix& G, std::optional<std::size_t> drop) {
  MainTheoremReport report;
  std::vector<Polynomial> closed = closed_form_basis(G);
  if (drop) {
    if (*drop >= closed.size()) throw UsageError("drop index out of range");
    closed.erase(closed.begin() + static_cast<std::ptrdiff_t>(*drop));
  }
  const std::vector<Polynomial> gens = translated_generators(G);

  report.generation_identity = canonical_set(closed) == canonical_set(gens);
  const StandardBasisCheck check = is_standard_basis(closed, gens);
  report.standard_basis = check.ok;

  std::vector<Monomial> expected;
  for (std::size_t i = 0; i < G.n(); ++i) {
    expected.push_back(Monomial::variable(
        G.n(), i, i < G.k() ? 1 : static_cast<Monomial::Exponent>(G.p())));
  }
  std::vector<Monomial> actual;
  for (const auto& s : closed) actual.push_back(s.leading_monomial());
  const auto by_order = [](const Monomial& a, const Monomial& b) {
    return compare(OrderKind::NegDegLex, a, b) > 0;
  };
  std::sort(expected.begin(), expected.end(), by_order);
  std::sort(actual.begin(), actual.end(), by_order);
  report.leading_terms = actual == expected;

  const auto note = [&report](const std::string& what) {
    report.diagnostic += (report.diagnostic.empty() ? "" : "; ") + what;
  };
  if (!report.generation_identity) {
    note("closed-form basis differs from the expanded translated generators");
  }
  if (!report.standard_basis) note(check.diagnostic);
  if (!report.leading_terms) note("leading-term set is not {X_1..X_k, X_{k+1}^p..X_n^p}");
  return report;
}

GeneratorMatrix random_standard_form(std::uint32_t p, std::size_t k, std::size_t n,
                                     std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> entry(0, p - 1);
  std::vector<std::vector<std::uint32_t>> rows(k, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < k; ++i) {
    rows[i][i] = 1;
    for (std::size_t j = k; j < n; ++j) rows[i][j] = entry(rng);
  }
  return GeneratorMatrix(p, std::move(rows));
}

}  // namespace stdbasis
