#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stdbasis/poly.hpp"

namespace stdbasis {

// Raised when a matrix is well-formed text but not a valid generator matrix
// in standard form. Row and column are 1-based; 0 when not applicable.
class MatrixError : public std::runtime_error {
 public:
  MatrixError(const std::string& what, std::size_t row = 0, std::size_t column = 0);
  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

// A k x n generator matrix (I_k | M) over F_p. Entries are residues in
// [0, p). Rows and columns are 0-based in this API.
class GeneratorMatrix {
 public:
  // Validates primality, dimensions, entry ranges and the identity block.
  GeneratorMatrix(std::uint32_t p, std::vector<std::vector<std::uint32_t>> rows);

  std::uint32_t p() const noexcept { return p_; }
  std::size_t k() const noexcept { return rows_.size(); }
  std::size_t n() const noexcept { return n_; }
  std::uint32_t entry(std::size_t row, std::size_t column) const {
    return rows_.at(row).at(column);
  }
  const std::vector<std::vector<std::uint32_t>>& rows() const noexcept { return rows_; }

  // message * G over F_p; `message` has length k.
  std::vector<std::uint32_t> encode(std::span<const std::uint32_t> message) const;

  friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

 private:
  std::uint32_t p_;
  std::size_t n_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

// Unvalidated contents of a matrix file.
struct MatrixText {
  std::uint32_t p;
  std::size_t k;
  std::size_t n;
  std::vector<std::vector<std::uint32_t>> rows;
};

// Matrix wire format:
//   p=<prime>
//   k=<int> n=<int>
//   k lines of n space-separated integers in [0, p)
// '#' starts a comment; blank lines are ignored. Syntax errors throw
// ParseError, semantic ones MatrixError.
MatrixText parse_matrix_text(std::string_view text);
GeneratorMatrix parse_matrix(std::string_view text);
std::string format_matrix(const GeneratorMatrix& G);

// Row reduction over F_p.
struct RowEchelon {
  std::vector<std::vector<std::uint32_t>> rows;  // nonzero rows of the RREF
  std::vector<std::size_t> pivots;               // pivot column of each row
};

RowEchelon rref(std::uint32_t p, std::vector<std::vector<std::uint32_t>> rows);

// Brings a full-rank matrix into standard form by row operations only. If
// the pivots are not the leading columns, throws MatrixError naming the
// column permutation that would be needed (columns are never permuted here,
// since that changes the code).
GeneratorMatrix to_standard_form(std::uint32_t p, std::vector<std::vector<std::uint32_t>> rows);

// m_i = (0, ..., 0, p - g_{i,k+1}, ..., p - g_{i,n}) reduced mod p.
struct MiVector {
  std::vector<std::uint32_t> values;
  std::vector<std::size_t> support;  // 0-based columns with nonzero value
  std::size_t sigma() const noexcept { return support.size(); }
};

MiVector mi_vector(const GeneratorMatrix& G, std::size_t row);

// {X_i - X^{m_i} : i <= k} u {X_i^p - 1 : i > k} under Lex.
std::vector<Polynomial> lex_code_basis(const GeneratorMatrix& G);

// lex_code_basis with X_i -> X_i + 1 substituted and fully expanded, under
// NegDegLex. Same element order.
std::vector<Polynomial> translated_generators(const GeneratorMatrix& G);

// For each row i: X_i - sum over nonzero tuples t <= (p - g_{i,j}) of
// prod binom(p - g_{i,j_h}, t_h) X_{j_h}^{t_h}; then X_i^p for i > k.
// NegDegLex.
std::vector<Polynomial> closed_form_basis(const GeneratorMatrix& G);

// {X_i - sum_{J subset of supp(m_i), J nonempty} X_J} u {X_i^2}, built
// directly from subsets. Requires p = 2.
std::vector<Polynomial> binary_closed_form_basis(const GeneratorMatrix& G);

struct MainTheoremReport {
  bool generation_identity = false;  // closed form == translated generators
  bool standard_basis = false;       // criterion check passes
  bool leading_terms = false;        // lt set is {X_1..X_k, X_{k+1}^p..X_n^p}
  std::string diagnostic;            // first failure, empty when all pass

  bool all() const noexcept { return generation_identity && standard_basis && leading_terms; }
};

// `drop` removes one element (0-based) from the closed-form basis before
// checking, as a negative control.
MainTheoremReport verify_main_theorem(const GeneratorMatrix& G,
                                      std::optional<std::size_t> drop = std::nullopt);

GeneratorMatrix random_standard_form(std::uint32_t p, std::size_t k, std::size_t n,
                                     std::mt19937_64& rng);

}  // namespace stdbasis
