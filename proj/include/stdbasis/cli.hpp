#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "stdbasis/monomial.hpp"

namespace stdbasis::cli {

// Exit codes shared by every command.
inline constexpr int kSuccess = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInputError = 2;

struct CommandResult {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

struct CommonOptions {
  std::optional<OrderKind> order;  // per-command default when unset
  bool trace = false;              // reduction steps to `err`
  bool rref = false;               // row-reduce the matrix into standard form first
};

enum class StandardBasisMethod { ClosedForm, Mora };

struct StandardBasisOptions : CommonOptions {
  StandardBasisMethod method = StandardBasisMethod::ClosedForm;
  bool tail_reduce = false;
};

struct VerifyOptions : CommonOptions {
  std::optional<std::size_t> inject_drop;  // 1-based element index
  std::size_t random = 0;                  // >0: check random matrices instead
  std::optional<std::uint32_t> p;
  std::optional<std::size_t> k;
  std::optional<std::size_t> n;
  std::uint64_t seed = 1;
  std::size_t jobs = 0;  // 0: hardware concurrency
};

// Reduced Gröbner basis of the code ideal, one polynomial per line.
CommandResult cmd_groebner(std::string_view matrix_text, const CommonOptions& options);

// Standard basis of the translated code ideal under NegDegLex.
CommandResult cmd_standard_basis(std::string_view matrix_text,
                                 const StandardBasisOptions& options);

// Three-part check of the closed-form standard basis. With options.random
// set, matrix_text is ignored.
CommandResult cmd_verify(std::string_view matrix_text, const VerifyOptions& options);

// Remainder (global order) or weak normal form with unit (local order) of
// `poly` modulo the basis file:
//   p=<prime>
//   n=<int>
//   one polynomial per line
CommandResult cmd_nf(std::string_view poly, std::string_view basis_text,
                     const CommonOptions& options);

}  // namespace stdbasis::cli
