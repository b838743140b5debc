#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "stdbasis/cli.hpp"
#include "stdbasis/errors.hpp"

namespace {

using stdbasis::cli::CommandResult;

bool read_file(const std::string& path, std::string& contents) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  contents = ss.str();
  return true;
}

int emit(const CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

int missing_file(const std::string& path) {
  std::cerr << "error: cannot read '" << path << "'\n";
  return stdbasis::cli::kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gröbner and standard bases of binomial code ideals over prime fields"};
  app.require_subcommand(1);

  std::string order_name;
  bool trace = false;
  bool rref = false;
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--order", order_name, "lex | deglex | degrevlex | negdeglex");
    cmd->add_flag("--trace", trace, "Print reduction steps to stderr");
  };

  std::string matrix_file;

  auto* groebner = app.add_subcommand("groebner", "Reduced Gröbner basis of the code ideal");
  groebner->add_option("matrix", matrix_file, "Generator matrix file")->required();
  groebner->add_flag("--rref", rref, "Row-reduce the matrix into standard form first");
  add_common(groebner);

  std::string method = "closed-form";
  bool tail = false;
  auto* sb = app.add_subcommand("standard-basis",
                                "Standard basis of the translated code ideal (negdeglex)");
  sb->add_option("matrix", matrix_file, "Generator matrix file")->required();
  sb->add_option("--method", method, "closed-form | mora")
      ->check(CLI::IsMember({"closed-form", "mora"}));
  sb->add_flag("--tail-reduce", tail, "Tail-reduce the computed basis for display (mora)");
  sb->add_flag("--rref", rref, "Row-reduce the matrix into standard form first");
  add_common(sb);

  stdbasis::cli::VerifyOptions verify_opts;
  std::size_t inject_drop = 0;
  std::uint32_t rp = 0;
  std::size_t rk = 0, rn = 0;
  auto* verify = app.add_subcommand("verify", "Check the closed-form standard basis");
  verify->add_option("matrix", matrix_file, "Generator matrix file");
  verify->add_option("--inject-drop", inject_drop,
                     "Drop basis element I (1-based) before checking; negative control");
  verify->add_option("--random", verify_opts.random, "Check N random standard-form matrices");
  verify->add_option("--p", rp, "Prime for --random (default: drawn from 2, 3, 5)");
  verify->add_option("--k", rk, "Dimension for --random");
  verify->add_option("--n", rn, "Length for --random");
  verify->add_option("--seed", verify_opts.seed, "Seed for --random");
  verify->add_option("--jobs", verify_opts.jobs, "Worker threads for --random (0: all cores)");
  verify->add_flag("--rref", rref, "Row-reduce the matrix into standard form first");
  add_common(verify);

  std::string poly;
  std::string basis_file;
  auto* nf = app.add_subcommand("nf", "Remainder or weak normal form modulo a basis file");
  nf->add_option("poly", poly, "Polynomial, e.g. \"X1X2+2X3^2\"")->required();
  nf->add_option("basis", basis_file, "Basis file (p=, n= header, one polynomial per line)")
      ->required();
  add_common(nf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return stdbasis::cli::kInputError;
  }

  stdbasis::cli::CommonOptions common;
  common.trace = trace;
  common.rref = rref;
  if (!order_name.empty()) {
    try {
      common.order = stdbasis::parse_order(order_name);
    } catch (const stdbasis::UsageError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return stdbasis::cli::kInputError;
    }
  }

  std::string text;
  if (*groebner) {
    if (!read_file(matrix_file, text)) return missing_file(matrix_file);
    return emit(stdbasis::cli::cmd_groebner(text, common));
  }
  if (*sb) {
    stdbasis::cli::StandardBasisOptions o;
    static_cast<stdbasis::cli::CommonOptions&>(o) = common;
    o.method = method == "mora" ? stdbasis::cli::StandardBasisMethod::Mora
                                : stdbasis::cli::StandardBasisMethod::ClosedForm;
    o.tail_reduce = tail;
    if (!read_file(matrix_file, text)) return missing_file(matrix_file);
    return emit(stdbasis::cli::cmd_standard_basis(text, o));
  }
  if (*verify) {
    static_cast<stdbasis::cli::CommonOptions&>(verify_opts) = common;
    if (inject_drop) verify_opts.inject_drop = inject_drop;
    if (rp) verify_opts.p = rp;
    if (rk) verify_opts.k = rk;
    if (rn) verify_opts.n = rn;
    if (verify_opts.random == 0) {
      if (matrix_file.empty()) {
        std::cerr << "error: verify needs a matrix file or --random N\n";
        return stdbasis::cli::kInputError;
      }
      if (!read_file(matrix_file, text)) return missing_file(matrix_file);
    }
    return emit(stdbasis::cli::cmd_verify(text, verify_opts));
  }
  if (!read_file(basis_file, text)) return missing_file(basis_file);
  return emit(stdbasis::cli::cmd_nf(poly, text, common));
}
