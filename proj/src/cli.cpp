#include "stdbasis/cli.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "stdbasis/buchberger.hpp"
#include "stdbasis/code_ideal.hpp"
#include "stdbasis/division.hpp"
#include "stdbasis/errors.hpp"
#include "stdbasis/expr_parser.hpp"
#include "stdbasis/mora.hpp"

namespace stdbasis::cli {

namespace {

CommandResult input_error(const std::string& what) {
  return {kInputError, "", "error: " + what + "\n"};
}

GeneratorMatrix load_matrix(std::string_view text, bool rref) {
  if (!rref) return parse_matrix(text);
  MatrixText raw = parse_matrix_text(text);
  if (raw.k > raw.n) {
    throw MatrixError("k=" + std::to_string(raw.k) + " exceeds n=" + std::to_string(raw.n));
  }
  return to_standard_form(raw.p, std::move(raw.rows));
}

void print_lines(std::ostream& os, const std::vector<Polynomial>& polys) {
  for (const auto& f : polys) os << print_poly(f) << '\n';
}

PairTrace pair_tracer(std::ostream& err, bool enabled) {
  if (!enabled) return {};
  return [&err](const PairEvent& e) {
    err << "pair (" << e.i + 1 << "," << e.j + 1 << "): ";
    if (e.skipped_by_product_criterion) {
      err << "skipped, coprime leading monomials\n";
    } else if (!e.added) {
      err << "reduces to 0\n";
    } else {
      err << "new element " << print_poly(e.reduced) << '\n';
    }
  };
}

MoraTrace mora_tracer(std::ostream& err, bool enabled) {
  if (!enabled) return {};
  return [&err](const MoraStep& s) {
    if (s.kind == MoraStep::Kind::AppendToReducers) {
      err << "append h=" << print_poly(s.h) << " to L (ecart " << s.divisor_ecart << " > "
          << s.h_ecart << "), |L|=" << s.reducers << '\n';
    } else {
      err << "reduce h=" << print_poly(s.h) << " by " << print_poly(s.divisor) << '\n';
    }
  };
}

template <class Fn>
CommandResult guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return input_error(e.what());
  } catch (const MatrixError& e) {
    return input_error(e.what());
  } catch (const UsageError& e) {
    return input_error(e.what());
  }
}

}  // namespace

CommandResult cmd_groebner(std::string_view matrix_text, const CommonOptions& options) {
  return guarded([&] {
    const OrderKind order = options.order.value_or(OrderKind::Lex);
    if (is_local(order)) {
      return input_error("groebner needs a global order; use standard-basis for negdeglex");
    }
    const GeneratorMatrix G = load_matrix(matrix_text, options.rref);
    std::vector<Polynomial> gens;
    for (const auto& f : lex_code_basis(G)) gens.push_back(f.in_order(order));
    std::ostringstream err;
    const auto basis = reduce_basis(groebner(gens, pair_tracer(err, options.trace)));
    std::ostringstream out;
    print_lines(out, basis);
    return CommandResult{kSuccess, out.str(), err.str()};
  });
}

CommandResult cmd_standard_basis(std::string_view matrix_text,
                                 const StandardBasisOptions& options) {
  return guarded([&] {
    if (options.order && *options.order != OrderKind::NegDegLex) {
      return input_error("standard-basis is defined for the local order negdeglex only");
    }
    const GeneratorMatrix G = load_matrix(matrix_text, options.rref);
    std::ostringstream out;
    std::ostringstream err;
    if (options.method == StandardBasisMethod::ClosedForm) {
      print_lines(out, closed_form_basis(G));
    } else {
      const auto gens = translated_generators(G);
      std::vector<Polynomial> basis = standard_basis(gens, pair_tracer(err, options.trace));
      if (options.tail_reduce) {
        std::int64_t bound = 0;
        for (const auto& g : gens) bound = std::max(bound, g.degree());
        for (std::size_t i = 0; i < basis.size(); ++i) {
          std::vector<Polynomial> others;
          for (std::size_t j = 0; j < basis.size(); ++j) {
            if (j != i) others.push_back(basis[j]);
          }
          basis[i] = tail_reduce(basis[i], others, bound);
        }
      }
      print_lines(out, basis);
    }
    return CommandResult{kSuccess, out.str(), err.str()};
  });
}

namespace {

std::string report_text(const MainTheoremReport& r) {
  const auto mark = [](bool ok) { return ok ? "pass" : "FAIL"; };
  std::ostringstream os;
  os << "generation identity: " << mark(r.generation_identity) << '\n'
     << "standard basis criterion: " << mark(r.standard_basis) << '\n'
     << "leading terms: " << mark(r.leading_terms) << '\n';
  return os.str();
}

GeneratorMatrix random_instance(const VerifyOptions& o, std::mt19937_64& rng) {
  static constexpr std::uint32_t kPrimes[] = {2, 3, 5};
  const std::uint32_t p = o.p.value_or(kPrimes[rng() % 3]);
  const std::size_t n = o.n.value_or(1 + rng() % 6);
  const std::size_t k = o.k.value_or(1 + rng() % std::min<std::size_t>(n, 3));
  if (k == 0 || k > n) throw UsageError("random instances need 1 <= k <= n");
  return random_standard_form(p, k, n, rng);
}

}  // namespace

CommandResult cmd_verify(std::string_view matrix_text, const VerifyOptions& options) {
  return guarded([&] {
    if (options.order && *options.order != OrderKind::NegDegLex) {
      return input_error("verify is defined for the local order negdeglex only");
    }
    std::optional<std::size_t> drop;
    if (options.inject_drop) {
      if (*options.inject_drop == 0) return input_error("--inject-drop is 1-based");
      drop = *options.inject_drop - 1;
    }

    if (options.random == 0) {
      const GeneratorMatrix G = load_matrix(matrix_text, options.rref);
      if (drop && *drop >= G.n()) return input_error("--inject-drop index exceeds n");
      const MainTheoremReport r = verify_main_theorem(G, drop);
      CommandResult res{r.all() ? kSuccess : kVerificationFailed, report_text(r), ""};
      if (!r.all()) res.err = "counterexample: " + r.diagnostic + "\n";
      return res;
    }

    std::mt19937_64 rng(options.seed);
    std::vector<GeneratorMatrix> instances;
    for (std::size_t i = 0; i < options.random; ++i) instances.push_back(random_instance(options, rng));

    std::vector<MainTheoremReport> reports(instances.size());
    std::size_t jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min(jobs, instances.size());
    std::vector<std::future<void>> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < instances.size(); i += jobs) {
          const auto d = drop && *drop < instances[i].n() ? drop : std::nullopt;
          reports[i] = verify_main_theorem(instances[i], d);
        }
      }));
    }
    for (auto& f : workers) f.get();

    std::ostringstream out;
    const auto passed = static_cast<std::size_t>(std::count_if(
        reports.begin(), reports.end(), [](const MainTheoremReport& r) { return r.all(); }));
    const auto first_fail = std::find_if(reports.begin(), reports.end(),
                                         [](const MainTheoremReport& r) { return !r.all(); });
    out << passed << "/" << reports.size() << " instances verified\n";
    if (first_fail == reports.end()) return CommandResult{kSuccess, out.str(), ""};
    const std::size_t idx = static_cast<std::size_t>(first_fail - reports.begin());
    out << "first failing instance (#" << idx + 1 << "):\n"
        << format_matrix(instances[idx]) << report_text(*first_fail);
    return CommandResult{kVerificationFailed, out.str(),
                         "counterexample: " + first_fail->diagnostic + "\n"};
  });
}

namespace {

struct BasisFile {
  Ring ring;
  std::vector<Polynomial> polys;
};

// p=<prime>, n=<int>, then one polynomial per line. The header is parsed
// with the matrix-file cursor rules: '#' comments, blank lines skipped.
BasisFile parse_basis_file(std::string_view text, OrderKind order) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.emplace_back(no, line);
  }
  const auto header = [&](std::size_t idx, char key) -> std::uint64_t {
    if (idx >= lines.size()) throw ParseError(std::string("missing '") + key + "=' line", no, 1);
    std::string s = lines[idx].second;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.size() < 3 || s[0] != key || s[1] != '=' ||
        s.find_first_not_of("0123456789", 2) != std::string::npos || s.size() > 12) {
      throw ParseError(std::string("expected '") + key + "=<int>'", lines[idx].first, 1);
    }
    return std::stoull(s.substr(2));
  };
  const auto p = header(0, 'p');
  const auto n = header(1, 'n');
  if (p > 0xFFFFFFFFull) throw UsageError("modulus too large");
  BasisFile file{Ring(static_cast<std::uint32_t>(p), n, order), {}};
  for (std::size_t i = 2; i < lines.size(); ++i) {
    try {
      file.polys.push_back(parse_poly(lines[i].second, file.ring));
    } catch (const ParseError& e) {
      throw ParseError("in basis polynomial", lines[i].first, e.column());
    }
  }
  return file;
}

}  // namespace

CommandResult cmd_nf(std::string_view poly, std::string_view basis_text,
                     const CommonOptions& options) {
  return guarded([&] {
    const OrderKind order = options.order.value_or(OrderKind::Lex);
    BasisFile basis = parse_basis_file(basis_text, order);
    const Polynomial f = parse_poly(poly, basis.ring);
    std::vector<Polynomial> divisors;
    for (auto& g : basis.polys) {
      if (!g.is_zero()) divisors.push_back(std::move(g));
    }
    std::ostringstream out;
    std::ostringstream err;
    if (is_local(order)) {
      const auto r = weak_normal_form(f, divisors, mora_tracer(err, options.trace));
      out << "NF: " << print_poly(r.h) << "\nunit: " << print_poly(r.unit) << '\n';
    } else {
      const auto r = divide(f, divisors);
      out << print_poly(r.remainder) << '\n';
    }
    return CommandResult{kSuccess, out.str(), err.str()};
  });
}

}  // namespace stdbasis::cli
