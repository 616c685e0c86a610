// Command-line front end: validates algebra/bracket files, decides the double
// (quasi-)Poisson property, verifies the Stasheff identities of the induced
// structure on A + A^#[-1], and checks the combinatorial coefficient
// identities. Exit codes: 0 all checks pass, 1 malformed input, 2 violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dqp/algebra_file.hpp"
#include "dqp/bernoulli_identities.hpp"
#include "dqp/bundled.hpp"
#include "dqp/report.hpp"
#include "dqp/stasheff.hpp"

namespace {

using namespace dqp;

struct InputArgs {
  std::string path;
  std::string bundled;
  std::optional<std::string> tau_override;
  std::string out;
};

void add_input_flags(CLI::App* cmd, InputArgs& args, bool with_tau = true) {
  auto* pos = cmd->add_option("file", args.path, "algebra/bracket JSON file");
  auto* bun = cmd->add_option("--bundled", args.bundled, "bundled example: qp2, qp3 or dp3");
  pos->excludes(bun);
  if (with_tau)
    cmd->add_option("--tau", args.tau_override,
                    "override the file's tau (exact \"p/q\"); marked in the report");
  cmd->add_option("--out", args.out, "write the JSON report to this file instead of stdout");
}

AlgebraInput load_input(const InputArgs& args, RunReport& report) {
  AlgebraInput input = [&] {
    if (!args.bundled.empty()) {
      AlgebraInput in = make_bundled(args.bundled);
      report.input_path = "bundled:" + args.bundled;
      report.input_digest = content_digest(serialize_algebra(in));
      return in;
    }
    if (args.path.empty()) throw ParseError("no input: give a file or --bundled NAME");
    std::ifstream f(args.path, std::ios::binary);
    if (!f) throw ParseError(args.path + ": cannot open file");
    std::ostringstream buf;
    buf << f.rdbuf();
    report.input_path = args.path;
    report.input_digest = content_digest(buf.str());
    return parse_algebra_json(buf.str(), args.path);
  }();
  if (args.tau_override) {
    input.bracket = input.bracket.with_tau(parse_rational(*args.tau_override));
    report.tau_overridden = true;
  }
  report.input_name = input.name;
  report.tau = rational_str(input.bracket.tau());
  return input;
}

int emit(const RunReport& report, const std::string& out_path) {
  const std::string text = report.to_json();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    f << text;
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
    // one human line so batch runs stay readable
    std::cerr << report.command << ": " << (report.all_passed() ? "pass" : "FAIL")
              << " (report: " << out_path << ")\n";
  }
  return report.exit_code();
}

CheckStatus from_validation(const ValidationReport& v) {
  CheckStatus s{"algebra", v.ok(), v.checked, {}, 0};
  for (const auto& d : v.defects) {
    if (s.witnesses.size() >= 8) break;
    s.witnesses.push_back(d.detail);
  }
  return s;
}

CheckStatus from_bracket(const std::string& name, const BracketReport& r) {
  CheckStatus s{name, r.ok(), r.checked, {}, 0};
  for (const auto& d : r.defects) {
    if (s.witnesses.size() >= 8) break;
    std::string where = "(";
    for (std::size_t i = 0; i < d.where.size(); ++i)
      where += (i ? "," : "") + std::to_string(d.where[i]);
    where += ")";
    s.witnesses.push_back(d.check + " at basis " + where + ": " + d.lhs + " != " + d.rhs);
  }
  return s;
}

bool run_validation_stage(const AlgebraInput& input, RunReport& report) {
  CheckStatus alg = from_validation(input.algebra.validate());
  report.add(alg);
  CheckStatus db1 = from_bracket("db1", input.bracket.check_db1());
  CheckStatus db2 = from_bracket("db2", input.bracket.check_db2());
  report.add(db1);
  report.add(db2);
  return alg.passed && db1.passed && db2.passed;
}

CheckStatus from_grid(const IdentityGridReport& g) {
  return {g.name, g.ok(), g.checked, g.violations, g.elapsed_seconds};
}

CheckStatus from_check(const CheckReport& c) {
  return {c.name, c.ok(), c.checked, c.violations, c.elapsed_seconds};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for double (quasi-)Poisson brackets and the induced "
               "A-infinity structure on A + A^#[-1]"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  // ---- validate ----
  InputArgs val_args;
  auto* cmd_validate = app.add_subcommand("validate", "check associativity, unit, skew and Leibniz");
  add_input_flags(cmd_validate, val_args, false);

  // ---- check ----
  InputArgs chk_args;
  std::string chk_mode = "quasi";
  auto* cmd_check = app.add_subcommand("check", "decide the double (quasi-)Poisson property");
  add_input_flags(cmd_check, chk_args);
  cmd_check->add_option("--mode", chk_mode, "poisson or quasi")
      ->check(CLI::IsMember({"poisson", "quasi"}));

  // ---- stasheff ----
  InputArgs st_args;
  int st_max_n = 7;
  std::string st_mode = "auto";
  int st_samples = 1000;
  std::uint64_t st_seed = 0;
  int st_jobs = 0;
  auto* cmd_stasheff =
      app.add_subcommand("stasheff", "build the structure and verify the Stasheff identities, "
                                     "cyclicity and the structure conditions");
  add_input_flags(cmd_stasheff, st_args);
  cmd_stasheff->add_option("--max-n", st_max_n, "check SI(N) for N <= max-n")->check(CLI::Range(1, 16));
  cmd_stasheff->add_option("--mode", st_mode, "exhaustive, sampled or auto (budget heuristic)")
      ->check(CLI::IsMember({"exhaustive", "sampled", "auto"}));
  cmd_stasheff->add_option("--samples", st_samples, "tuples per N in sampled mode");
  cmd_stasheff->add_option("--seed", st_seed, "seed for sampled tuples");
  cmd_stasheff->add_option("--jobs", st_jobs, "parallel workers (default: DQP_JOBS or all cores)");

  // ---- identities ----
  long id_max_n = 24, id_max_k = 12, id_maincomp_k = 8, id_ide_k = 8;
  int id_trials = 100;
  std::uint64_t id_seed = 0;
  bool id_corrupt = false;
  std::string id_out;
  auto* cmd_identities = app.add_subcommand(
      "identities", "verify the coefficient identities behind the odd Stasheff identities");
  cmd_identities->add_option("--max-even-n", id_max_n, "triple-sum identity grid bound (even)");
  cmd_identities->add_option("--bcm-max-k", id_max_k, "Bernoulli-identity family grid bound");
  cmd_identities->add_option("--maincomp-max-k", id_maincomp_k, "recombination grid bound");
  cmd_identities->add_option("--ide-max-k", id_ide_k, "linear-combination identity bound");
  cmd_identities->add_option("--generalized-trials", id_trials,
                             "random weight sequences for the coefficient-level checks");
  cmd_identities->add_option("--seed", id_seed, "seed for random weight sequences");
  cmd_identities->add_flag("--corrupt-c", id_corrupt,
                           "test hook: perturb C_{1,2} and expect failures");
  cmd_identities->add_option("--out", id_out, "write the JSON report to this file");

  // ---- cij ----
  long cij_max = 9;
  std::string cij_tau = "1";
  auto* cmd_cij = app.add_subcommand("cij", "print the coefficient table C_{i,j}");
  cmd_cij->add_option("--max", cij_max, "print all C_{i,j} with i+j <= max");
  cmd_cij->add_option("--tau", cij_tau, "parameter tau as exact \"p/q\"");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_validate) {
      RunReport report;
      report.command = "validate";
      AlgebraInput input = load_input(val_args, report);
      run_validation_stage(input, report);
      return emit(report, val_args.out);
    }

    if (*cmd_check) {
      RunReport report;
      report.command = "check";
      AlgebraInput input = load_input(chk_args, report);
      if (run_validation_stage(input, report)) {
        if (chk_mode == "poisson")
          report.add(from_bracket("double_poisson", input.bracket.is_double_poisson()));
        else
          report.add(from_bracket("quasi_poisson", input.bracket.is_quasi_poisson()));
      }
      return emit(report, chk_args.out);
    }

    if (*cmd_stasheff) {
      RunReport report;
      report.command = "stasheff";
      AlgebraInput input = load_input(st_args, report);
      // negatives are deliberately allowed past this point: a bracket that is
      // skew + Leibniz but not quasi-Poisson is exactly the SI(5) control
      if (run_validation_stage(input, report)) {
        AInftyStructure st(input.bracket, st_max_n + 1);
        SIOptions opts;
        opts.n_max = st_max_n;
        if (st_mode == "exhaustive") opts.mode = SIMode::Exhaustive;
        if (st_mode == "sampled") opts.mode = SIMode::Sampled;
        opts.samples = st_samples;
        opts.seed = st_seed;
        opts.jobs = st_jobs;
        report.seed = st_seed;
        for (const auto& rep : verify_si(st, opts)) {
          CheckStatus s{"si_" + std::to_string(rep.N), rep.ok(), rep.tuples_checked, {},
                        rep.elapsed_seconds};
          s.name += rep.mode == SIMode::Exhaustive ? "_exhaustive" : "_sampled";
          for (const auto& v : rep.violations) {
            if (s.witnesses.size() >= 8) break;
            s.witnesses.push_back(format_tuple(st.algebra(), v.tuple) + " -> " +
                                  rational_str(v.value));
          }
          report.add(std::move(s));
        }
        report.add(from_check(verify_cyclicity(st, std::min(st_max_n, 8))));
        report.add(from_check(verify_cyclic_reduction(st, std::min(st_max_n, 6), 32, st_seed)));
        report.add(from_check(verify_pcy(st, std::min(st_max_n, 8))));
      }
      return emit(report, st_args.out);
    }

    if (*cmd_identities) {
      RunReport report;
      report.command = "identities";
      report.seed = id_seed;
      if (id_corrupt) {
        auto rep = run_cgen_grid_corrupted(id_max_n);
        CheckStatus s = from_grid(rep);
        s.name = "cgen_corrupted_control";
        report.add(std::move(s));
      } else {
        report.add(from_grid(run_cgen_grid(id_max_n, Rational(1))));
        report.add(from_grid(run_bcm_grid(id_max_k)));
        report.add(from_grid(run_maincomp_grid(id_maincomp_k)));
        report.add(from_grid(run_ide_trials(id_ide_k, id_trials, id_seed)));
      }
      return emit(report, id_out);
    }

    if (*cmd_cij) {
      const Rational tau = parse_rational(cij_tau);
      std::cout << "# C_{i,j} with i+j <= " << cij_max << ", tau = " << rational_str(tau) << "\n";
      for (long i = 1; i < cij_max; ++i)
        for (long j = i; i + j <= cij_max; ++j) {
          if ((i + j) % 2 == 0) continue;
          const Rational c = c_coeff(i, j, tau);
          std::cout << "C[" << i << "," << j << "] = " << rational_str(c);
          if (i != j) std::cout << "   (= C[" << j << "," << i << "])";
          std::cout << "\n";
        }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
