// Copyright 2026 The tripent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tripent: generate three-qubit states, compute their two-qubit reductions and
// run the six-way PPT entanglement test. Talks to the library only through
// the C interface.
//
// Exit codes: check -> 0 entangled, 1 inconclusive; verify -> 0 all pass,
// 1 some check failed; 2 usage error; 3 invalid input matrix; 4 other error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tripent/tripent.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInvalidInput = 3;
constexpr int kExitOther = 4;

struct MatrixDeleter {
  void operator()(tripent_matrix* m) const { tripent_matrix_free(m); }
};
struct ReportDeleter {
  void operator()(tripent_report* r) const { tripent_report_free(r); }
};
struct SuiteDeleter {
  void operator()(tripent_suite* s) const { tripent_suite_free(s); }
};
struct StringDeleter {
  void operator()(char* s) const { tripent_string_free(s); }
};
using MatrixPtr = std::unique_ptr<tripent_matrix, MatrixDeleter>;
using ReportPtr = std::unique_ptr<tripent_report, ReportDeleter>;
using SuitePtr = std::unique_ptr<tripent_suite, SuiteDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Carries an exit code out of a subcommand.
struct Exit {
  int code;
};

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "tripent: " << msg << '\n';
  throw Exit{code};
}

int exit_code_for(tripent_status s) {
  switch (s) {
    case TRIPENT_ERR_INVALID_ARGUMENT:
    case TRIPENT_ERR_PARAM_OUT_OF_RANGE:
    case TRIPENT_ERR_INVALID_SLOT:
      return kExitUsage;
    case TRIPENT_ERR_INVALID_INPUT:
    case TRIPENT_ERR_NON_HERMITIAN:
    case TRIPENT_ERR_NOT_NORMALIZED:
    case TRIPENT_ERR_PARSE:
      return kExitInvalidInput;
    default:
      return kExitOther;
  }
}

void require_ok(tripent_status s, const std::string& context) {
  if (s == TRIPENT_OK) return;
  std::string msg = context + ": " + tripent_status_string(s);
  const std::string detail = tripent_last_error();
  if (!detail.empty()) msg += " (" + detail + ")";
  die(exit_code_for(s), msg);
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) die(kExitInvalidInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MatrixPtr read_matrix(const std::string& path, int expected_dim) {
  tripent_matrix* raw = nullptr;
  require_ok(tripent_matrix_from_json(read_text(path).c_str(), &raw),
             "reading '" + path + "'");
  MatrixPtr m(raw);
  if (tripent_matrix_dim(m.get()) != expected_dim)
    die(kExitInvalidInput, "'" + path + "' must hold a " +
                               std::to_string(expected_dim) + "x" +
                               std::to_string(expected_dim) + " matrix");
  return m;
}

void write_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) die(kExitOther, "cannot write '" + out_path + "'");
  out << text;
}

void write_matrix(const tripent_matrix* m, const std::string& label,
                  const std::string& out_path) {
  char* raw = nullptr;
  require_ok(tripent_matrix_to_json(m, label.c_str(), &raw), "serialising");
  StringPtr text(raw);
  write_text(text.get(), out_path);
}

struct GenOptions {
  std::string out;
  double x = 0.0;
  int slot = 0;
  std::string input;
  double p_ab = 0.0, p_bc = 0.0, p_ac = 0.0;
  std::uint64_t seed = 0;
  int k = 1;
};

std::string format_eigenvalue(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "% .12e", v);
  return buf;
}

int run_check(const std::string& input, double tol, bool as_json) {
  const MatrixPtr rho = read_matrix(input, 8);
  tripent_report* raw = nullptr;
  require_ok(tripent_check(rho.get(), tol, &raw), "checking '" + input + "'");
  const ReportPtr report(raw);

  const bool entangled =
      tripent_report_verdict(report.get()) == TRIPENT_VERDICT_ENTANGLED;
  if (as_json) {
    char* json = nullptr;
    require_ok(tripent_report_to_json(report.get(), &json), "report");
    const StringPtr text(json);
    std::cout << text.get();
  } else {
    std::cout << "kind   min PT eigenvalue     witness\n";
    std::string witnesses;
    for (int k = 0; k < TRIPENT_KIND_COUNT; ++k) {
      const auto kind = static_cast<tripent_kind>(k);
      double lambda = 0.0;
      require_ok(tripent_report_min_pt_eigenvalue(report.get(), kind, &lambda),
                 "report");
      const bool w = tripent_report_is_witness(report.get(), kind) != 0;
      char line[96];
      std::snprintf(line, sizeof line, "%-6s %-21s %s\n", tripent_kind_name(kind),
                    format_eigenvalue(lambda).c_str(), w ? "*" : "");
      std::cout << line;
      if (w) witnesses += std::string(witnesses.empty() ? "" : ",") + tripent_kind_name(kind);
    }
    if (entangled)
      std::cout << "ENTANGLED (witnesses: " << witnesses << ")\n";
    else
      std::cout << "INCONCLUSIVE\n";
  }
  return entangled ? 0 : 1;
}

int run_verify(std::uint64_t seeds, bool as_json) {
  tripent_suite* raw = nullptr;
  require_ok(tripent_verify(seeds, &raw), "verify");
  const SuitePtr suite(raw);
  const std::size_t total = tripent_suite_size(suite.get());
  const std::size_t failed = tripent_suite_failed(suite.get());

  if (as_json) {
    char* json = nullptr;
    require_ok(tripent_suite_to_json(suite.get(), &json), "verify");
    const StringPtr text(json);
    std::cout << text.get();
  } else {
    for (std::size_t i = 0; i < total; ++i) {
      const char* name = nullptr;
      const char* summary = nullptr;
      int passed = 0;
      require_ok(tripent_suite_check(suite.get(), i, &name, &passed, &summary),
                 "verify");
      std::cout << (passed ? "PASS " : "FAIL ") << name << "  " << summary << '\n';
    }
    std::cout << (total - failed) << "/" << total << " checks passed\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-qubit entanglement detection by PPT tests on six "
               "two-qubit reductions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tripent_version()));

  // gen
  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a three-qubit state as a matrix file");
  gen_cmd->require_subcommand(1);
  gen_cmd->add_option("-o,--out", gen.out, "Output path (default stdout)");
  gen_cmd->fallthrough();  // `gen ghz -o f` as well as `gen -o f ghz`

  auto* ghz_cmd = gen_cmd->add_subcommand("ghz", "(|000> + |111>)/sqrt2");
  auto* werner_cmd = gen_cmd->add_subcommand("werner", "Werner state embedded in A|BC");
  werner_cmd->add_option("--x", gen.x, "Singlet weight in [0, 1]")->required();
  auto* embed_cmd = gen_cmd->add_subcommand("embed", "Embed a two-qubit state");
  embed_cmd->add_option("--slot", gen.slot,
                        "1 a-bc, 2 b-ca, 3 c-ab, 4 ab, 5 ac, 6 bc")
      ->required()
      ->check(CLI::Range(1, 6));
  embed_cmd->add_option("--input", gen.input, "4x4 matrix file ('-' for stdin)")
      ->required();
  auto* molecule_cmd =
      gen_cmd->add_subcommand("molecule", "Mixture of pair states with the third qubit in |0>");
  molecule_cmd->add_option("--p-ab", gen.p_ab)->required();
  molecule_cmd->add_option("--p-bc", gen.p_bc)->required();
  molecule_cmd->add_option("--p-ac", gen.p_ac)->required();
  auto* upb_cmd = gen_cmd->add_subcommand("upb", "PPT entangled state from an unextendible product basis");
  auto* random_cmd = gen_cmd->add_subcommand("random", "Random density matrix G G^dagger / tr");
  random_cmd->add_option("--seed", gen.seed)->required();
  auto* separable_cmd =
      gen_cmd->add_subcommand("separable", "Random mixture of k product states");
  separable_cmd->add_option("--seed", gen.seed)->required();
  separable_cmd->add_option("--k", gen.k, "Number of product states (1..64)")
      ->required()
      ->check(CLI::Range(1, 64));

  // reduce
  std::string reduce_input, reduce_kind, reduce_out;
  auto* reduce_cmd = app.add_subcommand("reduce", "Write one two-qubit reduction");
  reduce_cmd->add_option("input", reduce_input, "8x8 matrix file ('-' for stdin)")
      ->required();
  reduce_cmd->add_option("--kind", reduce_kind, "ab, ac, bc, a-bc, b-ca or c-ab")
      ->required();
  reduce_cmd->add_option("-o,--out", reduce_out, "Output path (default stdout)");

  // check
  std::string check_input;
  double check_tol = TRIPENT_DEFAULT_CRITERION_TOLERANCE;
  bool check_json = false;
  auto* check_cmd = app.add_subcommand(
      "check", "PPT-test all six reductions; exit 0 entangled, 1 inconclusive");
  check_cmd->add_option("input", check_input, "8x8 matrix file ('-' for stdin)")
      ->required();
  check_cmd->add_option("--tol", check_tol, "Eigenvalues below -tol count as negative")
      ->check(CLI::NonNegativeNumber);
  check_cmd->add_flag("--json", check_json, "Machine-readable report");

  // verify
  std::uint64_t verify_seeds = 1000;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the built-in verification suite");
  verify_cmd->add_option("--seeds", verify_seeds, "Seeds for the property checks")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", verify_json, "Emit the JSON summary only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) {
      tripent_matrix* raw = nullptr;
      std::string label;
      if (*ghz_cmd) {
        require_ok(tripent_state_ghz(&raw), "gen ghz");
        label = "ghz";
      } else if (*werner_cmd) {
        require_ok(tripent_state_werner(gen.x, &raw), "gen werner");
        label = "werner x=" + CLI::detail::to_string(gen.x);
      } else if (*embed_cmd) {
        const MatrixPtr r = read_matrix(gen.input, 4);
        require_ok(tripent_state_embed(r.get(), gen.slot, &raw), "gen embed");
        label = "embed slot=" + std::to_string(gen.slot);
      } else if (*molecule_cmd) {
        require_ok(tripent_state_molecule(gen.p_ab, gen.p_bc, gen.p_ac, &raw),
                   "gen molecule");
        label = "molecule";
      } else if (*upb_cmd) {
        require_ok(tripent_state_upb(&raw), "gen upb");
        label = "upb";
      } else if (*random_cmd) {
        require_ok(tripent_state_random(gen.seed, &raw), "gen random");
        label = "random seed=" + std::to_string(gen.seed);
      } else if (*separable_cmd) {
        require_ok(tripent_state_separable(gen.seed, gen.k, &raw), "gen separable");
        label = "separable seed=" + std::to_string(gen.seed) +
                " k=" + std::to_string(gen.k);
      }
      const MatrixPtr m(raw);
      write_matrix(m.get(), label, gen.out);
      return 0;
    }

    if (*reduce_cmd) {
      tripent_kind kind{};
      if (tripent_kind_parse(reduce_kind.c_str(), &kind) != TRIPENT_OK)
        die(kExitUsage, tripent_last_error());
      const MatrixPtr rho = read_matrix(reduce_input, 8);
      tripent_matrix* raw = nullptr;
      require_ok(tripent_reduce(rho.get(), kind, &raw), "reduce");
      const MatrixPtr sigma(raw);
      write_matrix(sigma.get(), reduce_kind, reduce_out);
      return 0;
    }

    if (*check_cmd) return run_check(check_input, check_tol, check_json);
    if (*verify_cmd) return run_verify(verify_seeds, verify_json);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitUsage;
}
