#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cracq/clifford.hpp"
#include "cracq/errors.hpp"
#include "cracq/group.hpp"
#include "cracq/io.hpp"
#include "cracq/quasigroup.hpp"
#include "cracq/representation.hpp"

namespace fs = std::filesystem;
using namespace cracq;

namespace {

// Exit contract: 0 pass, 1 law/contract violation, 2 input error, 3 I/O.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

constexpr unsigned kGenCap = 12;      // group order 2^{N+1} and a quadratic table
constexpr unsigned kRepDefaultCap = 4;  // bundles grow fast; force with --rep

struct ToleranceFlags {
  std::optional<double> tol;
  bool exact = false;

  // Exact mode is auto-selected when every input is Gaussian-integer.
  double resolve(bool inputs_are_gaussian_integer) const {
    if (exact) return 0.0;
    if (tol) return *tol;
    return inputs_are_gaussian_integer ? 0.0 : kDefaultTolerance;
  }
};

void add_tolerance_flags(CLI::App* cmd, ToleranceFlags& flags) {
  cmd->add_option("--tol", flags.tol, "absolute per-entry tolerance")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--exact", flags.exact, "bitwise comparison (tolerance 0)");
}

void print_law_row(const std::string& law, bool passed, const std::string& note) {
  std::cout << std::left << std::setw(28) << law << (passed ? "pass" : "FAIL");
  if (!note.empty()) std::cout << "    " << note;
  std::cout << "\n";
}

int run_gen_clifford(unsigned n, const fs::path& out_dir, bool force_rep, unsigned jobs) {
  if (n < 1 || n > kGenCap)
    throw ArgumentError("--n must lie in 1.." + std::to_string(kGenCap));

  const FiniteGroup group = enumerate_clifford_group(n);
  const Involution involution = clifford_involution_map(n);
  const Quasigroup quasigroup = build_quasigroup(group, involution);
  (void)jobs;

  fs::create_directories(out_dir);
  save_group(out_dir / "group.json", group);
  save_involution(out_dir / "involution.json", group, involution);
  save_quasigroup(out_dir / "quasigroup.json", quasigroup);
  {
    std::ofstream csv(out_dir / "group_cayley.csv");
    if (!csv) throw IoError("cannot write group_cayley.csv");
    write_cayley_csv(csv, group.names, group.table);
  }
  {
    std::ofstream csv(out_dir / "quasigroup_cayley.csv");
    if (!csv) throw IoError("cannot write quasigroup_cayley.csv");
    write_cayley_csv(csv, quasigroup.names, quasigroup.table);
  }
  if (n <= kRepDefaultCap || force_rep) {
    const Representation rep = extend_to_representation(quasigroup, build_gamma_matrices(n));
    save_representation(out_dir / "representation.json", rep);
  }

  std::cout << "group order " << group.order() << ", quasigroup order "
            << quasigroup.order() << "\n";
  return kExitOk;
}

int run_verify(const fs::path& group_path, const fs::path& involution_path,
               std::size_t depth, unsigned jobs) {
  const FiniteGroup group = load_group(group_path);

  GroupCheckOptions group_options;
  group_options.jobs = jobs;
  bool all_pass = true;

  if (const auto violation = verify_group(group, group_options)) {
    print_law_row("group-" + violation->law, false, violation->detail);
    return kExitViolation;
  }
  print_law_row("group-axioms", true, "order " + std::to_string(group.order()));

  const Involution involution = load_involution(involution_path, group);
  if (const auto violation = verify_involution(group, involution)) {
    print_law_row("involution-" + violation->law, false, violation->detail);
    return kExitViolation;
  }
  print_law_row("involution-axioms", true, "");

  const Quasigroup quasigroup = build_quasigroup(group, involution);
  LawOptions law_options;
  law_options.chain_depth = depth;
  law_options.jobs = jobs;
  const LawReport report = verify_quasigroup_laws(quasigroup, group, involution, law_options);
  for (const auto& law : report.laws) {
    print_law_row(law.law, law.passed,
                  law.violation ? law.violation->detail : law.note);
    all_pass = all_pass && law.passed;
  }
  return all_pass ? kExitOk : kExitViolation;
}

void emit_table(const Cracovian& table, const std::optional<fs::path>& out) {
  if (out) {
    save_cracovian(*out, table);
  } else {
    write_cracovian_csv(std::cout, table);
  }
}

int run_crac(const std::string& op, const std::vector<fs::path>& files,
             const std::optional<fs::path>& out, const ToleranceFlags& flags) {
  const auto need = [&](std::size_t count) {
    if (files.size() != count)
      throw ArgumentError("operation '" + op + "' takes " + std::to_string(count) +
                          " table file(s), got " + std::to_string(files.size()));
  };
  if (op == "mul" || op == "commute") {
    need(2);
    const Cracovian a = load_cracovian(files[0]);
    const Cracovian b = load_cracovian(files[1]);
    if (op == "mul") {
      emit_table(crac_product(a, b), out);
    } else {
      const double tol = flags.resolve(all_gaussian_integer(a) && all_gaussian_integer(b));
      std::cout << (commutes(a, b, tol) ? "true" : "false") << "\n";
    }
    return kExitOk;
  }
  if (op == "inv" || op == "transpose") {
    need(1);
    const Cracovian a = load_cracovian(files[0]);
    emit_table(op == "inv" ? crac_inverse(a) : transpose(a), out);
    return kExitOk;
  }
  throw ArgumentError("unknown operation '" + op + "' (expected mul|inv|transpose|commute)");
}

int run_rep_check(const fs::path& quasigroup_path, const fs::path& rep_path,
                  const ToleranceFlags& flags, unsigned jobs) {
  const Quasigroup quasigroup = load_quasigroup(quasigroup_path);
  const Representation loose = load_representation(rep_path);
  const Representation rep = match_representation(quasigroup, loose);

  bool gaussian = true;
  for (const auto& table : rep.tables) gaussian = gaussian && all_gaussian_integer(table);
  const double tol = flags.resolve(gaussian);

  int rc = kExitOk;
  const auto violation = verify_crac_homomorphism(quasigroup, rep, tol, jobs);
  if (violation) {
    std::cout << "homomorphism: violated at (" << quasigroup.names[violation->a] << ", "
              << quasigroup.names[violation->b] << "): " << violation->detail << "\n";
    rc = kExitViolation;
  } else {
    std::cout << "homomorphism: ok (" << quasigroup.order() * quasigroup.order()
              << " pairs, tolerance " << tol << ")\n";
  }

  const bool tau_is_transposer =
      approx_equal(rep.tables[quasigroup.tau], transposing_cracovian(rep.dimension), tol);
  std::cout << "right unit maps to transposing cracovian: "
            << (tau_is_transposer ? "yes" : "NO") << "\n";
  if (!tau_is_transposer) rc = kExitViolation;

  std::cout << "commutant dimension (tables): " << commutant_dimension(rep.tables) << "\n";
  std::vector<Cracovian> closed = rep.tables;
  for (const auto& table : rep.tables) closed.push_back(transpose(table));
  std::cout << "commutant dimension (transpose-closed): " << commutant_dimension(closed)
            << "\n";
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cracovian table algebra and quasigroups of groups with involution"};
  app.require_subcommand(1);

  // gen-clifford
  auto* gen = app.add_subcommand("gen-clifford",
                                 "generate a clifford group, its quasigroup and files");
  unsigned gen_n = 0;
  fs::path gen_out = ".";
  bool gen_rep = false;
  unsigned gen_jobs = 1;
  gen->add_option("--n", gen_n, "number of generators")->required();
  gen->add_option("--out", gen_out, "output directory");
  gen->add_flag("--rep", gen_rep,
                "write representation.json even above the default size cutoff");
  gen->add_option("--jobs", gen_jobs, "worker threads for sweeps");

  // verify
  auto* verify = app.add_subcommand("verify",
                                    "check group axioms, involution axioms and all "
                                    "quasigroup laws");
  fs::path verify_group_path, verify_involution_path;
  std::size_t verify_depth = 5;
  unsigned verify_jobs = 1;
  verify->add_option("group", verify_group_path, "group JSON file")->required();
  verify->add_option("involution", verify_involution_path, "involution JSON file")
      ->required();
  verify->add_option("--depth", verify_depth, "chain-law depth (factors per chain)");
  verify->add_option("--jobs", verify_jobs, "worker threads for sweeps");

  // crac
  auto* crac = app.add_subcommand("crac", "table arithmetic on CSV/JSON cracovians");
  std::string crac_op;
  std::vector<fs::path> crac_files;
  std::optional<fs::path> crac_out;
  ToleranceFlags crac_tol;
  crac->add_option("op", crac_op, "mul|inv|transpose|commute")->required();
  crac->add_option("files", crac_files, "input table files")->required();
  crac->add_option("--out", crac_out, "output file (default: CSV on stdout)");
  add_tolerance_flags(crac, crac_tol);

  // rep-check
  auto* rep = app.add_subcommand("rep-check",
                                 "verify a representation bundle against a quasigroup");
  fs::path rep_quasigroup_path, rep_bundle_path;
  ToleranceFlags rep_tol;
  unsigned rep_jobs = 1;
  rep->add_option("quasigroup", rep_quasigroup_path, "quasigroup JSON file")->required();
  rep->add_option("representation", rep_bundle_path, "representation JSON file")->required();
  add_tolerance_flags(rep, rep_tol);
  rep->add_option("--jobs", rep_jobs, "worker threads for the pair sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (gen->parsed()) {
      try {
        return run_gen_clifford(gen_n, gen_out, gen_rep, gen_jobs);
      } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n" << gen->help();
        return kExitInput;
      }
    }
    if (verify->parsed())
      return run_verify(verify_group_path, verify_involution_path, verify_depth,
                        verify_jobs);
    if (crac->parsed()) return run_crac(crac_op, crac_files, crac_out, crac_tol);
    if (rep->parsed())
      return run_rep_check(rep_quasigroup_path, rep_bundle_path, rep_tol, rep_jobs);
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const SingularError& e) {
    std::cerr << "error: singular: " << e.what() << "\n";
    return kExitViolation;
  } catch (const ConstructionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitInput;
}
