// qcspec: eigenvalue bounds for quasiconformal images of the unit disc.
//
//   qcspec analyze     --family rose-petal --a 0.9
//   qcspec verify      --family ellipse --a 0.125 --rings 64
//   qcspec paper-table [--rings 64]
//   qcspec sweep       --family ellipse --param a --from 0 --to 0.5 --step 0.025 [--with-fem]
//   qcspec mesh        --family epicycloid --A 0.2 --B 0.05 --n 3 --rings 16 --out mesh.txt
//
// Exit codes: 0 success, 2 bad input, 3 inequality violated, 4 solver failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qcspec/error.hpp"
#include "qcspec/mesh.hpp"
#include "qcspec/parallel.hpp"
#include "qcspec/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitViolation = 3;
constexpr int kExitSolver = 4;

struct FamilyOptions {
  std::string family;
  std::optional<double> a;
  std::optional<double> A;
  std::optional<double> B;
  std::optional<int> n;

  void attach(CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--family", family, "identity | ellipse | rose-petal | epicycloid")
                    ->check(CLI::IsMember({"identity", "ellipse", "rose-petal", "epicycloid"}));
    if (required) opt->required();
    cmd->add_option("--a", a, "ellipse / rose-petal parameter");
    cmd->add_option("--A", A, "epicycloid A");
    cmd->add_option("--B", B, "epicycloid B");
    cmd->add_option("--n", n, "epicycloid n");
  }

  // `swept` names a parameter the sweep fills in, so it may be omitted on the command line.
  qcspec::MapFamily build(const std::string& swept = "", double placeholder = 0.0) const {
    auto a = this->a;
    auto A = this->A;
    auto B = this->B;
    if (swept == "a" && !a) a = placeholder;
    if (swept == "A" && !A) A = placeholder;
    if (swept == "B" && !B) B = placeholder;
    using qcspec::Error;
    using qcspec::ErrorKind;
    auto reject = [](const std::string& msg) { throw Error(ErrorKind::InvalidParameters, msg); };
    const bool epi_flags = A || B || n;
    if (family == "identity") {
      if (a || epi_flags) reject("identity takes no parameters");
      return qcspec::Identity{};
    }
    if (family == "ellipse" || family == "rose-petal") {
      if (epi_flags) reject(family + " accepts only --a");
      if (!a) reject(family + " requires --a");
      if (family == "ellipse") return qcspec::Ellipse{*a};
      return qcspec::RosePetal{*a};
    }
    if (a) reject("epicycloid accepts --A, --B and --n");
    if (!A || !B || !n) reject("epicycloid requires --A, --B and --n");
    return qcspec::Epicycloid{*A, *B, *n};
  }
};

struct Common {
  int rings = 64;
  double tol = 1e-10;
  int grid_radial = 512;
  int grid_angular = 512;
  std::string format = "json";
  std::string out;

  void attach_solver(CLI::App* cmd) {
    cmd->add_option("--rings", rings, "disc mesh rings")->capture_default_str();
    cmd->add_option("--tol", tol, "eigenvalue tolerance")->capture_default_str();
  }
  void attach_grid(CLI::App* cmd) {
    cmd->add_option("--grid-radial", grid_radial, "polar grid radial nodes")->capture_default_str();
    cmd->add_option("--grid-angular", grid_angular, "polar grid angular nodes")->capture_default_str();
  }
  void attach_output(CLI::App* cmd) {
    cmd->add_option("--format", format, "json | csv | md")
        ->check(CLI::IsMember({"json", "csv", "md"}))
        ->capture_default_str();
    cmd->add_option("--out", out, "output path (default: stdout)");
  }

  qcspec::EigenOptions eigen() const {
    qcspec::EigenOptions o;
    o.tol = tol;
    return o;
  }
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(path);
  if (!os) throw qcspec::Error(qcspec::ErrorKind::InvalidInput, "cannot open output file " + path);
  os << text;
}

int exit_code_for(qcspec::ErrorKind kind) {
  switch (kind) {
    case qcspec::ErrorKind::NoConvergence:
    case qcspec::ErrorKind::SingularSystem:
      return kExitSolver;
    default:
      return kExitBadInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasiconformal lower bounds for the principal Dirichlet eigenvalue"};
  app.require_subcommand(1);

  FamilyOptions fam;
  Common common;
  std::string sweep_param;
  double sweep_from = 0.0, sweep_to = 0.0, sweep_step = 0.0;
  bool with_fem = false;

  auto* analyze = app.add_subcommand("analyze", "bounds and quasiconformal constants for one map");
  fam.attach(analyze);
  common.attach_grid(analyze);
  common.attach_output(analyze);

  auto* verify = app.add_subcommand("verify", "check the bounds against the finite-element eigenvalue");
  fam.attach(verify);
  common.attach_solver(verify);
  common.attach_output(verify);

  auto* table = app.add_subcommand("paper-table", "every worked example with FEM margins");
  common.attach_solver(table);
  common.attach_output(table);

  auto* sweep = app.add_subcommand("sweep", "bounds over a parameter range");
  fam.attach(sweep);
  sweep->add_option("--param", sweep_param, "a | A | B")->required();
  sweep->add_option("--from", sweep_from)->required();
  sweep->add_option("--to", sweep_to)->required();
  sweep->add_option("--step", sweep_step)->required();
  sweep->add_flag("--with-fem", with_fem, "add FEM eigenvalues and margins");
  common.attach_solver(sweep);
  common.attach_output(sweep);

  auto* mesh_cmd = app.add_subcommand("mesh", "export the pushed-forward disc mesh as text");
  fam.attach(mesh_cmd);
  mesh_cmd->add_option("--rings", common.rings)->capture_default_str();
  mesh_cmd->add_option("--out", common.out, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "qcspec: " << e.what() << '\n';
    return kExitBadInput;
  }

  try {
    const qcspec::OutputFormat format = qcspec::parse_output_format(common.format);
    const unsigned workers = qcspec::worker_count();

    if (*analyze) {
      const qcspec::PolarGrid grid{common.grid_radial, common.grid_angular};
      const auto result = qcspec::run_analyze(fam.build(), grid);
      emit(qcspec::render_record("analyze", qcspec::to_record(result), format), common.out);
      return kExitOk;
    }
    if (*verify) {
      const auto result = qcspec::run_verify(fam.build(), common.rings, common.eigen());
      emit(qcspec::render_record("verify", qcspec::to_record(result), format), common.out);
      return result.passed() ? kExitOk : kExitViolation;
    }
    if (*table) {
      const auto rows = qcspec::run_paper_table(common.rings, common.eigen(), workers);
      std::vector<qcspec::Record> records;
      for (const auto& r : rows) records.push_back(qcspec::to_record(r));
      emit(qcspec::render_table("paper-table", records, format), common.out);
      return qcspec::paper_table_passed(rows) ? kExitOk : kExitViolation;
    }
    if (*sweep) {
      qcspec::SweepSpec spec;
      spec.base = fam.build(sweep_param, sweep_from);
      spec.param = sweep_param;
      spec.from = sweep_from;
      spec.to = sweep_to;
      spec.step = sweep_step;
      spec.with_fem = with_fem;
      spec.rings = common.rings;
      spec.options = common.eigen();
      const auto rows = qcspec::run_sweep(spec, workers);
      std::vector<qcspec::Record> records;
      for (const auto& r : rows) records.push_back(qcspec::to_record(r, sweep_param));
      emit(qcspec::render_table("sweep", records, format), common.out);
      return qcspec::sweep_passed(rows) ? kExitOk : kExitViolation;
    }
    if (*mesh_cmd) {
      const auto mesh = qcspec::pushforward_mesh(qcspec::unit_disc_mesh(common.rings), fam.build());
      std::ostringstream os;
      qcspec::write_mesh(os, mesh);
      emit(os.str(), common.out);
      return kExitOk;
    }
  } catch (const qcspec::Error& e) {
    std::cerr << "qcspec: " << qcspec::to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "qcspec: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
