#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "bcbvp/quadrature.hpp"

namespace bcbvp::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void append_number(std::string& line, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);  // no "-0"
  if (!line.empty()) line += ',';
  line += buf;
}

double grid_radius(const OutputGrid& g, int i) { return g.r_max * i / (g.n_r - 1); }
double grid_angle(const OutputGrid& g, int j) { return kTwoPi * j / g.n_theta; }

void check_grid(const OutputGrid& g) {
  if (g.n_r < 2 || g.n_theta < 2) throw InputError("grid resolutions must be at least 2");
  if (!(g.r_max >= 0.0 && g.r_max < 1.0)) throw InputError("grid radius must lie in [0, 1)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write output file '" + path + "'");
  f << text;
}

struct CommonOptions {
  std::string input;
  std::string output;
  std::optional<std::string> path;
  QuadratureConfig quadrature{};
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--input", o.input, "problem description (JSON)")->required();
  cmd->add_option("--output", o.output, "output file (default: stdout)");
  cmd->add_option("--path", o.path, "evaluation path, overrides the input file")
      ->check(CLI::IsMember({"spectral", "quadrature"}));
  cmd->add_option("--circle-n", o.quadrature.circle_n, "circle quadrature nodes")->check(CLI::PositiveNumber);
  cmd->add_option("--disk-nr", o.quadrature.disk_nr, "disk rule radial nodes")->check(CLI::PositiveNumber);
  cmd->add_option("--disk-nt", o.quadrature.disk_nt, "disk rule angular nodes")->check(CLI::PositiveNumber);
  cmd->add_option("--collision-eps", o.quadrature.collision_eps, "node collision guard")->check(CLI::PositiveNumber);
}

ProblemSpec load(const CommonOptions& o) {
  ProblemSpec spec = parse_problem_text(read_file(o.input));
  if (o.path) spec.path = *o.path == "spectral" ? EvalPath::spectral : EvalPath::quadrature;
  return spec;
}

int run_solve(const CommonOptions& o, const OutputGrid& grid, std::ostream& out, std::ostream& err) {
  check_grid(grid);
  const ProblemSpec spec = load(o);
  if (spec.path == EvalPath::quadrature && grid.r_max > o.quadrature.r_max) {
    throw InputError("grid radius " + std::to_string(grid.r_max) + " exceeds the quadrature limit " +
                     std::to_string(o.quadrature.r_max) + "; use --path spectral or a smaller --grid-rmax");
  }
  const SolutionField field = solve(spec, o.quadrature);
  emit(grid_csv(field, grid), o.output, out);
  err << "solved " << (spec.kind == ProblemKind::schwarz ? "schwarz" : "dirichlet") << " problem: provenance "
      << to_string(field.provenance()) << ", path " << to_string(field.path()) << ", " << grid.n_r * grid.n_theta
      << " points\n";
  return kOk;
}

int run_verify(const CommonOptions& o, const VerifyOptions& vopts, std::ostream& out, std::ostream& err) {
  if (vopts.grid.n_r < 2 || vopts.grid.n_theta < 2) throw InputError("grid resolutions must be at least 2");
  if (!(vopts.grid.r_max > 0.0 && vopts.grid.r_max < 1.0)) throw InputError("grid radius must lie in (0, 1)");
  if (!(vopts.tolerance_scale > 0.0)) throw InputError("tolerance scale must be positive");
  const ProblemSpec spec = load(o);
  VerifyOptions v = vopts;
  v.quadrature = o.quadrature;
  const SolutionField field = solve(spec, o.quadrature);
  const ResidualReport rep = residual_report(spec, field, v);
  emit(rep.to_json().dump(2) + "\n", o.output, out);
  err << (rep.passed() ? "PASS" : "FAIL") << ": " << rep.provenance << " (" << to_string(rep.path) << " path)\n";
  for (const auto& msg : rep.violations) err << "  " << msg << '\n';
  return rep.passed() ? kOk : kViolation;
}

}  // namespace

std::string grid_csv(const SolutionField& field, const OutputGrid& grid) {
  check_grid(grid);
  std::string text = "r,theta,re_z1,im_z1,re_z2,im_z2,re_wplus,im_wplus,re_wminus,im_wminus\n";
  for (int i = 0; i < grid.n_r; ++i) {
    const double r = grid_radius(grid, i);
    for (int j = 0; j < grid.n_theta; ++j) {
      const double theta = grid_angle(grid, j);
      const Bicomplex w = field(std::polar(r, theta));
      std::string line;
      for (double v : {r, theta, w.z1().real(), w.z1().imag(), w.z2().real(), w.z2().imag(), w.plus().real(),
                       w.plus().imag(), w.minus().real(), w.minus().imag()}) {
        append_number(line, v);
      }
      text += line + '\n';
    }
  }
  return text;
}

std::string kernel_table_csv(const OutputGrid& grid) {
  check_grid(grid);
  std::string text = "r,theta,P,Q,re_S,im_S\n";
  for (int i = 0; i < grid.n_r; ++i) {
    const double r = grid_radius(grid, i);
    for (int j = 0; j < grid.n_theta; ++j) {
      const double theta = grid_angle(grid, j);
      const cplx s = schwarz_kernel(1.0, std::polar(r, theta));
      std::string line;
      for (double v : {r, theta, poisson(r, theta), conj_poisson(r, theta), s.real(), s.imag()}) append_number(line, v);
      text += line + '\n';
    }
  }
  return text;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bicomplex Schwarz and Dirichlet problems on the unit disk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "bcbvp 0.1.0");

  CommonOptions solve_opts;
  OutputGrid solve_grid;
  auto* solve_cmd = app.add_subcommand("solve", "solve a problem and write the solution on a polar grid (CSV)");
  add_common(solve_cmd, solve_opts);
  solve_cmd->add_option("--grid-nr", solve_grid.n_r, "radial grid points, r_max included");
  solve_cmd->add_option("--grid-ntheta", solve_grid.n_theta, "angular grid points");
  solve_cmd->add_option("--grid-rmax", solve_grid.r_max, "largest grid radius");

  CommonOptions verify_opts;
  VerifyOptions verify_cfg;
  auto* verify_cmd = app.add_subcommand("verify", "solve a problem and write a residual report (JSON)");
  add_common(verify_cmd, verify_opts);
  verify_cmd->add_option("--grid-nr", verify_cfg.grid.n_r, "radial residual grid points, r_max excluded");
  verify_cmd->add_option("--grid-ntheta", verify_cfg.grid.n_theta, "angular residual grid points");
  verify_cmd->add_option("--grid-rmax", verify_cfg.grid.r_max, "residual grid radius bound");
  verify_cmd->add_option("--tolerance-scale", verify_cfg.tolerance_scale, "multiplier applied to every tolerance");

  OutputGrid kernel_grid;
  std::string kernel_output;
  auto* kernel_cmd = app.add_subcommand("kernel-table", "tabulate Poisson, conjugate Poisson and Schwarz kernels");
  kernel_cmd->add_option("--grid-nr", kernel_grid.n_r, "radial grid points, r_max included");
  kernel_cmd->add_option("--grid-ntheta", kernel_grid.n_theta, "angular grid points");
  kernel_cmd->add_option("--grid-rmax", kernel_grid.r_max, "largest radius (< 1)");
  kernel_cmd->add_option("--output", kernel_output, "output file (default: stdout)");

  std::string demo_name;
  std::string demo_output;
  auto* demo_cmd = app.add_subcommand("demo", "print a bundled problem description; without a name, list them");
  demo_cmd->add_option("name", demo_name, "demo name");
  demo_cmd->add_option("--output", demo_output, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_opts, solve_grid, out, err);
    if (verify_cmd->parsed()) return run_verify(verify_opts, verify_cfg, out, err);
    if (kernel_cmd->parsed()) {
      emit(kernel_table_csv(kernel_grid), kernel_output, out);
      return kOk;
    }
    if (demo_name.empty()) {
      for (const auto& [name, body] : demos()) out << name << '\n';
      return kOk;
    }
    const auto it = demos().find(demo_name);
    if (it == demos().end()) throw InputError("unknown demo '" + demo_name + "'");
    emit(std::string(it->second), demo_output, out);
    return kOk;
  } catch (const SpecError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "input error: " << e.what() << '\n';
  }
  return kInputError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"bcbvp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace bcbvp::cli
