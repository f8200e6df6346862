#include "bcbvp/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bcbvp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_stencil(cplx z, double h) {
  if (!(std::abs(z) + h * std::numbers::sqrt2 < 1.0)) {
    throw std::domain_error("finite-difference stencil of step " + std::to_string(h) + " at |z| = " +
                            std::to_string(std::abs(z)) + " leaves the unit disk");
  }
}

// (∂x w, ∂y w) by central differences, per cartesian component
std::pair<Bicomplex, Bicomplex> gradient(const Field& w, cplx z, double h) {
  require_stencil(z, h);
  const Bicomplex dx = (w(z + h) - w(z - h)) * (0.5 / h);
  const Bicomplex dy = (w(z + I * h) - w(z - I * h)) * (0.5 / h);
  return {dx, dy};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

Bicomplex wirtinger_dz(const Field& w, cplx z, double h) {
  const auto [dx, dy] = gradient(w, z, h);
  // cartesian components are complex, so (∂x − i∂y)/2 acts on z1 and z2 separately
  return Bicomplex(0.5 * (dx.z1() - I * dy.z1()), 0.5 * (dx.z2() - I * dy.z2()));
}

Bicomplex wirtinger_dzbar(const Field& w, cplx z, double h) {
  const auto [dx, dy] = gradient(w, z, h);
  return Bicomplex(0.5 * (dx.z1() + I * dy.z1()), 0.5 * (dx.z2() + I * dy.z2()));
}

Bicomplex bc_dbar(const Field& w, cplx z, double h) {
  return from_idempotent(wirtinger_dz(w, z, h).plus(), wirtinger_dzbar(w, z, h).minus());
}

Bicomplex bc_d(const Field& w, cplx z, double h) {
  return from_idempotent(wirtinger_dzbar(w, z, h).plus(), wirtinger_dz(w, z, h).minus());
}

Bicomplex five_point_laplacian(const Field& w, cplx z, double h) {
  require_stencil(z, h);
  const Bicomplex sum = w(z + h) + w(z - h) + w(z + I * h) + w(z - I * h) - 4.0 * w(z);
  return sum * (1.0 / (h * h));
}

double laplacian_identity_check(const Field& w, cplx z, double h) {
  require_stencil(z, 2.0 * h);
  const Field inner = [&w, h](cplx p) { return bc_dbar(w, p, h); };
  const Bicomplex lhs = 4.0 * bc_d(inner, z, h);
  return bnorm(lhs - five_point_laplacian(w, z, h)).value();
}

std::vector<cplx> ResidualGrid::points() const {
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(n_r * n_theta));
  for (int i = 0; i < n_r; ++i) {
    const double r = r_max * i / n_r;
    for (int j = 0; j < n_theta; ++j) out.push_back(std::polar(r, kTwoPi * j / n_theta));
  }
  return out;
}

Tolerances Tolerances::for_path(EvalPath path) {
  if (path == EvalPath::spectral) return {};
  Tolerances t;
  t.pde = 1e-3;
  t.origin = 1e-6;
  t.boundary_floor = 1e-2;
  t.harmonic = 1e-4;
  return t;
}

Tolerances Tolerances::scaled(double s) const { return {pde * s, origin * s, boundary_floor * s, harmonic * s}; }

nlohmann::ordered_json ResidualReport::to_json() const {
  nlohmann::ordered_json j;
  j["problem"] = problem;
  j["provenance"] = provenance;
  j["path"] = std::string(to_string(path));
  j["pde_residual_max"] = pde_residual_max;
  j["harmonic_residual_max"] = harmonic_residual_max;
  j["boundary_checked"] = boundary_checked;
  j["boundary_mismatch_max"] = boundary_mismatch_max;
  j["boundary_mismatch_reference"] = boundary_mismatch_reference;
  j["origin_error"] = {origin_error_plus, origin_error_minus};
  j["grid"] = {{"n_r", grid.n_r}, {"n_theta", grid.n_theta}, {"r_max", grid.r_max}, {"step", step}};
  j["tolerances"] = {{"pde", tolerances.pde},
                     {"origin", tolerances.origin},
                     {"boundary_floor", tolerances.boundary_floor},
                     {"harmonic", tolerances.harmonic}};
  j["passed"] = passed();
  j["violations"] = violations;
  return j;
}

ResidualReport residual_report(const ProblemSpec& spec, const SolutionField& field, const VerifyOptions& opts) {
  ResidualReport rep;
  rep.problem = spec.kind == ProblemKind::schwarz ? "schwarz" : "dirichlet";
  rep.provenance = std::string(to_string(field.provenance()));
  rep.path = field.path();
  rep.grid = opts.grid;
  rep.step = opts.step;
  rep.tolerances = Tolerances::for_path(field.path()).scaled(opts.tolerance_scale);
  const auto points = opts.grid.points();
  const Field w = [&field](cplx z) { return field(z); };

  auto boundary_sweep = [&](double r, auto&& mismatch) {
    double m = 0.0;
    for (int j = 0; j < opts.boundary_angles; ++j) {
      const double theta = kTwoPi * j / opts.boundary_angles;
      m = std::max(m, mismatch(std::polar(r, theta), theta));
    }
    return m;
  };

  try {
    if (spec.kind == ProblemKind::dirichlet) {
      for (const cplx z : points) {
        rep.harmonic_residual_max =
            std::max(rep.harmonic_residual_max, bnorm(five_point_laplacian(w, z, opts.laplacian_step)).value());
      }
      const auto& g = spec.dirichlet->boundary;
      if (g.kind() == DataKind::function) {
        rep.boundary_checked = true;
        auto mismatch = [&](cplx z, double theta) {
          const Bicomplex u = w(z);
          return std::max(std::abs(u.plus() - sample(g.plus(), theta)), std::abs(u.minus() - sample(g.minus(), theta)));
        };
        rep.boundary_mismatch_max = boundary_sweep(opts.boundary_radius, mismatch);
        rep.boundary_mismatch_reference = boundary_sweep(opts.reference_radius, mismatch);
      }
    } else {
      const SchwarzSpec& s = *spec.schwarz;
      const SolveOptions solve_opts{field.path(), opts.quadrature};
      std::vector<SolutionField> chain{field};
      for (int k = 1; k < s.order; ++k) chain.push_back(solve_schwarz(s.shifted(k), solve_opts));

      for (int k = 0; k < s.order; ++k) {
        const Field wk = [&chain, k](cplx z) { return chain[static_cast<std::size_t>(k)](z); };
        for (const cplx z : points) {
          const Bicomplex target = k + 1 < s.order ? chain[static_cast<std::size_t>(k + 1)](z) : evaluate_source(s.source, z);
          rep.pde_residual_max = std::max(rep.pde_residual_max, bnorm(bc_dbar(wk, z, opts.step) - target).value());
        }
        const Bicomplex at0 = wk(0.0);
        const auto ku = static_cast<std::size_t>(k);
        rep.origin_error_plus = std::max(rep.origin_error_plus, std::abs(at0.plus().imag() - s.c_plus[ku]));
        rep.origin_error_minus = std::max(rep.origin_error_minus, std::abs(at0.minus().imag() - s.c_minus[ku]));
      }

      if (!s.any_distribution()) {
        rep.boundary_checked = true;
        for (int k = 0; k < s.order; ++k) {
          const auto ku = static_cast<std::size_t>(k);
          auto mismatch = [&](cplx z, double theta) {
            const Bicomplex v = chain[ku](z);
            return std::max(std::abs(v.plus().real() - sample(s.boundary_plus[ku], theta).real()),
                            std::abs(v.minus().real() - sample(s.boundary_minus[ku], theta).real()));
          };
          rep.boundary_mismatch_max = std::max(rep.boundary_mismatch_max, boundary_sweep(opts.boundary_radius, mismatch));
          rep.boundary_mismatch_reference =
              std::max(rep.boundary_mismatch_reference, boundary_sweep(opts.reference_radius, mismatch));
        }
      }
    }
  } catch (const std::exception& e) {
    rep.violations.push_back(std::string("evaluation failed: ") + e.what());
    return rep;
  }

  const Tolerances& tol = rep.tolerances;
  auto bad = [](double v, double limit) { return !std::isfinite(v) || v > limit; };
  if (bad(rep.pde_residual_max, tol.pde)) {
    rep.violations.push_back("pde residual " + fmt(rep.pde_residual_max) + " exceeds " + fmt(tol.pde));
  }
  if (bad(rep.harmonic_residual_max, tol.harmonic)) {
    rep.violations.push_back("five-point Laplacian " + fmt(rep.harmonic_residual_max) + " exceeds " + fmt(tol.harmonic));
  }
  if (bad(rep.origin_error_plus, tol.origin) || bad(rep.origin_error_minus, tol.origin)) {
    rep.violations.push_back("origin condition error (" + fmt(rep.origin_error_plus) + ", " +
                             fmt(rep.origin_error_minus) + ") exceeds " + fmt(tol.origin));
  }
  if (rep.boundary_checked && bad(rep.boundary_mismatch_max, rep.boundary_mismatch_reference + tol.boundary_floor)) {
    rep.violations.push_back("boundary mismatch " + fmt(rep.boundary_mismatch_max) + " at r = " +
                             std::to_string(opts.boundary_radius) + " does not decay below the reference " +
                             fmt(rep.boundary_mismatch_reference) + " at r = " + std::to_string(opts.reference_radius));
  }
  return rep;
}

}  // namespace bcbvp
