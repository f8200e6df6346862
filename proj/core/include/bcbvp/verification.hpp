#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bcbvp/problem.hpp"

namespace bcbvp {

using Field = std::function<Bicomplex(cplx)>;

inline constexpr double kDefaultStep = 1e-4;

// Central-difference Wirtinger derivatives of each cartesian component.
// All stencils throw std::domain_error unless |z| + h√2 < 1.
Bicomplex wirtinger_dz(const Field& w, cplx z, double h = kDefaultStep);
Bicomplex wirtinger_dzbar(const Field& w, cplx z, double h = kDefaultStep);

/// ∂̄w = p⁺ ∂w⁺/∂z + p⁻ ∂w⁻/∂z̄.
Bicomplex bc_dbar(const Field& w, cplx z, double h = kDefaultStep);
/// ∂w = p⁺ ∂w⁺/∂z̄ + p⁻ ∂w⁻/∂z.
Bicomplex bc_d(const Field& w, cplx z, double h = kDefaultStep);

/// Five-point Laplacian of each cartesian component.
Bicomplex five_point_laplacian(const Field& w, cplx z, double h = 1e-3);

/// ‖4 ∂(∂̄w)(z) − Δ₅w(z)‖_B with nested central differences of step h.
double laplacian_identity_check(const Field& w, cplx z, double h = 1e-3);

/// Interior polar grid r_i = r_max·i/n_r (0 ≤ i < n_r), θ_j = 2πj/n_θ.
struct ResidualGrid {
  int n_r = 15;
  int n_theta = 16;
  double r_max = 0.9;
  [[nodiscard]] std::vector<cplx> points() const;
};

struct Tolerances {
  double pde = 1e-5;
  double origin = 1e-12;
  /// Allowance added to the reference mismatch in the boundary decay test.
  double boundary_floor = 1e-12;
  double harmonic = 1e-4;

  static Tolerances for_path(EvalPath path);
  [[nodiscard]] Tolerances scaled(double s) const;
};

struct VerifyOptions {
  ResidualGrid grid{};
  double step = kDefaultStep;
  double laplacian_step = 1e-3;
  double boundary_radius = 0.999;
  double reference_radius = 0.99;
  int boundary_angles = 64;
  double tolerance_scale = 1.0;
  QuadratureConfig quadrature{};
};

struct ResidualReport {
  std::string problem;
  std::string provenance;
  EvalPath path = EvalPath::spectral;
  double pde_residual_max = 0.0;
  double harmonic_residual_max = 0.0;
  double boundary_mismatch_max = 0.0;
  double boundary_mismatch_reference = 0.0;
  bool boundary_checked = false;
  double origin_error_plus = 0.0;
  double origin_error_minus = 0.0;
  ResidualGrid grid{};
  double step = kDefaultStep;
  Tolerances tolerances{};
  std::vector<std::string> violations;

  [[nodiscard]] bool passed() const { return violations.empty(); }
  /// Fixed key order.
  [[nodiscard]] nlohmann::ordered_json to_json() const;
};

/**
 * Certifies a solver output against its problem.
 *
 * Schwarz of order n: ∂̄ field_k ≈ field_{k+1} on the grid, where field_0 is
 * `field`, field_k solves the shifted problem and field_n is the source.
 * Boundary mismatch |Re field_k^± − b^±_k| is taken over `boundary_angles`
 * at `boundary_radius` and must not exceed the reference mismatch at
 * `reference_radius` plus the floor (linear decay, function data only).
 * Origin errors are |Im field_k^±(0) − c^±_k|.
 *
 * Dirichlet: five-point Laplacian of both cartesian components, and the
 * full complex boundary mismatch. Never throws on large residuals.
 */
ResidualReport residual_report(const ProblemSpec& spec, const SolutionField& field, const VerifyOptions& opts = {});

}  // namespace bcbvp
