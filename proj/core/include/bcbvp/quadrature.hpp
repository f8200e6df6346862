#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bcbvp/bicomplex.hpp"
#include "bcbvp/boundary_data.hpp"

namespace bcbvp {

/// P_r(θ) = (1 − r²)/(1 − 2r cos θ + r²). Requires 0 ≤ r < 1.
double poisson(double r, double theta);

/// Q_r(θ) = 2r sin θ/(1 − 2r cos θ + r²). Requires 0 ≤ r < 1.
double conj_poisson(double r, double theta);

/// Schwarz kernel (ζ + z)/(ζ − z) for |ζ| = 1 (to 1e-12) and |z| < 1.
cplx schwarz_kernel(cplx zeta, cplx z);

/// Raised by the disk rules when a node lands on a designated singular point
/// or the integrand is not finite at a node.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gauss–Legendre nodes and weights mapped to (0, 1).
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre_unit(int n);

/// Uniform trapezoid rule on [0, 2π): t_m = 2πm/N, weights 2π/N.
class CircleRule {
 public:
  explicit CircleRule(int n = 256);
  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] double node(int m) const;
  [[nodiscard]] double weight() const;

 private:
  int n_;
};

/**
 * Tensor-product rule on the unit disk: Gauss–Legendre in ρ on (0, 1)
 * against ρ dρ, uniform in angle with offset φ₀ (default π/N_t).
 * Weights sum to π; no node sits at the origin.
 */
class DiskRule {
 public:
  struct Node {
    cplx point;
    double weight;
  };

  DiskRule(int n_radial = 64, int n_angular = 256, std::optional<double> angular_offset = std::nullopt);

  [[nodiscard]] int radial_size() const { return n_r_; }
  [[nodiscard]] int angular_size() const { return n_t_; }
  [[nodiscard]] double angular_offset() const { return phi0_; }
  /// Nodes in ascending (radial, angular) index order.
  [[nodiscard]] const std::vector<Node>& nodes() const { return nodes_; }

 private:
  int n_r_;
  int n_t_;
  double phi0_;
  std::vector<Node> nodes_;
};

/// Resolutions and guards shared by every quadrature-path evaluation.
struct QuadratureConfig {
  int circle_n = 256;
  int disk_nr = 64;
  int disk_nt = 256;
  double collision_eps = 1e-8;
  double r_max = 0.999;

  /// Split the area kernel and integrate its Cauchy part in polar
  /// coordinates centred at z. `false` selects the plain tensor rule.
  bool centered_cauchy = true;

  [[nodiscard]] QuadratureConfig refined() const;
};

/// (1/2π) Σ integrand(t_m)·(2π/N), summed in ascending node order.
cplx circle_integral(const std::function<cplx(double)>& integrand, const CircleRule& rule);

/**
 * Σ integrand(ζ_node)·weight over the disk rule.
 *
 * When `singular_point` is given, a node within `collision_eps` of it raises
 * QuadratureError. A non-finite integrand value also raises, naming the node.
 */
cplx disk_integral(const std::function<cplx(cplx)>& integrand, const DiskRule& rule,
                   std::optional<cplx> singular_point = std::nullopt, double collision_eps = 1e-8);

/**
 * ∬_D g(ζ)/(ζ − z) dξ dη in polar coordinates ζ = z + s e^{iφ} about z.
 *
 * The Jacobian s cancels the Cauchy singularity, so only g is sampled:
 * Σ_φ Σ_s g(z + s e^{iφ}) e^{−iφ} s_max(φ) w_s (2π/N_φ), where s_max(φ) is
 * the distance from z to the unit circle along direction φ.
 */
cplx cauchy_area_integral(const std::function<cplx(cplx)>& g, cplx z, int n_radial, int n_angular);

/// Circle-quadrature Schwarz integral (1/2πi)∮ γ(ζ)(ζ+z)/(ζ−z) dζ/ζ of function data.
/// Rejects |z| > r_max with a pointer to the spectral path.
cplx schwarz_integral(const BoundaryFourierData& boundary, cplx z, const CircleRule& rule, double r_max = 0.999);
cplx schwarz_integral(const BoundaryFourierData& boundary, cplx z, const QuadratureConfig& cfg = {});

}  // namespace bcbvp
