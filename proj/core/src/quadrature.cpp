#include "bcbvp/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace bcbvp {

namespace {

constexpr double kPi = std::numbers::pi;

void require_radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::domain_error("kernel requires 0 <= r < 1, got r = " + std::to_string(r));
  }
}

}  // namespace

double poisson(double r, double theta) {
  require_radius(r);
  return (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(theta) + r * r);
}

double conj_poisson(double r, double theta) {
  require_radius(r);
  return 2.0 * r * std::sin(theta) / (1.0 - 2.0 * r * std::cos(theta) + r * r);
}

cplx schwarz_kernel(cplx zeta, cplx z) {
  if (std::abs(std::abs(zeta) - 1.0) > 1e-12) throw std::domain_error("schwarz_kernel: zeta must lie on the unit circle");
  require_radius(std::abs(z));
  return (zeta + z) / (zeta - z);
}

GaussLegendre gauss_legendre_unit(int n) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre rule needs at least one node");
  GaussLegendre rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  // Newton on P_n from the Tricomi initial guesses; nodes come out descending in x,
  // stored ascending in ρ = (1 − x)/2.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = 0.5 * (1.0 - x);
    rule.nodes[hi] = 0.5 * (1.0 + x);
    rule.weights[lo] = 0.5 * w;
    rule.weights[hi] = 0.5 * w;
  }
  return rule;
}

CircleRule::CircleRule(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("circle rule needs at least one node");
}

double CircleRule::node(int m) const { return 2.0 * kPi * m / n_; }

double CircleRule::weight() const { return 2.0 * kPi / n_; }

DiskRule::DiskRule(int n_radial, int n_angular, std::optional<double> angular_offset)
    : n_r_(n_radial), n_t_(n_angular) {
  if (n_radial < 1 || n_angular < 1) throw std::invalid_argument("disk rule needs positive resolutions");
  phi0_ = angular_offset.value_or(kPi / n_angular);
  const auto gl = gauss_legendre_unit(n_radial);
  const double wt = 2.0 * kPi / n_angular;
  nodes_.reserve(static_cast<std::size_t>(n_radial) * static_cast<std::size_t>(n_angular));
  for (int a = 0; a < n_radial; ++a) {
    const double rho = gl.nodes[static_cast<std::size_t>(a)];
    const double w = gl.weights[static_cast<std::size_t>(a)] * rho * wt;
    for (int b = 0; b < n_angular; ++b) {
      nodes_.push_back({std::polar(rho, phi0_ + wt * b), w});
    }
  }
}

QuadratureConfig QuadratureConfig::refined() const {
  QuadratureConfig c = *this;
  c.circle_n *= 2;
  c.disk_nr *= 2;
  c.disk_nt *= 2;
  return c;
}

cplx circle_integral(const std::function<cplx(double)>& integrand, const CircleRule& rule) {
  cplx sum{};
  for (int m = 0; m < rule.size(); ++m) sum += integrand(rule.node(m));
  return sum / static_cast<double>(rule.size());
}

cplx disk_integral(const std::function<cplx(cplx)>& integrand, const DiskRule& rule,
                   std::optional<cplx> singular_point, double collision_eps) {
  cplx sum{};
  const auto& nodes = rule.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    if (singular_point && std::abs(node.point - *singular_point) < collision_eps) {
      std::ostringstream msg;
      msg << "disk quadrature node " << i << " at " << node.point << " collides with singular point "
          << *singular_point << " (collision_eps = " << collision_eps << ")";
      throw QuadratureError(msg.str());
    }
    const cplx v = integrand(node.point);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream msg;
      msg << "non-finite integrand at disk quadrature node " << i << " (rho index "
          << i / static_cast<std::size_t>(rule.angular_size()) << ", angle index "
          << i % static_cast<std::size_t>(rule.angular_size()) << ", point " << node.point << ")";
      throw QuadratureError(msg.str());
    }
    sum += v * node.weight;
  }
  return sum;
}

cplx cauchy_area_integral(const std::function<cplx(cplx)>& g, cplx z, int n_radial, int n_angular) {
  if (std::abs(z) >= 1.0) throw std::domain_error("cauchy_area_integral: centre must lie inside the disk");
  const auto gl = gauss_legendre_unit(n_radial);
  const double wt = 2.0 * kPi / n_angular;
  const double rest = 1.0 - std::norm(z);
  cplx sum{};
  for (int b = 0; b < n_angular; ++b) {
    const cplx dir = std::polar(1.0, wt * b);
    const double proj = (std::conj(z) * dir).real();
    const double s_max = -proj + std::sqrt(proj * proj + rest);
    cplx inner{};
    for (int a = 0; a < n_radial; ++a) {
      const double s = gl.nodes[static_cast<std::size_t>(a)] * s_max;
      const cplx v = g(z + s * dir);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        std::ostringstream msg;
        msg << "non-finite integrand in centred rule at angle index " << b << ", radial index " << a;
        throw QuadratureError(msg.str());
      }
      inner += v * gl.weights[static_cast<std::size_t>(a)];
    }
    sum += inner * s_max / dir;
  }
  return sum * wt;
}

cplx schwarz_integral(const BoundaryFourierData& boundary, cplx z, const CircleRule& rule, double r_max) {
  if (boundary.kind() != DataKind::function) {
    throw std::invalid_argument("schwarz_integral needs function data; pair distributions spectrally");
  }
  if (std::abs(z) > r_max * (1.0 + 1e-12)) {
    throw std::domain_error("schwarz_integral: |z| = " + std::to_string(std::abs(z)) + " exceeds r_max = " +
                            std::to_string(r_max) + "; use the spectral path near the boundary");
  }
  return circle_integral(
      [&](double t) {
        const cplx zeta = std::polar(1.0, t);
        return sample(boundary, t) * (zeta + z) / (zeta - z);
      },
      rule);
}

cplx schwarz_integral(const BoundaryFourierData& boundary, cplx z, const QuadratureConfig& cfg) {
  return schwarz_integral(boundary, z, CircleRule(cfg.circle_n), cfg.r_max);
}

}  // namespace bcbvp
