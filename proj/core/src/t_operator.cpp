#include "bcbvp/t_operator.hpp"

#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bcbvp/exact_schwarz.hpp"

namespace bcbvp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_quadrature_radius(cplx z, const QuadratureConfig& cfg) {
  if (std::abs(z) > cfg.r_max * (1.0 + 1e-12)) {
    throw std::domain_error("quadrature evaluation at |z| = " + std::to_string(std::abs(z)) +
                            " exceeds r_max = " + std::to_string(cfg.r_max));
  }
}

double real_weight(cplx zeta, cplx z, int power) {
  const double base = 2.0 * (zeta - z).real();
  double w = 1.0;
  for (int k = 0; k < power; ++k) w *= base;
  return w;
}

const DiskRule& cached_rule(const QuadratureConfig& cfg) {
  thread_local std::map<std::pair<int, int>, DiskRule> cache;
  const std::pair key{cfg.disk_nr, cfg.disk_nt};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, DiskRule(cfg.disk_nr, cfg.disk_nt)).first;
  return it->second;
}

void require_order(int n) {
  if (n < 1) throw std::invalid_argument("iteration order must be a positive integer");
  if (n > kMaxIterationOrder) {
    throw std::invalid_argument("iteration order " + std::to_string(n) + " exceeds supported maximum " +
                                std::to_string(kMaxIterationOrder));
  }
}

}  // namespace

cplx area_kernel_integral(const ComplexSource& f, cplx z, int power, const QuadratureConfig& cfg) {
  require_quadrature_radius(z, cfg);
  const DiskRule& rule = cached_rule(cfg);
  if (!cfg.centered_cauchy) {
    return disk_integral(
        [&](cplx zeta) {
          const cplx fv = f(zeta);
          const cplx zb = std::conj(zeta);
          const cplx k = fv / zeta * (zeta + z) / (zeta - z) + std::conj(fv) / zb * (1.0 + z * zb) / (1.0 - z * zb);
          return k * real_weight(zeta, z, power);
        },
        rule, z, cfg.collision_eps);
  }
  const cplx origin_part = disk_integral(
      [&](cplx zeta) {
        const cplx fv = f(zeta);
        const cplx zb = std::conj(zeta);
        const cplx k = -fv / zeta + std::conj(fv) / zb * (1.0 + z * zb) / (1.0 - z * zb);
        return k * real_weight(zeta, z, power);
      },
      rule);
  const cplx cauchy_part = cauchy_area_integral(
      [&](cplx zeta) { return 2.0 * f(zeta) * real_weight(zeta, z, power); }, z, cfg.disk_nr, cfg.disk_nt);
  return origin_part + cauchy_part;
}

cplx area_kernel_integral_star(const ComplexSource& f, cplx z, int power, const QuadratureConfig& cfg) {
  require_quadrature_radius(z, cfg);
  const DiskRule& rule = cached_rule(cfg);
  const cplx zc = std::conj(z);
  if (!cfg.centered_cauchy) {
    return disk_integral(
        [&](cplx zeta) {
          const cplx fv = f(zeta);
          const cplx zb = std::conj(zeta);
          const cplx k =
              fv / zb * std::conj((zeta + z) / (zeta - z)) + std::conj(fv) / zeta * (1.0 + zc * zeta) / (1.0 - zc * zeta);
          return k * real_weight(zeta, z, power);
        },
        rule, z, cfg.collision_eps);
  }
  // f/ζ̄·conj((ζ+z)/(ζ−z)) = 2f/conj(ζ − z) − f/ζ̄
  const cplx origin_part = disk_integral(
      [&](cplx zeta) {
        const cplx fv = f(zeta);
        const cplx k = -fv / std::conj(zeta) + std::conj(fv) / zeta * (1.0 + zc * zeta) / (1.0 - zc * zeta);
        return k * real_weight(zeta, z, power);
      },
      rule);
  // ∬ g/conj(ζ − z) = conj ∬ conj(g)/(ζ − z)
  const cplx cauchy_part = std::conj(cauchy_area_integral(
      [&](cplx zeta) { return std::conj(2.0 * f(zeta)) * real_weight(zeta, z, power); }, z, cfg.disk_nr, cfg.disk_nt));
  return origin_part + cauchy_part;
}

cplx t_complex(const ComplexSource& f, cplx z, const QuadratureConfig& cfg) {
  return -area_kernel_integral(f, z, 0, cfg) / kTwoPi;
}

ComplexPoly t_complex(const ComplexPoly& f) { return exact::solve_schwarz_poly_exact(f, BoundaryFourierData::zero(), 0.0); }

cplx t_complex(const ComplexPoly& f, cplx z) { return t_complex(f)(z); }

cplx t_star_complex(const ComplexSource& f, cplx z, const QuadratureConfig& cfg) {
  return -area_kernel_integral_star(f, z, 0, cfg) / kTwoPi;
}

ComplexPoly t_star_complex(const ComplexPoly& f) { return t_complex(f.conj()).conj(); }

cplx t_star_complex(const ComplexPoly& f, cplx z) { return t_star_complex(f)(z); }

Bicomplex t_bicomplex(const PolynomialSource& f, cplx z) {
  return from_idempotent(t_star_complex(f.plus(), z), t_complex(f.minus(), z));
}

Bicomplex t_bicomplex(const GridSource& f, cplx z, const QuadratureConfig& cfg) {
  const cplx plus = t_star_complex([&](cplx zeta) { return f(zeta).plus(); }, z, cfg);
  const cplx minus = t_complex([&](cplx zeta) { return f(zeta).minus(); }, z, cfg);
  return from_idempotent(plus, minus);
}

std::pair<ComplexPoly, ComplexPoly> t_bicomplex_iterated_components(const PolynomialSource& f, int n) {
  require_order(n);
  ComplexPoly plus = f.plus();
  ComplexPoly minus = f.minus();
  for (int k = 0; k < n; ++k) {
    plus = t_star_complex(plus);
    minus = t_complex(minus);
  }
  return {plus, minus};
}

Bicomplex t_bicomplex_iterated(const PolynomialSource& f, int n, cplx z) {
  const auto [plus, minus] = t_bicomplex_iterated_components(f, n);
  return from_idempotent(plus(z), minus(z));
}

Bicomplex t_bicomplex_iterated(const GridSource& f, int n, cplx z, const QuadratureConfig& cfg) {
  require_order(n);
  if (n == 1) return t_bicomplex(f, z, cfg);
  throw std::invalid_argument(
      "iterating T_B on a grid source would nest singular quadratures; supply a polynomial source instead");
}

}  // namespace bcbvp
