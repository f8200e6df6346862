#pragma once

#include <functional>
#include <utility>

#include "bcbvp/polynomial.hpp"
#include "bcbvp/quadrature.hpp"

namespace bcbvp {

using ComplexSource = std::function<cplx(cplx)>;

/**
 * Area integral ∬_D K(ζ, z)·(ζ − z + conj(ζ − z))^power dξ dη with
 *
 *   K(ζ, z) = f(ζ)/ζ·(ζ + z)/(ζ − z) + conj f(ζ)/conj ζ·(1 + z ζ̄)/(1 − z ζ̄).
 *
 * `power` = 0 gives −2π·T(f)(z); higher powers feed the order-n area term.
 * With `cfg.centered_cauchy` the kernel is split as 2f/(ζ − z) plus a part
 * singular only at the origin; the first piece is integrated about z and the
 * second on the origin-centred DiskRule.
 */
cplx area_kernel_integral(const ComplexSource& f, cplx z, int power, const QuadratureConfig& cfg = {});

/// Conjugate-equation kernel K*(ζ, z) = f/ζ̄·conj((ζ+z)/(ζ−z)) + conj f/ζ·(1 + z̄ζ)/(1 − z̄ζ).
cplx area_kernel_integral_star(const ComplexSource& f, cplx z, int power, const QuadratureConfig& cfg = {});

/// T(f)(z) = −(1/2π)∬ K(ζ, z) dξ dη by quadrature. Requires |z| ≤ cfg.r_max.
cplx t_complex(const ComplexSource& f, cplx z, const QuadratureConfig& cfg = {});
/// T(f) for a polynomial source, in closed form.
ComplexPoly t_complex(const ComplexPoly& f);
cplx t_complex(const ComplexPoly& f, cplx z);

/// T*(f)(z) = −(1/2π)∬ K*(ζ, z) dξ dη by quadrature; ∂/∂z T*(f) = f.
cplx t_star_complex(const ComplexSource& f, cplx z, const QuadratureConfig& cfg = {});
/// Closed form via T*(σ) = conj(T(conj σ)).
ComplexPoly t_star_complex(const ComplexPoly& f);
cplx t_star_complex(const ComplexPoly& f, cplx z);

/// T_B(f) = p⁺ T*(f⁺) + p⁻ T(f⁻).
Bicomplex t_bicomplex(const PolynomialSource& f, cplx z);
Bicomplex t_bicomplex(const GridSource& f, cplx z, const QuadratureConfig& cfg = {});

/// Idempotent components (T*ⁿ f⁺, Tⁿ f⁻) in closed form. 1 ≤ n ≤ 3.
std::pair<ComplexPoly, ComplexPoly> t_bicomplex_iterated_components(const PolynomialSource& f, int n);

/// Tⁿ_B(f)(z) = p⁺ T*ⁿ(f⁺)(z) + p⁻ Tⁿ(f⁻)(z), on the closed-form path only.
Bicomplex t_bicomplex_iterated(const PolynomialSource& f, int n, cplx z);
/// n = 1 is t_bicomplex; n > 1 throws because nested singular quadrature is not supported.
Bicomplex t_bicomplex_iterated(const GridSource& f, int n, cplx z, const QuadratureConfig& cfg = {});

inline constexpr int kMaxIterationOrder = 3;

}  // namespace bcbvp
