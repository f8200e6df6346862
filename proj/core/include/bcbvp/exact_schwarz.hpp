#pragma once

#include <span>

#include "bcbvp/boundary_data.hpp"
#include "bcbvp/polynomial.hpp"

/// Closed-form solutions of the complex Schwarz problem for polynomial
/// sources and trigonometric-polynomial boundary data. Everything here stays
/// inside the polynomials in (z, z̄), so results are exact up to rounding in
/// the coefficients. This is the reference the quadrature path is measured
/// against.
namespace bcbvp::exact {

/// Holomorphic polynomial ĝ(0) + 2 Σ_{k≥1} ĝ(k) z^k (the Schwarz-kernel pairing).
ComplexPoly schwarz_extension(const BoundaryFourierData& data);

/// Harmonic polynomial Σ_{k≥0} ĝ(k) z^k + Σ_{k≥1} ĝ(−k) z̄^k (the Poisson pairing).
ComplexPoly poisson_extension(const BoundaryFourierData& data);

/// Restriction of p to |z| = 1 as Fourier data (z̄ = 1/z on the circle).
BoundaryFourierData circle_trace(const ComplexPoly& p);

/// Real part of a circle trace: (ĝ(k) + conj ĝ(−k))/2.
BoundaryFourierData real_part(const BoundaryFourierData& data);

/**
 * Unique solution of ∂w/∂z̄ = source, Re w = boundary on |z| = 1,
 * Im w(0) = c.
 *
 * Built as particular solution Σ c_ab z^a z̄^{b+1}/(b+1), plus the Schwarz
 * extension of (boundary − Re particular) on the circle, plus ic. The
 * boundary data must be real-valued (either kind).
 */
ComplexPoly solve_schwarz_poly_exact(const ComplexPoly& source, const BoundaryFourierData& boundary, double c);

/**
 * Order-n problem ∂ⁿw/∂z̄ⁿ = source with Re(∂ᵏw/∂z̄ᵏ) = h_k on the circle and
 * Im(∂ᵏw/∂z̄ᵏ)(0) = c_k, solved by descending through the first-order problems
 * v_{n−1}, …, v_0 = w.
 */
ComplexPoly solve_schwarz_higher_order_exact(const ComplexPoly& source, std::span<const BoundaryFourierData> h,
                                             std::span<const double> c);

}  // namespace bcbvp::exact
