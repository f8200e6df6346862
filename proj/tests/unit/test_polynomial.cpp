#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "bcbvp/exact_schwarz.hpp"
#include "bcbvp/polynomial.hpp"

using namespace bcbvp;

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<cplx> kPoints{cplx(0.0), cplx(0.3, 0.2), cplx(-0.5, 0.6), cplx(0.1, -0.85), cplx(0.7, 0.0)};

ComplexPoly sample_poly() {
  return ComplexPoly(ComplexPoly::Terms{{{0, 0}, cplx(1.0, -0.5)}, {{2, 1}, cplx(0.25, 2.0)}, {{0, 3}, -1.5}});
}

}  // namespace

TEST(ComplexPoly, EvaluatesTerms) {
  const ComplexPoly p = sample_poly();
  for (const cplx z : kPoints) {
    const cplx zb = std::conj(z);
    const cplx direct = cplx(1.0, -0.5) + cplx(0.25, 2.0) * z * z * zb - 1.5 * zb * zb * zb;
    EXPECT_LT(std::abs(p(z) - direct), 1e-15);
  }
}

TEST(ComplexPoly, PrunesZeroTerms) {
  const ComplexPoly p = sample_poly() - sample_poly();
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(ComplexPoly::monomial(3, 2, 0.0).is_zero());
}

TEST(ComplexPoly, ConjugateIsPointwise) {
  const ComplexPoly p = sample_poly();
  for (const cplx z : kPoints) EXPECT_LT(std::abs(p.conj()(z) - std::conj(p(z))), 1e-15);
}

TEST(ComplexPoly, ExactWirtingerDerivatives) {
  const ComplexPoly p = sample_poly();
  for (const cplx z : kPoints) {
    const cplx zb = std::conj(z);
    EXPECT_LT(std::abs(p.dz()(z) - cplx(0.25, 2.0) * 2.0 * z * zb), 1e-15);
    EXPECT_LT(std::abs(p.dzbar()(z) - (cplx(0.25, 2.0) * z * z - 4.5 * zb * zb)), 1e-15);
  }
}

TEST(ComplexPoly, ProductMatchesPointwise) {
  const ComplexPoly p = sample_poly();
  const ComplexPoly q(ComplexPoly::Terms{{{1, 0}, 2.0}, {{0, 1}, cplx(0.0, 1.0)}});
  for (const cplx z : kPoints) EXPECT_LT(std::abs((p * q)(z) - p(z) * q(z)), 1e-14);
}

TEST(ComplexPoly, ExactAtOrigin) {
  EXPECT_EQ(ComplexPoly::monomial(3, 0, 2.0)(0.0), cplx(0.0));
  EXPECT_EQ(ComplexPoly::monomial(0, 0, 2.0)(0.0), cplx(2.0));
}

TEST(PolynomialSource, ComponentsRoundTrip) {
  const ComplexPoly fp = sample_poly();
  const ComplexPoly fm = ComplexPoly::monomial(1, 1, cplx(0.0, 3.0));
  const PolynomialSource s = PolynomialSource::from_components(fp, fm);
  for (const cplx z : kPoints) {
    const Bicomplex v = s(z);
    EXPECT_LT(std::abs(v.plus() - fp(z)), 1e-14);
    EXPECT_LT(std::abs(v.minus() - fm(z)), 1e-14);
    EXPECT_LT(std::abs(s.plus()(z) - fp(z)), 1e-14);
    EXPECT_LT(std::abs(s.minus()(z) - fm(z)), 1e-14);
  }
}

TEST(ExactSchwarz, OracleExamples) {
  const auto zero = BoundaryFourierData::zero();
  EXPECT_TRUE(exact::solve_schwarz_poly_exact(ComplexPoly{}, zero, 0.0).is_zero());
  const ComplexPoly t1 = exact::solve_schwarz_poly_exact(ComplexPoly::constant(1.0), zero, 0.0);
  const ComplexPoly tz = exact::solve_schwarz_poly_exact(ComplexPoly::monomial(1, 0), zero, 0.0);
  for (const cplx z : kPoints) {
    EXPECT_LT(std::abs(t1(z) - (std::conj(z) - z)), 1e-15);
    EXPECT_LT(std::abs(tz(z) - (std::norm(z) - 1.0)), 1e-15);
  }
}

TEST(ExactSchwarz, SatisfiesAllThreeConditions) {
  const BoundaryFourierData b({{-2, cplx(0.3, 0.1)}, {0, -0.4}, {2, cplx(0.3, -0.1)}}, DataKind::function, true);
  for (int a = 0; a <= 2; ++a) {
    for (int bb = 0; bb <= 2; ++bb) {
      const ComplexPoly f = ComplexPoly::monomial(a, bb, cplx(0.7, -0.2));
      const double c = 0.35;
      const ComplexPoly w = exact::solve_schwarz_poly_exact(f, b, c);
      // ∂w/∂z̄ = f exactly at the coefficient level
      EXPECT_TRUE((w.dzbar() - f).is_zero() ||
                  std::abs((w.dzbar() - f)(cplx(0.3, 0.4))) < 1e-15);
      EXPECT_NEAR(w(0.0).imag(), c, 1e-15);
      for (int j = 0; j < 32; ++j) {
        const double t = 2 * kPi * j / 32;
        EXPECT_NEAR(w(std::polar(1.0, t)).real(), sample(b, t).real(), 1e-13) << a << "," << bb;
      }
    }
  }
}

TEST(ExactSchwarz, RejectsComplexBoundary) {
  EXPECT_THROW(exact::solve_schwarz_poly_exact(ComplexPoly{}, BoundaryFourierData::exponential(1), 0.0),
               std::invalid_argument);
}

TEST(ExactSchwarz, HigherOrderRecursion) {
  const std::vector<BoundaryFourierData> h{BoundaryFourierData::cosine(1), BoundaryFourierData::constant(2.0)};
  const std::vector<double> c{0.5, -1.0};
  const ComplexPoly f = ComplexPoly::monomial(0, 1, 3.0);
  const ComplexPoly w = exact::solve_schwarz_higher_order_exact(f, h, c);
  const ComplexPoly dw = w.dzbar();
  EXPECT_LT(std::abs((dw.dzbar() - f)(cplx(0.2, 0.1))), 1e-14);
  for (int j = 0; j < 16; ++j) {
    const double t = 2 * kPi * j / 16;
    const cplx zeta = std::polar(1.0, t);
    EXPECT_NEAR(w(zeta).real(), std::cos(t), 1e-13);
    EXPECT_NEAR(dw(zeta).real(), 2.0, 1e-13);
  }
  EXPECT_NEAR(w(0.0).imag(), 0.5, 1e-15);
  EXPECT_NEAR(dw(0.0).imag(), -1.0, 1e-15);
}

TEST(ExactSchwarz, ExtensionsAndTraces) {
  const BoundaryFourierData d({{-1, cplx(0.5, 0.5)}, {0, 1.0}, {3, 2.0}});
  const ComplexPoly p = exact::poisson_extension(d);
  for (double r : {0.0, 0.4, 0.9}) {
    for (double t : {0.0, 1.2}) EXPECT_LT(std::abs(p(std::polar(r, t)) - pair_poisson_kernel(d, r, t)), 1e-14);
  }
  const BoundaryFourierData trace = exact::circle_trace(ComplexPoly::monomial(2, 1, 3.0));
  EXPECT_EQ(trace.coeffs().size(), 1u);
  EXPECT_EQ(trace.coeff(1), cplx(3.0));
}
