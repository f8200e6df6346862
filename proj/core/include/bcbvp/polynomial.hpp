#pragma once

#include <functional>
#include <map>
#include <utility>

#include "bcbvp/bicomplex.hpp"

namespace bcbvp {

/// z^n by repeated multiplication (exact at z = 0).
inline cplx ipow(cplx z, int n) {
  cplx r = 1.0;
  for (int k = 0; k < n; ++k) r *= z;
  return r;
}

/// Bidegree (a, b) of the monomial z^a z̄^b.
using Bidegree = std::pair<int, int>;

/// Complex polynomial Σ c_ab z^a z̄^b in z and z̄.
class ComplexPoly {
 public:
  using Terms = std::map<Bidegree, cplx>;

  ComplexPoly() = default;
  explicit ComplexPoly(Terms terms);
  static ComplexPoly constant(cplx c);
  static ComplexPoly monomial(int a, int b, cplx c = 1.0);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] cplx coeff(int a, int b) const;

  [[nodiscard]] cplx operator()(cplx z) const;

  /// Pointwise complex conjugate: Σ conj(c_ab) z^b z̄^a.
  [[nodiscard]] ComplexPoly conj() const;
  /// Exact ∂/∂z and ∂/∂z̄.
  [[nodiscard]] ComplexPoly dz() const;
  [[nodiscard]] ComplexPoly dzbar() const;

  ComplexPoly& operator+=(const ComplexPoly& o);
  ComplexPoly& operator-=(const ComplexPoly& o);
  ComplexPoly& operator*=(cplx s);
  friend ComplexPoly operator+(ComplexPoly a, const ComplexPoly& b) { return a += b; }
  friend ComplexPoly operator-(ComplexPoly a, const ComplexPoly& b) { return a -= b; }
  friend ComplexPoly operator*(ComplexPoly a, cplx s) { return a *= s; }
  friend ComplexPoly operator*(cplx s, ComplexPoly a) { return a *= s; }
  friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);

 private:
  void prune();
  Terms terms_;
};

/// f(ζ) = Σ c_ab ζ^a ζ̄^b with bicomplex coefficients.
class PolynomialSource {
 public:
  using Terms = std::map<Bidegree, Bicomplex>;

  PolynomialSource() = default;
  explicit PolynomialSource(Terms terms);
  /// Assemble p⁺ f_plus + p⁻ f_minus from idempotent component polynomials.
  static PolynomialSource from_components(const ComplexPoly& f_plus, const ComplexPoly& f_minus);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] ComplexPoly plus() const;
  [[nodiscard]] ComplexPoly minus() const;
  [[nodiscard]] Bicomplex operator()(cplx z) const;

 private:
  Terms terms_;
};

/// A source known only through point evaluation; quadrature path only.
struct GridSource {
  std::function<Bicomplex(cplx)> evaluator;
  [[nodiscard]] Bicomplex operator()(cplx z) const { return evaluator(z); }
};

}  // namespace bcbvp
