#pragma once

#include <array>
#include <complex>

namespace bcbvp {

using cplx = std::complex<double>;

inline constexpr cplx I{0.0, 1.0};

/// Idempotent coordinates (z⁺, z⁻) of a bicomplex number.
struct Idempotent {
  cplx plus;
  cplx minus;
};

/**
 * Bicomplex number z = z1 + j z2 with z1, z2 complex, j² = −1, ij = ji.
 *
 * Cartesian components are stored; the idempotent view
 * z = p⁺z⁺ + p⁻z⁻ with p± = (1 ± ji)/2 is computed on demand:
 *
 *   z⁺ = z1 − i z2,   z⁻ = z1 + i z2,
 *   z1 = (z⁺ + z⁻)/2, z2 = i (z⁺ − z⁻)/2.
 *
 * In idempotent coordinates multiplication is componentwise. There is no
 * division: p⁺ and p⁻ are zero divisors.
 */
class Bicomplex {
 public:
  constexpr Bicomplex() = default;
  constexpr Bicomplex(cplx z1, cplx z2 = {}) : z1_(z1), z2_(z2) {}
  constexpr Bicomplex(double re) : z1_(re) {}

  [[nodiscard]] constexpr cplx z1() const { return z1_; }
  [[nodiscard]] constexpr cplx z2() const { return z2_; }

  [[nodiscard]] Idempotent idempotent() const { return {z1_ - I * z2_, z1_ + I * z2_}; }
  [[nodiscard]] cplx plus() const { return z1_ - I * z2_; }
  [[nodiscard]] cplx minus() const { return z1_ + I * z2_; }

  static Bicomplex from_idempotent(cplx z_plus, cplx z_minus) {
    return {0.5 * (z_plus + z_minus), 0.5 * I * (z_plus - z_minus)};
  }

  /// Serialized as [Re z1, Im z1, Re z2, Im z2].
  [[nodiscard]] std::array<double, 4> to_array() const {
    return {z1_.real(), z1_.imag(), z2_.real(), z2_.imag()};
  }
  static Bicomplex from_array(const std::array<double, 4>& a) { return {{a[0], a[1]}, {a[2], a[3]}}; }

  Bicomplex& operator+=(const Bicomplex& o) {
    z1_ += o.z1_;
    z2_ += o.z2_;
    return *this;
  }
  Bicomplex& operator-=(const Bicomplex& o) {
    z1_ -= o.z1_;
    z2_ -= o.z2_;
    return *this;
  }
  Bicomplex& operator*=(const Bicomplex& o);
  Bicomplex& operator*=(cplx s) {
    z1_ *= s;
    z2_ *= s;
    return *this;
  }

  friend bool operator==(const Bicomplex&, const Bicomplex&) = default;

 private:
  cplx z1_{};
  cplx z2_{};
};

/// (z1 w1 − z2 w2) + j (z1 w2 + z2 w1).
Bicomplex mul(const Bicomplex& a, const Bicomplex& b);

inline Bicomplex& Bicomplex::operator*=(const Bicomplex& o) { return *this = mul(*this, o); }

inline Bicomplex operator+(Bicomplex a, const Bicomplex& b) { return a += b; }
inline Bicomplex operator-(Bicomplex a, const Bicomplex& b) { return a -= b; }
inline Bicomplex operator-(const Bicomplex& a) { return {-a.z1(), -a.z2()}; }
inline Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) { return mul(a, b); }
inline Bicomplex operator*(Bicomplex a, cplx s) { return a *= s; }
inline Bicomplex operator*(cplx s, Bicomplex a) { return a *= s; }
inline Bicomplex operator*(Bicomplex a, double s) { return a *= cplx(s); }
inline Bicomplex operator*(double s, Bicomplex a) { return a *= cplx(s); }

inline Idempotent to_idempotent(const Bicomplex& z) { return z.idempotent(); }
inline Bicomplex from_idempotent(cplx z_plus, cplx z_minus) { return Bicomplex::from_idempotent(z_plus, z_minus); }

/// The idempotents p⁺ = (1 + ji)/2 and p⁻ = (1 − ji)/2.
inline Bicomplex p_plus() { return {0.5, 0.5 * I}; }
inline Bicomplex p_minus() { return {0.5, -0.5 * I}; }
inline Bicomplex j_unit() { return {0.0, 1.0}; }

/// Value of the bicomplex norm ‖z‖ = sqrt((|z⁺|² + |z⁻|²)/2).
class BNorm {
 public:
  explicit BNorm(double v) : value_(v) {}
  [[nodiscard]] double value() const { return value_; }
  explicit operator double() const { return value_; }
  friend auto operator<=>(const BNorm&, const BNorm&) = default;

 private:
  double value_;
};

BNorm bnorm(const Bicomplex& z);

/// True when exactly one idempotent component vanishes (|·| ≤ tol).
bool is_zero_divisor(const Bicomplex& z, double tol = 1e-14);

}  // namespace bcbvp
