#pragma once

#include <map>
#include <span>
#include <stdexcept>

#include "bcbvp/bicomplex.hpp"

namespace bcbvp {

enum class DataKind { function, distribution };

/// Raised when a boundary sample set is too short for the requested bandwidth.
class AliasingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Finite two-sided Fourier data ĝ(k), |k| ≤ K, of a function or distribution
 * on the unit circle, with ĝ(k) = (1/2π)∫ g(t) e^{−ikt} dt.
 *
 * Distributions are limited to finitely many moments (trigonometric
 * polynomials and truncated Dirac masses). Coefficients outside the stored
 * map are zero.
 */
class BoundaryFourierData {
 public:
  using Coeffs = std::map<int, cplx>;

  BoundaryFourierData() = default;
  /// Throws std::invalid_argument if `real_valued` and ĝ(−k) ≠ conj ĝ(k) beyond 1e-12.
  BoundaryFourierData(Coeffs coeffs, DataKind kind = DataKind::function, bool real_valued = false);

  static BoundaryFourierData zero(DataKind kind = DataKind::function);
  static BoundaryFourierData constant(double c, DataKind kind = DataKind::function);
  /// cos(m t), real-valued.
  static BoundaryFourierData cosine(int m = 1, DataKind kind = DataKind::function);
  /// e^{imt}, complex-valued.
  static BoundaryFourierData exponential(int m, DataKind kind = DataKind::function);
  /// Dirac mass at t0 truncated to |k| ≤ K: ĝ(k) = e^{−ikt0}/2π.
  static BoundaryFourierData dirac(double t0 = 0.0, int bandwidth = 64);

  [[nodiscard]] const Coeffs& coeffs() const { return coeffs_; }
  [[nodiscard]] DataKind kind() const { return kind_; }
  [[nodiscard]] bool real_valued() const { return real_; }
  [[nodiscard]] bool empty() const { return coeffs_.empty(); }
  /// Largest |k| with a stored coefficient (0 when empty).
  [[nodiscard]] int bandwidth() const;
  [[nodiscard]] cplx coeff(int k) const;

  /// Checks the conjugate symmetry of the stored coefficients.
  [[nodiscard]] bool is_conjugate_symmetric(double tol = 1e-12) const;

  /// Same coefficients, different kind flag.
  [[nodiscard]] BoundaryFourierData with_kind(DataKind kind) const;

  /// Coefficient convolution with another trigonometric polynomial (pointwise product).
  [[nodiscard]] BoundaryFourierData multiply(const BoundaryFourierData& trig) const;
  [[nodiscard]] BoundaryFourierData scaled(double s) const;
  [[nodiscard]] BoundaryFourierData plus(const BoundaryFourierData& other) const;

 private:
  Coeffs coeffs_;
  DataKind kind_ = DataKind::function;
  bool real_ = false;
};

/// g(t) = Σ ĝ(k) e^{ikt}. Throws std::invalid_argument for distribution data.
cplx sample(const BoundaryFourierData& d, double t);

/**
 * Discrete Fourier coefficients of N samples taken at t_m = 2πm/N.
 *
 * `bandwidth` < 0 selects the largest admissible K = (N−1)/2. Coefficients of
 * magnitude below 1e-14·max|sample| are dropped. Throws AliasingError when
 * N < 2K + 1. Real input samples yield real-valued (symmetrised) data.
 */
BoundaryFourierData fourier_from_samples(std::span<const cplx> samples, int bandwidth = -1);

/// (1/2π)⟨g, P_r(θ−·) + iQ_r(θ−·)⟩ = ĝ(0) + 2 Σ_{k≥1} ĝ(k) z^k, z = re^{iθ}. Requires 0 ≤ r < 1.
cplx pair_schwarz_kernel(const BoundaryFourierData& d, double r, double theta);
cplx pair_schwarz_kernel(const BoundaryFourierData& d, cplx z);

/// (1/2π)⟨g, P_r(θ−·)⟩ = Σ ĝ(k) r^{|k|} e^{ikθ}. Requires 0 ≤ r < 1.
cplx pair_poisson_kernel(const BoundaryFourierData& d, double r, double theta);
cplx pair_poisson_kernel(const BoundaryFourierData& d, cplx z);

/// g = p⁺g⁺ + p⁻g⁻ with both components of the same kind.
class BicomplexBoundaryData {
 public:
  BicomplexBoundaryData() = default;
  BicomplexBoundaryData(BoundaryFourierData plus, BoundaryFourierData minus);

  [[nodiscard]] const BoundaryFourierData& plus() const { return plus_; }
  [[nodiscard]] const BoundaryFourierData& minus() const { return minus_; }
  [[nodiscard]] DataKind kind() const { return plus_.kind(); }

 private:
  BoundaryFourierData plus_;
  BoundaryFourierData minus_;
};

}  // namespace bcbvp
