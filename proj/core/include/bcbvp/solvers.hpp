#pragma once

#include <functional>
#include <string_view>
#include <variant>
#include <vector>

#include "bcbvp/boundary_data.hpp"
#include "bcbvp/polynomial.hpp"
#include "bcbvp/quadrature.hpp"

namespace bcbvp {

/// How boundary pairings and area integrals are evaluated.
///  - spectral: exact Fourier pairings and closed-form T-operators (polynomial sources only).
///  - quadrature: circle trapezoid and disk rules; required for grid sources.
enum class EvalPath { spectral, quadrature };

std::string_view to_string(EvalPath p);

using Source = std::variant<std::monostate, PolynomialSource, GridSource>;

bool has_source(const Source& s);
/// Zero for an empty source.
Bicomplex evaluate_source(const Source& s, cplx z);

/**
 * Data of the order-n bicomplex Schwarz problem
 *
 *   ∂̄ⁿ w = f,  Re (∂̄ᵏw)± = b±_k on ∂D,  Im (∂̄ᵏw)±(0) = c±_k,  0 ≤ k < n.
 */
struct SchwarzSpec {
  int order = 1;
  std::vector<BoundaryFourierData> boundary_plus;
  std::vector<BoundaryFourierData> boundary_minus;
  std::vector<double> c_plus;
  std::vector<double> c_minus;
  Source source;

  static SchwarzSpec first_order(BoundaryFourierData b1, BoundaryFourierData b2, double c1, double c2,
                                 Source source = {});

  /// Throws std::invalid_argument on length mismatch, order out of [1, 3] or non-real data.
  void validate() const;

  /// The problem solved by ∂̄ᵏw: data k..n−1, same source.
  [[nodiscard]] SchwarzSpec shifted(int k) const;

  [[nodiscard]] bool all_distributions() const;
  [[nodiscard]] bool any_distribution() const;
};

/// Data of the bicomplex Dirichlet problem ∂∂̄u = 0, u = g on ∂D.
struct DirichletSpec {
  BicomplexBoundaryData boundary;
};

enum class Provenance {
  schwarz_homogeneous,
  schwarz_nonhomogeneous,
  schwarz_distributional,
  schwarz_higher_order,
  dirichlet,
  dirichlet_distributional,
};

std::string_view to_string(Provenance p);

struct SolveOptions {
  EvalPath path = EvalPath::spectral;
  QuadratureConfig quadrature{};
};

inline constexpr int kMaxSchwarzOrder = 3;

/// An evaluatable solution w: D → B together with how it was produced.
class SolutionField {
 public:
  using Evaluator = std::function<Bicomplex(cplx)>;

  SolutionField(Evaluator eval, Provenance provenance, EvalPath path, QuadratureConfig resolution = {});

  /// Throws std::domain_error for |z| ≥ 1 (spectral) or |z| > r_max (quadrature).
  Bicomplex operator()(cplx z) const;

  [[nodiscard]] Provenance provenance() const { return provenance_; }
  [[nodiscard]] EvalPath path() const { return path_; }
  [[nodiscard]] const QuadratureConfig& resolution() const { return resolution_; }
  /// Largest admissible |z| (exclusive bound 1 on the spectral path).
  [[nodiscard]] double max_radius() const;

  /// Same field plus `delta`; provenance and path are kept.
  [[nodiscard]] SolutionField perturbed(Evaluator delta) const;

 private:
  Evaluator eval_;
  Provenance provenance_;
  EvalPath path_;
  QuadratureConfig resolution_;
};

/// w = p⁺(conj S[b1] + ic1) + p⁻(S[b2] + ic2), S the Schwarz-kernel pairing.
SolutionField solve_schwarz_homogeneous(const BoundaryFourierData& b1, const BoundaryFourierData& b2, double c1,
                                        double c2, const SolveOptions& opts = {});

/// Homogeneous part plus T_B(f). Order 1, function boundary data.
SolutionField solve_schwarz_nonhomogeneous(const SchwarzSpec& spec, const SolveOptions& opts = {});

/// Order 1 with distributional boundary data (pairings are always spectral).
SolutionField solve_schwarz_distributional(const SchwarzSpec& spec, const SolveOptions& opts = {});

/**
 * Order-n assembly (1 ≤ n ≤ 3) of
 *
 *   w⁻ = i Σ c⁻_k/k! (z+z̄)^k + Σ (−1)^k/(2π k!) ⟨b⁻_k, (P+iQ)(e^{i·} − z + conj(e^{i·} − z))^k⟩
 *        + (−1)^n/(2π (n−1)!) ∬ K[f⁻](ζ, z)(ζ − z + conj(ζ − z))^{n−1} dξ dη
 *
 * and conj w⁺ by the same formula with (b⁺_k, −c⁺_k, conj f⁺).
 */
SolutionField solve_schwarz_higher_order(const SchwarzSpec& spec, const SolveOptions& opts = {});

/// Componentwise Poisson extension. Distribution data is routed to the distributional variant.
SolutionField solve_dirichlet(const DirichletSpec& spec, const SolveOptions& opts = {});
SolutionField solve_dirichlet_distributional(const DirichletSpec& spec, const SolveOptions& opts = {});

/// Dispatches to the order-1 solver matching the data kind, or the order-n solver.
SolutionField solve_schwarz(const SchwarzSpec& spec, const SolveOptions& opts = {});

}  // namespace bcbvp
