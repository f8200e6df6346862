#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "bcbvp/solvers.hpp"

namespace bcbvp {

/// Invalid problem description; `pointer()` is the JSON pointer of the offending value.
class SpecError : public std::invalid_argument {
 public:
  SpecError(std::string pointer, const std::string& message);
  [[nodiscard]] const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

enum class ProblemKind { schwarz, dirichlet };

/// Additive a·z̄ terms injected into the idempotent components after solving.
/// Only used to build deliberately wrong fields for negative controls.
struct Perturbation {
  cplx plus_conj_z{};
  cplx minus_conj_z{};
  [[nodiscard]] bool active() const { return plus_conj_z != cplx{} || minus_conj_z != cplx{}; }
};

struct ProblemSpec {
  ProblemKind kind = ProblemKind::schwarz;
  EvalPath path = EvalPath::spectral;
  std::optional<SchwarzSpec> schwarz;
  std::optional<DirichletSpec> dirichlet;
  Perturbation perturbation;
};

/**
 * Accepted layout:
 *
 *   {"problem": "schwarz" | "dirichlet", "n": 1..3, "path": "spectral" | "quadrature",
 *    "boundary": {"plus": DATA | [DATA...], "minus": ...},
 *    "constants": {"plus": x | [x...], "minus": ...},
 *    "source": {"terms": [[a, b, re_z1, im_z1, re_z2, im_z2], ...]},
 *    "perturbation": {"plus_conj_z": [re, im], "minus_conj_z": [re, im]}}
 *
 * DATA is one of
 *   {"kind": "function" | "distribution", "coeffs": [[k, re, im], ...]}
 *   {"kind": ..., "samples": [x, ...] | [[re, im], ...]}     (equispaced on [0, 2π))
 *   {"dirac": {"t0": t, "bandwidth": K}}
 *
 * Schwarz data arrays have length n; a bare object or number is accepted for n = 1.
 * Dirichlet takes one DATA per component. Missing constants and source are zero.
 */
ProblemSpec parse_problem(const nlohmann::json& doc);
/// Parses text first; malformed JSON raises SpecError with an empty pointer.
ProblemSpec parse_problem_text(std::string_view text);

nlohmann::json boundary_to_json(const BoundaryFourierData& d);

/// Dispatches to the matching solver and applies any perturbation.
SolutionField solve(const ProblemSpec& spec, const QuadratureConfig& quadrature = {});

}  // namespace bcbvp
