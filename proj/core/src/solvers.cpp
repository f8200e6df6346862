#include "bcbvp/solvers.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

#include "bcbvp/t_operator.hpp"

namespace bcbvp {

namespace {

using ComplexField = std::function<cplx(cplx)>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

void require_real(const BoundaryFourierData& b, const char* what) {
  if (!b.is_conjugate_symmetric(1e-12)) {
    throw std::invalid_argument(std::string(what) + ": Schwarz boundary data must be real-valued");
  }
}

/// S[b](z) = (1/2π)⟨b, P + iQ⟩ on the requested path.
ComplexField schwarz_term(const BoundaryFourierData& b, const SolveOptions& opts) {
  if (opts.path == EvalPath::quadrature && b.kind() == DataKind::function) {
    const CircleRule rule(opts.quadrature.circle_n);
    const double r_max = opts.quadrature.r_max;
    return [b, rule, r_max](cplx z) { return schwarz_integral(b, z, rule, r_max); };
  }
  return [b](cplx z) { return pair_schwarz_kernel(b, z); };
}

/// p⁺T*(f⁺) + p⁻T(f⁻) on the requested path.
SolutionField::Evaluator source_term(const Source& source, const SolveOptions& opts) {
  if (std::holds_alternative<std::monostate>(source)) {
    return [](cplx) { return Bicomplex{}; };
  }
  if (const auto* poly = std::get_if<PolynomialSource>(&source)) {
    if (opts.path == EvalPath::spectral) {
      ComplexPoly plus = t_star_complex(poly->plus());
      ComplexPoly minus = t_complex(poly->minus());
      return [plus = std::move(plus), minus = std::move(minus)](cplx z) { return from_idempotent(plus(z), minus(z)); };
    }
    const GridSource grid{[p = *poly](cplx z) { return p(z); }};
    return [grid, cfg = opts.quadrature](cplx z) { return t_bicomplex(grid, z, cfg); };
  }
  const auto& grid = std::get<GridSource>(source);
  if (opts.path == EvalPath::spectral) {
    throw std::invalid_argument("grid sources are only supported on the quadrature path");
  }
  return [grid, cfg = opts.quadrature](cplx z) { return t_bicomplex(grid, z, cfg); };
}

SolutionField make_first_order(const SchwarzSpec& spec, const SolveOptions& opts, Provenance provenance) {
  spec.validate();
  if (spec.order != 1) throw std::invalid_argument("first-order solver called with order " + std::to_string(spec.order));
  auto plus = schwarz_term(spec.boundary_plus[0], opts);
  auto minus = schwarz_term(spec.boundary_minus[0], opts);
  auto area = source_term(spec.source, opts);
  const double c1 = spec.c_plus[0];
  const double c2 = spec.c_minus[0];
  return SolutionField(
      [=](cplx z) {
        const Bicomplex homogeneous = from_idempotent(std::conj(plus(z)) + I * c1, minus(z) + I * c2);
        return homogeneous + area(z);
      },
      provenance, opts.path, opts.quadrature);
}

/// One idempotent component of the order-n formula:
///   i Σ c_k/k! (z+z̄)^k + Σ (−1)^k/k! M_k(h_k; z) + A_n(f; z).
class HigherOrderComponent {
 public:
  HigherOrderComponent(const std::vector<BoundaryFourierData>& h, std::vector<double> c,
                       std::variant<std::monostate, ComplexPoly, ComplexField> source, const SolveOptions& opts)
      : n_(static_cast<int>(h.size())), c_(std::move(c)), opts_(opts) {
    const BoundaryFourierData two_cos = BoundaryFourierData::cosine(1).scaled(2.0);
    for (int k = 0; k < n_; ++k) {
      const auto& hk = h[static_cast<std::size_t>(k)];
      Moment m{hk, {}};
      BoundaryFourierData power = hk;
      for (int j = 0; j <= k; ++j) {
        m.weighted.push_back(power);
        power = power.multiply(two_cos);
      }
      moments_.push_back(std::move(m));
    }
    if (const auto* poly = std::get_if<ComplexPoly>(&source)) {
      // T(f·(ζ + ζ̄)^j), j = 0..n−1
      const ComplexPoly two_x(ComplexPoly::Terms{{{1, 0}, 1.0}, {{0, 1}, 1.0}});
      ComplexPoly weighted = *poly;
      for (int j = 0; j < n_; ++j) {
        area_polys_.push_back(t_complex(weighted));
        weighted = weighted * two_x;
      }
    } else if (const auto* fn = std::get_if<ComplexField>(&source)) {
      area_fn_ = *fn;
    }
  }

  cplx operator()(cplx z) const {
    const double two_x = 2.0 * z.real();
    cplx sum{};
    for (int k = 0; k < n_; ++k) sum += I * c_[static_cast<std::size_t>(k)] / factorial(k) * std::pow(two_x, k);
    for (int k = 0; k < n_; ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      sum += sign / factorial(k) * moment(k, z);
    }
    sum += area(z);
    return sum;
  }

 private:
  struct Moment {
    BoundaryFourierData data;
    std::vector<BoundaryFourierData> weighted;  // data·(2 cos t)^j
  };

  // (1/2π)⟨h_k, (P + iQ)(2 cos t − 2x)^k⟩
  cplx moment(int k, cplx z) const {
    const auto& m = moments_[static_cast<std::size_t>(k)];
    const double two_x = 2.0 * z.real();
    if (opts_.path == EvalPath::quadrature && m.data.kind() == DataKind::function) {
      if (std::abs(z) > opts_.quadrature.r_max * (1.0 + 1e-12)) {
        throw std::domain_error("quadrature evaluation beyond r_max = " + std::to_string(opts_.quadrature.r_max));
      }
      return circle_integral(
          [&](double t) {
            const cplx zeta = std::polar(1.0, t);
            return sample(m.data, t) * (zeta + z) / (zeta - z) * std::pow(2.0 * std::cos(t) - two_x, k);
          },
          CircleRule(opts_.quadrature.circle_n));
    }
    cplx sum{};
    for (int j = 0; j <= k; ++j) {
      sum += binomial(k, j) * std::pow(-two_x, k - j) * pair_schwarz_kernel(m.weighted[static_cast<std::size_t>(j)], z);
    }
    return sum;
  }

  cplx area(cplx z) const {
    const int p = n_ - 1;
    if (!area_polys_.empty()) {
      // (−1)^n/(2π p!)·∬K·(2Re(ζ−z))^p = (−1)^p/p!·Σ_j C(p,j)(−2x)^{p−j} T(f(ζ+ζ̄)^j)
      const double two_x = 2.0 * z.real();
      cplx sum{};
      for (int j = 0; j <= p; ++j) {
        sum += binomial(p, j) * std::pow(-two_x, p - j) * area_polys_[static_cast<std::size_t>(j)](z);
      }
      return ((p % 2 == 0) ? 1.0 : -1.0) / factorial(p) * sum;
    }
    if (area_fn_) {
      const double sign = (n_ % 2 == 0) ? 1.0 : -1.0;
      return sign / (kTwoPi * factorial(p)) * area_kernel_integral(area_fn_, z, p, opts_.quadrature);
    }
    return {};
  }

  int n_;
  std::vector<double> c_;
  SolveOptions opts_;
  std::vector<Moment> moments_;
  std::vector<ComplexPoly> area_polys_;
  ComplexField area_fn_;
};

}  // namespace

std::string_view to_string(EvalPath p) { return p == EvalPath::spectral ? "spectral" : "quadrature"; }

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::schwarz_homogeneous:
      return "schwarz_homogeneous";
    case Provenance::schwarz_nonhomogeneous:
      return "schwarz_nonhomogeneous";
    case Provenance::schwarz_distributional:
      return "schwarz_distributional";
    case Provenance::schwarz_higher_order:
      return "schwarz_higher_order";
    case Provenance::dirichlet:
      return "dirichlet";
    case Provenance::dirichlet_distributional:
      return "dirichlet_distributional";
  }
  return "unknown";
}

bool has_source(const Source& s) {
  if (std::holds_alternative<std::monostate>(s)) return false;
  if (const auto* p = std::get_if<PolynomialSource>(&s)) return !p->is_zero();
  return true;
}

Bicomplex evaluate_source(const Source& s, cplx z) {
  if (const auto* p = std::get_if<PolynomialSource>(&s)) return (*p)(z);
  if (const auto* g = std::get_if<GridSource>(&s)) return (*g)(z);
  return {};
}

SchwarzSpec SchwarzSpec::first_order(BoundaryFourierData b1, BoundaryFourierData b2, double c1, double c2,
                                     Source source) {
  SchwarzSpec s;
  s.order = 1;
  s.boundary_plus = {std::move(b1)};
  s.boundary_minus = {std::move(b2)};
  s.c_plus = {c1};
  s.c_minus = {c2};
  s.source = std::move(source);
  return s;
}

void SchwarzSpec::validate() const {
  if (order < 1 || order > kMaxSchwarzOrder) {
    throw std::invalid_argument("Schwarz order must lie in [1, " + std::to_string(kMaxSchwarzOrder) + "], got " +
                                std::to_string(order));
  }
  const auto n = static_cast<std::size_t>(order);
  if (boundary_plus.size() != n || boundary_minus.size() != n || c_plus.size() != n || c_minus.size() != n) {
    throw std::invalid_argument("Schwarz spec of order " + std::to_string(order) +
                                " needs that many boundary data and constants per component");
  }
  for (const auto& b : boundary_plus) require_real(b, "boundary_plus");
  for (const auto& b : boundary_minus) require_real(b, "boundary_minus");
}

SchwarzSpec SchwarzSpec::shifted(int k) const {
  if (k < 0 || k >= order) throw std::invalid_argument("shift outside [0, order)");
  SchwarzSpec s;
  s.order = order - k;
  s.boundary_plus.assign(boundary_plus.begin() + k, boundary_plus.end());
  s.boundary_minus.assign(boundary_minus.begin() + k, boundary_minus.end());
  s.c_plus.assign(c_plus.begin() + k, c_plus.end());
  s.c_minus.assign(c_minus.begin() + k, c_minus.end());
  s.source = source;
  return s;
}

bool SchwarzSpec::all_distributions() const {
  for (const auto* side : {&boundary_plus, &boundary_minus}) {
    for (const auto& b : *side) {
      if (b.kind() != DataKind::distribution) return false;
    }
  }
  return true;
}

bool SchwarzSpec::any_distribution() const {
  for (const auto* side : {&boundary_plus, &boundary_minus}) {
    for (const auto& b : *side) {
      if (b.kind() == DataKind::distribution) return true;
    }
  }
  return false;
}

SolutionField::SolutionField(Evaluator eval, Provenance provenance, EvalPath path, QuadratureConfig resolution)
    : eval_(std::move(eval)), provenance_(provenance), path_(path), resolution_(resolution) {}

double SolutionField::max_radius() const { return path_ == EvalPath::spectral ? 1.0 : resolution_.r_max; }

Bicomplex SolutionField::operator()(cplx z) const {
  const double r = std::abs(z);
  // relative slack absorbs rounding in polar(r_max, θ)
  if (path_ == EvalPath::spectral ? !(r < 1.0) : !(r <= resolution_.r_max * (1.0 + 1e-12))) {
    throw std::domain_error("solution field evaluated at |z| = " + std::to_string(r) + " outside its domain (" +
                            std::string(to_string(path_)) + " path)");
  }
  return eval_(z);
}

SolutionField SolutionField::perturbed(Evaluator delta) const {
  SolutionField out = *this;
  out.eval_ = [base = eval_, delta = std::move(delta)](cplx z) { return base(z) + delta(z); };
  return out;
}

SolutionField solve_schwarz_homogeneous(const BoundaryFourierData& b1, const BoundaryFourierData& b2, double c1,
                                        double c2, const SolveOptions& opts) {
  require_real(b1, "b1");
  require_real(b2, "b2");
  auto plus = schwarz_term(b1, opts);
  auto minus = schwarz_term(b2, opts);
  return SolutionField(
      [=](cplx z) { return from_idempotent(std::conj(plus(z)) + I * c1, minus(z) + I * c2); },
      Provenance::schwarz_homogeneous, opts.path, opts.quadrature);
}

SolutionField solve_schwarz_nonhomogeneous(const SchwarzSpec& spec, const SolveOptions& opts) {
  if (spec.any_distribution()) {
    throw std::invalid_argument("distributional boundary data: use solve_schwarz_distributional");
  }
  return make_first_order(spec, opts, Provenance::schwarz_nonhomogeneous);
}

SolutionField solve_schwarz_distributional(const SchwarzSpec& spec, const SolveOptions& opts) {
  if (!spec.all_distributions()) {
    throw std::invalid_argument("solve_schwarz_distributional expects distribution-kind boundary data");
  }
  return make_first_order(spec, opts, Provenance::schwarz_distributional);
}

SolutionField solve_schwarz_higher_order(const SchwarzSpec& spec, const SolveOptions& opts) {
  spec.validate();
  using SourceVariant = std::variant<std::monostate, ComplexPoly, ComplexField>;
  SourceVariant src_plus;
  SourceVariant src_minus;
  if (const auto* poly = std::get_if<PolynomialSource>(&spec.source)) {
    if (opts.path == EvalPath::spectral) {
      src_plus = poly->plus().conj();
      src_minus = poly->minus();
    } else {
      src_plus = ComplexField([p = poly->plus().conj()](cplx z) { return p(z); });
      src_minus = ComplexField([p = poly->minus()](cplx z) { return p(z); });
    }
  } else if (const auto* grid = std::get_if<GridSource>(&spec.source)) {
    if (opts.path == EvalPath::spectral) {
      throw std::invalid_argument("grid sources are only supported on the quadrature path");
    }
    src_plus = ComplexField([g = *grid](cplx z) { return std::conj(g(z).plus()); });
    src_minus = ComplexField([g = *grid](cplx z) { return g(z).minus(); });
  }

  std::vector<double> neg_c_plus;
  for (double c : spec.c_plus) neg_c_plus.push_back(-c);
  const HigherOrderComponent conj_plus(spec.boundary_plus, std::move(neg_c_plus), std::move(src_plus), opts);
  const HigherOrderComponent minus(spec.boundary_minus, spec.c_minus, std::move(src_minus), opts);
  return SolutionField([=](cplx z) { return from_idempotent(std::conj(conj_plus(z)), minus(z)); },
                       Provenance::schwarz_higher_order, opts.path, opts.quadrature);
}

SolutionField solve_schwarz(const SchwarzSpec& spec, const SolveOptions& opts) {
  spec.validate();
  if (spec.order > 1) return solve_schwarz_higher_order(spec, opts);
  if (spec.any_distribution()) {
    // mixed data: every function is also a distribution, so pair everything spectrally
    SchwarzSpec s = spec;
    for (auto* side : {&s.boundary_plus, &s.boundary_minus}) {
      for (auto& b : *side) b = b.with_kind(DataKind::distribution);
    }
    return solve_schwarz_distributional(s, opts);
  }
  if (!has_source(spec.source)) {
    return solve_schwarz_homogeneous(spec.boundary_plus[0], spec.boundary_minus[0], spec.c_plus[0], spec.c_minus[0],
                                     opts);
  }
  return solve_schwarz_nonhomogeneous(spec, opts);
}

SolutionField solve_dirichlet(const DirichletSpec& spec, const SolveOptions& opts) {
  if (spec.boundary.kind() == DataKind::distribution) return solve_dirichlet_distributional(spec, opts);
  const auto& gp = spec.boundary.plus();
  const auto& gm = spec.boundary.minus();
  if (opts.path == EvalPath::quadrature) {
    const CircleRule rule(opts.quadrature.circle_n);
    auto poisson_integral = [rule](const BoundaryFourierData& g, cplx z) {
      const double r = std::abs(z);
      const double theta = std::arg(z);
      return circle_integral([&](double t) { return sample(g, t) * poisson(r, theta - t); }, rule);
    };
    return SolutionField(
        [=](cplx z) { return from_idempotent(poisson_integral(gp, z), poisson_integral(gm, z)); },
        Provenance::dirichlet, opts.path, opts.quadrature);
  }
  return SolutionField(
      [=](cplx z) { return from_idempotent(pair_poisson_kernel(gp, z), pair_poisson_kernel(gm, z)); },
      Provenance::dirichlet, opts.path, opts.quadrature);
}

SolutionField solve_dirichlet_distributional(const DirichletSpec& spec, const SolveOptions& opts) {
  if (spec.boundary.kind() != DataKind::distribution) {
    throw std::invalid_argument("solve_dirichlet_distributional expects distribution-kind boundary data");
  }
  const auto& gp = spec.boundary.plus();
  const auto& gm = spec.boundary.minus();
  return SolutionField(
      [=](cplx z) { return from_idempotent(pair_poisson_kernel(gp, z), pair_poisson_kernel(gm, z)); },
      Provenance::dirichlet_distributional, opts.path, opts.quadrature);
}

}  // namespace bcbvp
