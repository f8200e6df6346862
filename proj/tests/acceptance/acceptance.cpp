// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "bcbvp/bicomplex.hpp"
#include "bcbvp/boundary_data.hpp"
#include "bcbvp/quadrature.hpp"
#include "bcbvp/solvers.hpp"
#include "bcbvp/t_operator.hpp"
#include "bcbvp/verification.hpp"
#include "cli.hpp"

using namespace bcbvp;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

struct Check {
  std::string what;
  double value;
  double limit;
  [[nodiscard]] bool ok() const { return std::isfinite(value) && value <= limit; }
};

struct Outcome {
  std::vector<Check> checks;
  void add(std::string what, double value, double limit) { checks.push_back({std::move(what), value, limit}); }
  void require(std::string what, bool cond) { add(std::move(what), cond ? 0.0 : 1.0, 0.0); }
};

std::vector<cplx> polar_grid(int n_r, int n_theta, double r_max, bool include_rmax = false) {
  std::vector<cplx> pts;
  for (int i = 0; i < n_r; ++i) {
    const double r = include_rmax ? r_max * i / (n_r - 1) : r_max * i / n_r;
    for (int j = 0; j < n_theta; ++j) pts.push_back(std::polar(r, 2.0 * kPi * j / n_theta));
  }
  return pts;
}

// 25 interior points: 5 radii in (0, r_max] × 5 angles, off the axes
std::vector<cplx> points25(double r_max) {
  std::vector<cplx> pts;
  for (int i = 1; i <= 5; ++i) {
    for (int j = 0; j < 5; ++j) pts.push_back(std::polar(r_max * i / 5.0, 2.0 * kPi * j / 5.0 + 0.3));
  }
  return pts;
}

double max_over(const std::vector<cplx>& pts, const std::function<double(cplx)>& f) {
  double m = 0.0;
  for (const cplx z : pts) m = std::max(m, f(z));
  return m;
}

double bdist(const Bicomplex& a, const Bicomplex& b) { return bnorm(a - b).value(); }

BoundaryFourierData cos_data(DataKind kind = DataKind::function) { return BoundaryFourierData::cosine(1, kind); }

PolynomialSource unit_source() { return PolynomialSource(PolynomialSource::Terms{{{0, 0}, Bicomplex(1.0)}}); }

// --- 1 -----------------------------------------------------------------------
Outcome idempotent_algebra() {
  Outcome o;
  const Bicomplex pp = p_plus();
  const Bicomplex pm = p_minus();
  o.require("p+ p- == 0", pp * pm == Bicomplex{});
  o.require("(p+)^2 == p+", pp * pp == pp);
  o.require("(p-)^2 == p-", pm * pm == pm);
  o.require("p+ + p- == 1", pp + pm == Bicomplex(1.0));

  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto draw = [&] { return Bicomplex(cplx(u(rng), u(rng)), cplx(u(rng), u(rng))); };
  double round_trip = 0.0;
  double commute = 0.0;
  double componentwise = 0.0;
  for (int n = 0; n < 10000; ++n) {
    const Bicomplex a = draw();
    const Bicomplex b = draw();
    const Idempotent ia = to_idempotent(a);
    const Bicomplex back = from_idempotent(ia.plus, ia.minus);
    const double scale = std::max({std::abs(a.z1()), std::abs(a.z2()), 1e-300});
    round_trip = std::max(round_trip, std::max(std::abs(back.z1() - a.z1()), std::abs(back.z2() - a.z2())) / scale / kEps);
    const double ab = bnorm(a).value() * bnorm(b).value();
    commute = std::max(commute, bnorm(a * b - b * a).value() / ab / kEps);
    const Idempotent iab = to_idempotent(a * b);
    const Idempotent ib = to_idempotent(b);
    componentwise = std::max(componentwise, std::max(std::abs(iab.plus - ia.plus * ib.plus),
                                                     std::abs(iab.minus - ia.minus * ib.minus)) /
                                                ab / kEps);
  }
  o.add("round-trip error / eps", round_trip, 4.0);
  o.add("commutativity / eps", commute, 8.0);
  o.add("componentwise product / eps", componentwise, 8.0);
  return o;
}

// --- 2 -----------------------------------------------------------------------
Outcome kernel_identities() {
  Outcome o;
  double err = 0.0;
  int count = 0;
  for (int i = 0; i < 20; ++i) {
    const double r = 0.95 * i / 19.0;
    for (int j = 0; j < 20; ++j) {
      const double theta = 2.0 * kPi * j / 20.0 + 0.1;
      for (int m = 0; m < 20; ++m) {
        const double t = 2.0 * kPi * m / 20.0;
        const cplx s = schwarz_kernel(std::polar(1.0, t), std::polar(r, theta));
        err = std::max({err, std::abs(s.real() - poisson(r, theta - t)), std::abs(s.imag() - conj_poisson(r, theta - t))});
        ++count;
      }
    }
  }
  o.require("8000 grid points", count == 8000);
  o.add("max |S - (P + iQ)|", err, 1e-12);
  o.add("|P_1/2(0) - 3|", std::abs(poisson(0.5, 0.0) - 3.0), 1e-14);
  o.add("|Q_1/2(pi/2) - 0.8|", std::abs(conj_poisson(0.5, kPi / 2) - 0.8), 1e-14);
  return o;
}

// --- 3 -----------------------------------------------------------------------
Outcome homogeneous_schwarz() {
  Outcome o;
  const SolutionField w = solve_schwarz_homogeneous(cos_data(), cos_data(), 0.0, 0.0);
  const Field f = [&w](cplx z) { return w(z); };
  const auto grid = polar_grid(10, 16, 0.9, true);
  o.add("max |w - (p+ zbar + p- z)|", max_over(grid, [&](cplx z) { return bdist(w(z), from_idempotent(std::conj(z), z)); }),
        1e-10);
  const auto interior = polar_grid(15, 16, 0.9);
  o.add("max |dbar w|", max_over(interior, [&](cplx z) { return bnorm(bc_dbar(f, z)).value(); }), 1e-6);
  const Bicomplex at0 = w(0.0);
  o.add("|Im w+(0)|", std::abs(at0.plus().imag()), 1e-12);
  o.add("|Im w-(0)|", std::abs(at0.minus().imag()), 1e-12);
  const auto pts = points25(0.8);
  const Field conj_plus = [&w](cplx z) { return Bicomplex(std::conj(w(z).plus())); };
  const Field minus = [&w](cplx z) { return Bicomplex(w(z).minus()); };
  o.add("holomorphy of conj(w+)", max_over(pts, [&](cplx z) { return bnorm(wirtinger_dzbar(conj_plus, z)).value(); }), 1e-6);
  o.add("holomorphy of w-", max_over(pts, [&](cplx z) { return bnorm(wirtinger_dzbar(minus, z)).value(); }), 1e-6);
  return o;
}

// --- 4 -----------------------------------------------------------------------
Outcome t_operator() {
  Outcome o;
  const ComplexSource one = [](cplx) { return cplx(1.0); };
  const auto pts = points25(0.8);
  const QuadratureConfig base{};
  const QuadratureConfig fine = base.refined();
  o.add("quadrature T(1), default rules",
        max_over(pts, [&](cplx z) { return std::abs(t_complex(one, z, base) - (std::conj(z) - z)); }), 1e-3);
  o.add("quadrature T(1), refined rules",
        max_over(pts, [&](cplx z) { return std::abs(t_complex(one, z, fine) - (std::conj(z) - z)); }), 1e-4);
  const ComplexPoly one_poly = ComplexPoly::constant(1.0);
  o.add("closed-form T(1)", max_over(pts, [&](cplx z) { return std::abs(t_complex(one_poly, z) - (std::conj(z) - z)); }),
        1e-12);
  return o;
}

// --- 5 -----------------------------------------------------------------------
Outcome nonhomogeneous_schwarz() {
  Outcome o;
  const auto zero = BoundaryFourierData::zero();
  const SchwarzSpec spec = SchwarzSpec::first_order(zero, zero, 0.0, 0.0, unit_source());
  const SolutionField w = solve_schwarz_nonhomogeneous(spec);
  const auto grid = polar_grid(10, 16, 0.9, true);
  o.add("max |w - (0, -2y)|", max_over(grid, [&](cplx z) { return bdist(w(z), Bicomplex(0.0, cplx(-2.0 * z.imag()))); }),
        1e-10);
  const Field f = [&w](cplx z) { return w(z); };
  o.add("max |dbar w - 1|",
        max_over(polar_grid(15, 16, 0.9), [&](cplx z) { return bdist(bc_dbar(f, z), Bicomplex(1.0)); }), 1e-5);
  return o;
}

// --- 6 -----------------------------------------------------------------------
Outcome distributional_schwarz() {
  Outcome o;
  const auto delta = BoundaryFourierData::dirac(0.0, 64);
  const SolutionField w = solve_schwarz_distributional(SchwarzSpec::first_order(delta, delta, 0.0, 0.0));
  // truncation r^65 stays below 1e-14 for r ≤ 0.6
  const auto grid = polar_grid(7, 16, 0.6, true);
  double err = 0.0;
  for (const cplx z : grid) {
    const double r = std::abs(z);
    const double theta = std::arg(z);
    const cplx kernel = cplx(poisson(r, theta), conj_poisson(r, theta)) / (2.0 * kPi);
    const Bicomplex v = w(z);
    err = std::max({err, std::abs(v.minus() - kernel), std::abs(v.plus() - std::conj(kernel))});
  }
  o.add("delta data vs (P + iQ)/2pi", err, 1e-12);

  const SolutionField as_fn = solve_schwarz_homogeneous(cos_data(), cos_data(), 0.3, -0.7);
  const SolutionField as_dist = solve_schwarz_distributional(
      SchwarzSpec::first_order(cos_data(DataKind::distribution), cos_data(DataKind::distribution), 0.3, -0.7));
  o.add("single-moment distribution vs function",
        max_over(polar_grid(15, 16, 0.9), [&](cplx z) { return bdist(as_fn(z), as_dist(z)); }), 1e-10);
  return o;
}

// --- 7 -----------------------------------------------------------------------
Outcome higher_order_schwarz() {
  Outcome o;
  const auto grid = polar_grid(15, 16, 0.9);
  const PolynomialSource src = PolynomialSource::from_components(ComplexPoly::monomial(1, 1, cplx(0.5, 1.0)),
                                                                 ComplexPoly::monomial(0, 2, cplx(-1.0, 0.25)));
  const SchwarzSpec first =
      SchwarzSpec::first_order(cos_data(), BoundaryFourierData::cosine(2).scaled(-0.5), 0.4, -1.1, src);
  const SolutionField w1 = solve_schwarz_nonhomogeneous(first);
  const SolutionField wn = solve_schwarz_higher_order(first);
  o.add("n = 1 reduction", max_over(grid, [&](cplx z) { return bdist(w1(z), wn(z)); }), 1e-12);

  SchwarzSpec second;
  second.order = 2;
  second.boundary_plus = {cos_data(), BoundaryFourierData::zero()};
  second.boundary_minus = {cos_data(), BoundaryFourierData::zero()};
  second.c_plus = {0.0, 0.0};
  second.c_minus = {0.0, 0.0};
  const SolutionField w2 = solve_schwarz_higher_order(second);
  const SolutionField w_ref = solve_schwarz_homogeneous(cos_data(), cos_data(), 0.0, 0.0);
  o.add("n = 2 with vanishing order-1 data", max_over(grid, [&](cplx z) { return bdist(w2(z), w_ref(z)); }), 1e-8);

  const Field t2 = [](cplx z) { return t_bicomplex_iterated(unit_source(), 2, z); };
  o.add("dbar T_B^2(1) - T_B(1)",
        max_over(grid, [&](cplx z) { return bdist(bc_dbar(t2, z), t_bicomplex(unit_source(), z)); }), 1e-5);
  return o;
}

// --- 8 -----------------------------------------------------------------------
Outcome dirichlet() {
  Outcome o;
  const auto grid = polar_grid(15, 16, 0.9);
  const auto zero = BoundaryFourierData::zero();
  const SolutionField u0 = solve_dirichlet({BicomplexBoundaryData(zero, zero)});
  o.add("g = 0 gives 0", max_over(grid, [&](cplx z) { return bnorm(u0(z)).value(); }), 0.0);

  const auto e_it = BoundaryFourierData::exponential(1);
  const SolutionField u1 = solve_dirichlet({BicomplexBoundaryData(e_it, e_it)});
  o.add("g = e^{it} gives z", max_over(grid, [&](cplx z) { return bdist(u1(z), Bicomplex(z)); }), 1e-10);

  const SolutionField u2 = solve_dirichlet(
      {BicomplexBoundaryData(BoundaryFourierData::cosine(3).plus(BoundaryFourierData::exponential(-2)),
                             BoundaryFourierData::constant(1.0).plus(e_it.scaled(0.5)))});
  double lap = 0.0;
  for (const auto* u : {&u1, &u2}) {
    const Field f = [u](cplx z) { return (*u)(z); };
    lap = std::max(lap, max_over(grid, [&](cplx z) { return bnorm(five_point_laplacian(f, z, 1e-3)).value(); }));
  }
  o.add("five-point Laplacian of solutions", lap, 1e-4);

  const std::vector<Field> suite{
      [](cplx z) { return Bicomplex(z.real() * z.real(), z.real() * z.real()); },
      [](cplx z) { return Bicomplex(z.real() * z.imag(), z.real() * z.imag()); },
      [](cplx z) { return Bicomplex(std::norm(z), std::norm(z)); },
      [](cplx z) { return from_idempotent(z * z * std::conj(z), std::exp(z) * std::conj(z)); },
      [&u2](cplx z) { return u2(z); },
  };
  double fact = 0.0;
  for (const auto& f : suite) {
    fact = std::max(fact, max_over(points25(0.8), [&](cplx z) { return laplacian_identity_check(f, z, 1e-3); }));
  }
  o.add("|4 d dbar - Laplacian|", fact, 1e-4);
  return o;
}

// --- 9 -----------------------------------------------------------------------
Outcome finite_difference_order() {
  Outcome o;
  const cplx z{0.3, 0.2};
  // central differences are exact on quadratics: z zbar itself has no truncation error
  const Field zzbar = [](cplx p) { return Bicomplex(std::norm(p), std::norm(p)); };
  double exact = 0.0;
  for (double h : {1e-2, 5e-3, 1e-4}) {
    exact = std::max(exact, bdist(wirtinger_dz(zzbar, z, h), Bicomplex(std::conj(z), std::conj(z))));
    exact = std::max(exact, bdist(wirtinger_dzbar(zzbar, z, h), Bicomplex(z, z)));
  }
  o.add("z zbar differentiated exactly", exact, 1e-10);

  // convergence order on exp(z zbar): d/dz = zbar·exp(z zbar)
  const Field ez = [](cplx p) { return Bicomplex(std::exp(std::norm(p)), std::exp(std::norm(p))); };
  const cplx exact_dz = std::conj(z) * std::exp(std::norm(z));
  const cplx exact_dzbar = z * std::exp(std::norm(z));
  auto err = [&](double h) {
    return std::max(bdist(wirtinger_dz(ez, z, h), Bicomplex(exact_dz, exact_dz)),
                    bdist(wirtinger_dzbar(ez, z, h), Bicomplex(exact_dzbar, exact_dzbar)));
  };
  const double ratio = err(1e-2) / err(5e-3);
  o.add("|ratio - 4| (ratio in [3.5, 4.5])", std::abs(ratio - 4.0), 0.5);
  return o;
}

// --- 10 ----------------------------------------------------------------------
Outcome cli_demos() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / ("bcbvp_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  for (const auto& [name, body] : cli::demos()) {
    const auto path = (dir / (name + ".json")).string();
    std::ofstream(path, std::ios::binary) << body;
    const int expected = name == "negative-control" ? cli::kViolation : cli::kOk;
    std::ostringstream out1, out2, err;
    const int code = cli::run({"verify", "--input", path}, out1, err);
    o.add("verify " + name + " exit " + std::to_string(code), code == expected ? 0.0 : 1.0, 0.0);
    cli::run({"verify", "--input", path}, out2, err);
    o.require("verify " + name + " repeatable", out1.str() == out2.str());
    std::ostringstream s1, s2;
    cli::run({"solve", "--input", path}, s1, err);
    cli::run({"solve", "--input", path}, s2, err);
    o.require("solve " + name + " byte-identical", !s1.str().empty() && s1.str() == s2.str());
  }
  o.require("six demos bundled", cli::demos().size() == 6);
  std::filesystem::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "idempotent algebra", idempotent_algebra},
      {2, "kernel identities", kernel_identities},
      {3, "homogeneous bicomplex Schwarz", homogeneous_schwarz},
      {4, "T-operator quadrature and closed form", t_operator},
      {5, "nonhomogeneous bicomplex Schwarz", nonhomogeneous_schwarz},
      {6, "distributional bicomplex Schwarz", distributional_schwarz},
      {7, "higher-order bicomplex Schwarz", higher_order_schwarz},
      {8, "bicomplex Dirichlet", dirichlet},
      {9, "finite-difference order", finite_difference_order},
      {10, "CLI demos", cli_demos},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    std::string error;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = error.empty();
    for (const auto& chk : out.checks) ok = ok && chk.ok();
    if (!ok) ++failed;
    std::printf("%s %2d %s (%.1fs)\n", ok ? "PASS" : "FAIL", c.id, c.title, secs);
    for (const auto& chk : out.checks) {
      std::printf("       %s %-45s %.3e <= %.1e\n", chk.ok() ? "ok " : "BAD", chk.what.c_str(), chk.value, chk.limit);
    }
    if (!error.empty()) std::printf("       exception: %s\n", error.c_str());
  }
  std::printf("%d/10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
