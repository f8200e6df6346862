#include "bcbvp/boundary_data.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numbers>
#include <string>

namespace bcbvp {

namespace {

void require_inside(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::domain_error("kernel pairing requires 0 <= r < 1, got r = " + std::to_string(r));
  }
}

}  // namespace

BoundaryFourierData::BoundaryFourierData(Coeffs coeffs, DataKind kind, bool real_valued)
    : coeffs_(std::move(coeffs)), kind_(kind), real_(real_valued) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == cplx{}) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
  if (real_ && !is_conjugate_symmetric()) {
    throw std::invalid_argument("boundary data marked real-valued but coefficients are not conjugate-symmetric");
  }
}

BoundaryFourierData BoundaryFourierData::zero(DataKind kind) { return {{}, kind, true}; }

BoundaryFourierData BoundaryFourierData::constant(double c, DataKind kind) { return {{{0, c}}, kind, true}; }

BoundaryFourierData BoundaryFourierData::cosine(int m, DataKind kind) {
  if (m == 0) return constant(1.0, kind);
  return {{{-m, 0.5}, {m, 0.5}}, kind, true};
}

BoundaryFourierData BoundaryFourierData::exponential(int m, DataKind kind) { return {{{m, 1.0}}, kind, false}; }

BoundaryFourierData BoundaryFourierData::dirac(double t0, int bandwidth) {
  if (bandwidth < 0) throw std::invalid_argument("dirac bandwidth must be nonnegative");
  Coeffs c;
  for (int k = -bandwidth; k <= bandwidth; ++k) {
    c[k] = std::polar(1.0, -k * t0) / (2.0 * std::numbers::pi);
  }
  BoundaryFourierData d(std::move(c), DataKind::distribution, false);
  d.real_ = d.is_conjugate_symmetric();
  return d;
}

int BoundaryFourierData::bandwidth() const {
  if (coeffs_.empty()) return 0;
  return std::max(std::abs(coeffs_.begin()->first), std::abs(coeffs_.rbegin()->first));
}

cplx BoundaryFourierData::coeff(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? cplx{} : it->second;
}

bool BoundaryFourierData::is_conjugate_symmetric(double tol) const {
  for (const auto& [k, c] : coeffs_) {
    if (std::abs(coeff(-k) - std::conj(c)) > tol) return false;
  }
  return true;
}

BoundaryFourierData BoundaryFourierData::with_kind(DataKind kind) const {
  BoundaryFourierData d = *this;
  d.kind_ = kind;
  return d;
}

BoundaryFourierData BoundaryFourierData::multiply(const BoundaryFourierData& trig) const {
  Coeffs out;
  for (const auto& [k, a] : coeffs_) {
    for (const auto& [m, b] : trig.coeffs_) out[k + m] += a * b;
  }
  BoundaryFourierData d;
  d.coeffs_ = std::move(out);
  std::erase_if(d.coeffs_, [](const auto& kv) { return kv.second == cplx{}; });
  d.kind_ = kind_;
  d.real_ = real_ && trig.real_;
  return d;
}

BoundaryFourierData BoundaryFourierData::scaled(double s) const {
  BoundaryFourierData d = *this;
  for (auto& [k, c] : d.coeffs_) c *= s;
  std::erase_if(d.coeffs_, [](const auto& kv) { return kv.second == cplx{}; });
  return d;
}

BoundaryFourierData BoundaryFourierData::plus(const BoundaryFourierData& other) const {
  if (kind_ != other.kind_) throw std::invalid_argument("cannot add boundary data of different kinds");
  BoundaryFourierData d = *this;
  for (const auto& [k, c] : other.coeffs_) d.coeffs_[k] += c;
  std::erase_if(d.coeffs_, [](const auto& kv) { return kv.second == cplx{}; });
  d.real_ = real_ && other.real_;
  return d;
}

cplx sample(const BoundaryFourierData& d, double t) {
  if (d.kind() == DataKind::distribution) {
    throw std::invalid_argument("a distribution has no pointwise values");
  }
  cplx sum{};
  for (const auto& [k, c] : d.coeffs()) sum += c * std::polar(1.0, k * t);
  return sum;
}

BoundaryFourierData fourier_from_samples(std::span<const cplx> samples, int bandwidth) {
  const auto n = static_cast<int>(samples.size());
  if (n == 0) throw AliasingError("no samples given");
  const int k_max = bandwidth < 0 ? (n - 1) / 2 : bandwidth;
  if (n < 2 * k_max + 1) {
    throw AliasingError("aliasing: " + std::to_string(n) + " samples cannot resolve bandwidth " +
                        std::to_string(k_max) + " (need at least " + std::to_string(2 * k_max + 1) + ")");
  }

  double scale = 0.0;
  bool all_real = true;
  for (const auto& s : samples) {
    scale = std::max(scale, std::abs(s));
    all_real = all_real && s.imag() == 0.0;
  }
  const double drop = 1e-14 * scale;

  auto dft = [&](int k) {
    cplx sum{};
    for (int m = 0; m < n; ++m) {
      // reduce k*m modulo n so the phase stays exact for large indices
      const long long km = (static_cast<long long>(k) * m) % n;
      sum += samples[static_cast<std::size_t>(m)] *
             std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(km) / n);
    }
    return sum / static_cast<double>(n);
  };

  BoundaryFourierData::Coeffs coeffs;
  if (all_real) {
    const double c0 = dft(0).real();
    if (std::abs(c0) > drop) coeffs[0] = c0;
    for (int k = 1; k <= k_max; ++k) {
      const cplx c = dft(k);
      if (std::abs(c) > drop) {
        coeffs[k] = c;
        coeffs[-k] = std::conj(c);
      }
    }
  } else {
    for (int k = -k_max; k <= k_max; ++k) {
      const cplx c = dft(k);
      if (std::abs(c) > drop) coeffs[k] = c;
    }
  }
  return {std::move(coeffs), DataKind::function, all_real};
}

cplx pair_schwarz_kernel(const BoundaryFourierData& d, cplx z) {
  require_inside(std::abs(z));
  cplx sum = d.coeff(0);
  cplx zk = 1.0;
  int last = 0;
  for (auto it = d.coeffs().upper_bound(0); it != d.coeffs().end(); ++it) {
    for (; last < it->first; ++last) zk *= z;
    sum += 2.0 * it->second * zk;
  }
  return sum;
}

cplx pair_schwarz_kernel(const BoundaryFourierData& d, double r, double theta) {
  require_inside(r);
  return pair_schwarz_kernel(d, std::polar(r, theta));
}

cplx pair_poisson_kernel(const BoundaryFourierData& d, cplx z) {
  require_inside(std::abs(z));
  const cplx zbar = std::conj(z);
  cplx sum = d.coeff(0);
  cplx zk = 1.0;
  int last = 0;
  for (auto it = d.coeffs().upper_bound(0); it != d.coeffs().end(); ++it) {
    for (; last < it->first; ++last) zk *= z;
    sum += it->second * zk;
  }
  // negative modes, ascending |k|
  cplx zbk = 1.0;
  last = 0;
  for (auto it = std::make_reverse_iterator(d.coeffs().lower_bound(0)); it != d.coeffs().rend(); ++it) {
    for (; last < -it->first; ++last) zbk *= zbar;
    sum += it->second * zbk;
  }
  return sum;
}

cplx pair_poisson_kernel(const BoundaryFourierData& d, double r, double theta) {
  require_inside(r);
  return pair_poisson_kernel(d, std::polar(r, theta));
}

BicomplexBoundaryData::BicomplexBoundaryData(BoundaryFourierData plus, BoundaryFourierData minus)
    : plus_(std::move(plus)), minus_(std::move(minus)) {
  if (plus_.kind() != minus_.kind()) {
    throw std::invalid_argument("bicomplex boundary data components must both be functions or both distributions");
  }
}

}  // namespace bcbvp
