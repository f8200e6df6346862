#include "bcbvp/polynomial.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <vector>

namespace bcbvp {

namespace {

void check_degrees(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("polynomial degrees must be nonnegative");
}

}  // namespace

ComplexPoly::ComplexPoly(Terms terms) : terms_(std::move(terms)) {
  for (const auto& [deg, c] : terms_) check_degrees(deg.first, deg.second);
  prune();
}

ComplexPoly ComplexPoly::constant(cplx c) { return ComplexPoly(Terms{{{0, 0}, c}}); }

ComplexPoly ComplexPoly::monomial(int a, int b, cplx c) { return ComplexPoly(Terms{{{a, b}, c}}); }

void ComplexPoly::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == cplx{}; });
}

cplx ComplexPoly::coeff(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? cplx{} : it->second;
}

cplx ComplexPoly::operator()(cplx z) const {
  if (terms_.empty()) return {};
  int max_a = 0;
  int max_b = 0;
  for (const auto& [deg, c] : terms_) {
    max_a = std::max(max_a, deg.first);
    max_b = std::max(max_b, deg.second);
  }
  std::vector<cplx> zp(static_cast<std::size_t>(max_a) + 1, 1.0);
  std::vector<cplx> zbp(static_cast<std::size_t>(max_b) + 1, 1.0);
  const cplx zb = std::conj(z);
  for (std::size_t k = 1; k < zp.size(); ++k) zp[k] = zp[k - 1] * z;
  for (std::size_t k = 1; k < zbp.size(); ++k) zbp[k] = zbp[k - 1] * zb;
  cplx sum{};
  for (const auto& [deg, c] : terms_) {
    sum += c * zp[static_cast<std::size_t>(deg.first)] * zbp[static_cast<std::size_t>(deg.second)];
  }
  return sum;
}

ComplexPoly ComplexPoly::conj() const {
  Terms out;
  for (const auto& [deg, c] : terms_) out[{deg.second, deg.first}] = std::conj(c);
  return ComplexPoly(std::move(out));
}

ComplexPoly ComplexPoly::dz() const {
  Terms out;
  for (const auto& [deg, c] : terms_) {
    if (deg.first > 0) out[{deg.first - 1, deg.second}] += c * static_cast<double>(deg.first);
  }
  return ComplexPoly(std::move(out));
}

ComplexPoly ComplexPoly::dzbar() const {
  Terms out;
  for (const auto& [deg, c] : terms_) {
    if (deg.second > 0) out[{deg.first, deg.second - 1}] += c * static_cast<double>(deg.second);
  }
  return ComplexPoly(std::move(out));
}

ComplexPoly& ComplexPoly::operator+=(const ComplexPoly& o) {
  for (const auto& [deg, c] : o.terms_) terms_[deg] += c;
  prune();
  return *this;
}

ComplexPoly& ComplexPoly::operator-=(const ComplexPoly& o) {
  for (const auto& [deg, c] : o.terms_) terms_[deg] -= c;
  prune();
  return *this;
}

ComplexPoly& ComplexPoly::operator*=(cplx s) {
  for (auto& [deg, c] : terms_) c *= s;
  prune();
  return *this;
}

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
  ComplexPoly::Terms out;
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) out[{da.first + db.first, da.second + db.second}] += ca * cb;
  }
  return ComplexPoly(std::move(out));
}

PolynomialSource::PolynomialSource(Terms terms) : terms_(std::move(terms)) {
  for (const auto& [deg, c] : terms_) check_degrees(deg.first, deg.second);
  std::erase_if(terms_, [](const auto& kv) { return kv.second == Bicomplex{}; });
}

PolynomialSource PolynomialSource::from_components(const ComplexPoly& f_plus, const ComplexPoly& f_minus) {
  Terms terms;
  for (const auto& [deg, c] : f_plus.terms()) terms[deg] += from_idempotent(c, 0.0);
  for (const auto& [deg, c] : f_minus.terms()) terms[deg] += from_idempotent(0.0, c);
  return PolynomialSource(std::move(terms));
}

ComplexPoly PolynomialSource::plus() const {
  ComplexPoly::Terms out;
  for (const auto& [deg, c] : terms_) out[deg] = c.plus();
  return ComplexPoly(std::move(out));
}

ComplexPoly PolynomialSource::minus() const {
  ComplexPoly::Terms out;
  for (const auto& [deg, c] : terms_) out[deg] = c.minus();
  return ComplexPoly(std::move(out));
}

Bicomplex PolynomialSource::operator()(cplx z) const {
  Bicomplex sum;
  const cplx zb = std::conj(z);
  for (const auto& [deg, c] : terms_) sum += c * (ipow(z, deg.first) * ipow(zb, deg.second));
  return sum;
}

}  // namespace bcbvp
