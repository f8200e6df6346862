#include "bcbvp/exact_schwarz.hpp"

#include <stdexcept>

namespace bcbvp::exact {

ComplexPoly schwarz_extension(const BoundaryFourierData& data) {
  ComplexPoly::Terms terms;
  for (const auto& [k, c] : data.coeffs()) {
    if (k == 0) {
      terms[{0, 0}] += c;
    } else if (k > 0) {
      terms[{k, 0}] += 2.0 * c;
    }
  }
  return ComplexPoly(std::move(terms));
}

ComplexPoly poisson_extension(const BoundaryFourierData& data) {
  ComplexPoly::Terms terms;
  for (const auto& [k, c] : data.coeffs()) {
    if (k >= 0) {
      terms[{k, 0}] += c;
    } else {
      terms[{0, -k}] += c;
    }
  }
  return ComplexPoly(std::move(terms));
}

BoundaryFourierData circle_trace(const ComplexPoly& p) {
  BoundaryFourierData::Coeffs coeffs;
  for (const auto& [deg, c] : p.terms()) coeffs[deg.first - deg.second] += c;
  return {std::move(coeffs), DataKind::function, false};
}

BoundaryFourierData real_part(const BoundaryFourierData& data) {
  BoundaryFourierData::Coeffs coeffs;
  for (const auto& [k, c] : data.coeffs()) {
    coeffs[k] += 0.5 * c;
    coeffs[-k] += 0.5 * std::conj(c);
  }
  return {std::move(coeffs), data.kind(), true};
}

ComplexPoly solve_schwarz_poly_exact(const ComplexPoly& source, const BoundaryFourierData& boundary, double c) {
  if (!boundary.is_conjugate_symmetric()) {
    throw std::invalid_argument("Schwarz boundary data must be real-valued");
  }
  ComplexPoly::Terms particular_terms;
  for (const auto& [deg, coef] : source.terms()) {
    particular_terms[{deg.first, deg.second + 1}] += coef / static_cast<double>(deg.second + 1);
  }
  const ComplexPoly particular(std::move(particular_terms));

  // particular(0) = 0 because every term carries at least one z̄
  const auto correction = boundary.with_kind(DataKind::function)
                              .plus(real_part(circle_trace(particular)).scaled(-1.0).with_kind(DataKind::function));
  return particular + schwarz_extension(correction) + ComplexPoly::constant(cplx(0.0, c));
}

ComplexPoly solve_schwarz_higher_order_exact(const ComplexPoly& source, std::span<const BoundaryFourierData> h,
                                             std::span<const double> c) {
  if (h.empty() || h.size() != c.size()) {
    throw std::invalid_argument("higher-order Schwarz needs n >= 1 boundary data and constants of equal length");
  }
  ComplexPoly v = source;
  for (std::size_t k = h.size(); k-- > 0;) v = solve_schwarz_poly_exact(v, h[k], c[k]);
  return v;
}

}  // namespace bcbvp::exact
