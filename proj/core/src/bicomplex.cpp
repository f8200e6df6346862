#include "bcbvp/bicomplex.hpp"

#include <cmath>

namespace bcbvp {

Bicomplex mul(const Bicomplex& a, const Bicomplex& b) {
  return {a.z1() * b.z1() - a.z2() * b.z2(), a.z1() * b.z2() + a.z2() * b.z1()};
}

BNorm bnorm(const Bicomplex& z) {
  // cartesian form sqrt(|z1|² + |z2|²), equal to the idempotent average, without underflow
  return BNorm(std::hypot(std::abs(z.z1()), std::abs(z.z2())));
}

bool is_zero_divisor(const Bicomplex& z, double tol) {
  const bool plus_zero = std::abs(z.plus()) <= tol;
  const bool minus_zero = std::abs(z.minus()) <= tol;
  return plus_zero != minus_zero;
}

}  // namespace bcbvp
