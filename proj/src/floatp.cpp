#include "padic/floatp.hpp"

#include <cassert>

namespace padic {

PadicFloat::PadicFloat(long prime, long rel_prec) : p_(prime), r_(rel_prec) {
  assert(prime >= 2 && rel_prec >= 1);
}

PadicFloat::PadicFloat(long prime, long rel_prec, const Int& value)
    : p_(prime), r_(rel_prec), m_(value) {
  assert(prime >= 2 && rel_prec >= 1);
  normalize();
}

PadicFloat PadicFloat::from_parts(long prime, long rel_prec, const Int& mantissa, long exp) {
  PadicFloat f(prime, rel_prec);
  f.m_ = mantissa;
  f.e_ = exp;
  f.normalize();
  return f;
}

PadicFloat PadicFloat::from_approx(const PadicApprox& a, long rel_prec) {
  if (a.is_zero_rep()) return PadicFloat(a.prime(), rel_prec);
  return from_parts(a.prime(), rel_prec, a.unit(), a.val());
}

void PadicFloat::normalize() {
  if (m_ == 0) {
    e_ = 0;
    return;
  }
  while (m_ % p_ == 0) {
    m_ /= p_;
    ++e_;
  }
  const Int pr = pow_int(p_, r_);
  m_ %= pr;
  if (m_ < 0) m_ += pr;
  assert(m_ != 0);  // was prime to p
}

PadicApprox PadicFloat::to_approx() const {
  if (m_ == 0) return PadicApprox::zero(p_, kInfinite);
  return PadicApprox::from_parts(p_, m_, e_, e_ + r_);
}

PadicFloat float_add(const PadicFloat& a, const PadicFloat& b) {
  assert(a.prime() == b.prime() && a.rel_prec() == b.rel_prec());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long emin = std::min(a.exp(), b.exp());
  const Int s = a.unit() * pow_int(a.prime(), a.exp() - emin) +
                b.unit() * pow_int(a.prime(), b.exp() - emin);
  return PadicFloat::from_parts(a.prime(), a.rel_prec(), s, emin);
}

PadicFloat float_sub(const PadicFloat& a, const PadicFloat& b) {
  // Not add(a, neg(b)): negation folds the mantissa into [0, p^r), after
  // which equal operands would sum to p^r instead of cancelling exactly.
  assert(a.prime() == b.prime() && a.rel_prec() == b.rel_prec());
  if (b.is_zero()) return a;
  if (a.is_zero()) return float_neg(b);
  const long emin = std::min(a.exp(), b.exp());
  const Int s = a.unit() * pow_int(a.prime(), a.exp() - emin) -
                b.unit() * pow_int(a.prime(), b.exp() - emin);
  return PadicFloat::from_parts(a.prime(), a.rel_prec(), s, emin);
}

PadicFloat float_neg(const PadicFloat& a) {
  if (a.is_zero()) return a;
  return PadicFloat::from_parts(a.prime(), a.rel_prec(), -a.unit(), a.exp());
}

PadicFloat float_mul(const PadicFloat& a, const PadicFloat& b) {
  assert(a.prime() == b.prime() && a.rel_prec() == b.rel_prec());
  if (a.is_zero() || b.is_zero()) return PadicFloat(a.prime(), a.rel_prec());
  return PadicFloat::from_parts(a.prime(), a.rel_prec(), a.unit() * b.unit(),
                                a.exp() + b.exp());
}

PadicFloat float_div(const PadicFloat& a, const PadicFloat& b) {
  assert(a.prime() == b.prime() && a.rel_prec() == b.rel_prec());
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return a;
  const Int inv = unit_inverse_mod(a.prime(), b.unit(), a.rel_prec());
  return PadicFloat::from_parts(a.prime(), a.rel_prec(), a.unit() * inv,
                                a.exp() - b.exp());
}

}  // namespace padic
