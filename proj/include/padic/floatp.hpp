#pragma once

#include "padic/approx.hpp"

namespace padic {

/**
 * Floating-point p-adic number at a fixed relative precision r: a unit
 * mantissa m (p does not divide m, 0 <= m < p^r) scaled by p^e, or an exact
 * zero.  Arithmetic is performed exactly on (m, e) and the result's mantissa
 * is then truncated to its first r digits — there is no rounding to nearest
 * and no error tracking here; callers that need rigorous precision pair this
 * type with a precision module.
 */
class PadicFloat {
 public:
  PadicFloat() = default;
  PadicFloat(long prime, long rel_prec);                    // exact zero
  PadicFloat(long prime, long rel_prec, const Int& value);  // truncate an integer
  static PadicFloat from_parts(long prime, long rel_prec, const Int& mantissa, long exp);
  static PadicFloat from_approx(const PadicApprox& a, long rel_prec);

  long prime() const { return p_; }
  long rel_prec() const { return r_; }
  const Int& unit() const { return m_; }
  bool is_zero() const { return m_ == 0; }

  // Exponent (= valuation); kInfinite for zero.
  long exp() const { return m_ == 0 ? kInfinite : e_; }

  // The value as an approximation known on its digit window [e, e + r).
  PadicApprox to_approx() const;

  bool operator==(const PadicFloat&) const = default;

 private:
  long p_ = 0;
  long r_ = 0;
  Int m_ = 0;
  long e_ = 0;

  void normalize();
};

PadicFloat float_add(const PadicFloat& a, const PadicFloat& b);
PadicFloat float_sub(const PadicFloat& a, const PadicFloat& b);
PadicFloat float_mul(const PadicFloat& a, const PadicFloat& b);
PadicFloat float_div(const PadicFloat& a, const PadicFloat& b);  // DivisionByZero on zero divisor
PadicFloat float_neg(const PadicFloat& a);

}  // namespace padic
