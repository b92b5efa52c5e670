#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <string>

#include "padic/errors.hpp"

namespace padic {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Sentinel for "infinite" valuations and precisions.  Kept far below the
// integer maximum so that sums like N + v never overflow.
inline constexpr long kInfinite = 1L << 40;

inline bool is_infinite(long x) { return x >= kInfinite; }
inline long clamp_infinite(long x) { return x >= kInfinite ? kInfinite : x; }

Int pow_int(long p, long e);  // p^e, e >= 0

// Inverse of a unit (p does not divide u) modulo p^k, canonical in [1, p^k).
Int unit_inverse_mod(long p, const Int& unit, long k);

/**
 * A p-adic number known modulo p^N: the triple (m, v, N) stands for the
 * residue class m * p^v + O(p^N) with p not dividing m.  A zero representative
 * (nothing nonzero below p^N, or a true zero) is stored as m = 0, v = infinite.
 *
 * With N finite the mantissa is kept canonical: 0 <= m < p^(N - v).  With
 * N infinite the value is exact and the mantissa may be any integer prime to
 * p, including a negative one; this form is what the precision lattices are
 * built from.  All arithmetic takes the target precision explicitly — how a
 * precision is chosen for a result is the caller's policy, not this type's.
 */
class PadicApprox {
 public:
  PadicApprox() = default;
  // Reduce an integer value modulo p^prec (prec may be kInfinite).
  PadicApprox(long prime, const Int& value, long prec);

  static PadicApprox from_parts(long prime, const Int& mantissa, long val, long prec);
  static PadicApprox zero(long prime, long prec);
  static PadicApprox exact(long prime, const Int& value);
  static PadicApprox one(long prime);

  long prime() const { return p_; }
  long prec() const { return N_; }
  const Int& unit() const { return m_; }

  // Valuation of the representative; kInfinite for a zero representative.
  long val() const { return v_; }
  // Valuation clamped to the known window: a zero representative at finite
  // precision N is only known to have valuation >= N.
  long val_known() const { return v_ < N_ ? v_ : N_; }

  bool is_zero_rep() const { return m_ == 0; }
  bool is_exact() const { return is_infinite(N_); }

  // m * p^v as an integer; requires v >= 0 (or a zero representative).
  Int lift() const;

  // The same value truncated to a (not larger) precision.
  PadicApprox reduced(long prec) const;

  bool operator==(const PadicApprox&) const = default;

 private:
  long p_ = 0;
  Int m_ = 0;
  long v_ = kInfinite;
  long N_ = kInfinite;

  void normalize();
};

// Arithmetic on representatives, reduced to the given target precision.
// Addition and friends are exact before the final reduction; division expands
// the (exact rational) quotient of representatives to the target precision and
// therefore requires prec to be finite.
PadicApprox add(const PadicApprox& a, const PadicApprox& b, long prec);
PadicApprox sub(const PadicApprox& a, const PadicApprox& b, long prec);
PadicApprox mul(const PadicApprox& a, const PadicApprox& b, long prec);
PadicApprox div(const PadicApprox& a, const PadicApprox& b, long prec);
PadicApprox neg(const PadicApprox& a, long prec);

// Multiply by p^k (k may be negative); exactness preserved.
PadicApprox shift(const PadicApprox& a, long k);

// Expansion of a rational number to the given precision.  An infinite target
// is allowed only when the denominator is a power of p (the value is then
// representable exactly).
PadicApprox from_rational(long prime, const Rational& q, long prec);

// Digit expansion "…d_{N-1}…d_0" in base p, zero-padded to N digits above the
// radix point; negative-valuation digits follow a '.' (e.g. "…1001011.011").
// A value whose every digit above the point is unknown (N <= 0) prints "0".
// Digits use 0-9a-z, so p must be below 37.
std::string render_digits(const PadicApprox& a);

// Inverse of render_digits: recovers (mantissa mod p^N, N) from the string.
PadicApprox parse_digits(long prime, const std::string& text);

}  // namespace padic
