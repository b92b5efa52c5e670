#include "padic/approx.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cassert>
#include <stdexcept>
#include <vector>

namespace padic {

Int pow_int(long p, long e) {
  assert(e >= 0);
  Int result(1);
  Int base(p);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Int unit_inverse_mod(long p, const Int& unit, long k) {
  assert(k >= 1);
  const Int pk = pow_int(p, k);
  Int u = unit % pk;
  if (u < 0) u += pk;
  assert(u % p != 0);
  // Euler: u^(phi(p^k) - 1) = u^(-1) mod p^k.
  const Int phi = pk - pk / p;
  return boost::multiprecision::powm(u, phi - 1, pk);
}

PadicApprox::PadicApprox(long prime, const Int& value, long prec)
    : p_(prime), m_(value), v_(0), N_(clamp_infinite(prec)) {
  normalize();
}

PadicApprox PadicApprox::from_parts(long prime, const Int& mantissa, long val, long prec) {
  PadicApprox a;
  a.p_ = prime;
  a.m_ = mantissa;
  a.v_ = val;
  a.N_ = clamp_infinite(prec);
  a.normalize();
  return a;
}

PadicApprox PadicApprox::zero(long prime, long prec) {
  PadicApprox a;
  a.p_ = prime;
  a.N_ = clamp_infinite(prec);
  return a;
}

PadicApprox PadicApprox::exact(long prime, const Int& value) {
  return PadicApprox(prime, value, kInfinite);
}

PadicApprox PadicApprox::one(long prime) { return exact(prime, 1); }

void PadicApprox::normalize() {
  assert(p_ >= 2);
  if (m_ == 0) {
    v_ = kInfinite;
    return;
  }
  while (m_ % p_ == 0) {
    m_ /= p_;
    ++v_;
  }
  if (!is_infinite(N_)) {
    if (v_ >= N_) {
      m_ = 0;
      v_ = kInfinite;
      return;
    }
    const Int pk = pow_int(p_, N_ - v_);
    m_ %= pk;
    if (m_ < 0) m_ += pk;
    // m was prime to p, so the canonical residue is still nonzero.
    assert(m_ != 0);
  }
}

Int PadicApprox::lift() const {
  if (m_ == 0) return Int(0);
  if (v_ < 0) throw std::logic_error("lift of a p-adic with negative valuation");
  return m_ * pow_int(p_, v_);
}

PadicApprox PadicApprox::reduced(long prec) const {
  const long target = std::min(N_, clamp_infinite(prec));
  if (m_ == 0) return zero(p_, target);
  return from_parts(p_, m_, v_, target);
}

PadicApprox add(const PadicApprox& a, const PadicApprox& b, long prec) {
  assert(a.prime() == b.prime());
  const long p = a.prime();
  if (a.is_zero_rep()) return b.reduced(prec);
  if (b.is_zero_rep()) return a.reduced(prec);
  const long vmin = std::min(a.val(), b.val());
  const Int s = a.unit() * pow_int(p, a.val() - vmin) + b.unit() * pow_int(p, b.val() - vmin);
  return PadicApprox::from_parts(p, s, vmin, prec);
}

PadicApprox sub(const PadicApprox& a, const PadicApprox& b, long prec) {
  return add(a, neg(b, kInfinite), prec);
}

PadicApprox neg(const PadicApprox& a, long prec) {
  if (a.is_zero_rep()) return PadicApprox::zero(a.prime(), std::min(a.prec(), clamp_infinite(prec)));
  return PadicApprox::from_parts(a.prime(), -a.unit(), a.val(), std::min(a.prec(), clamp_infinite(prec)));
}

PadicApprox mul(const PadicApprox& a, const PadicApprox& b, long prec) {
  assert(a.prime() == b.prime());
  if (a.is_zero_rep() || b.is_zero_rep()) return PadicApprox::zero(a.prime(), prec);
  return PadicApprox::from_parts(a.prime(), a.unit() * b.unit(), a.val() + b.val(), prec);
}

PadicApprox div(const PadicApprox& a, const PadicApprox& b, long prec) {
  assert(a.prime() == b.prime());
  const long p = a.prime();
  if (b.is_zero_rep()) {
    if (b.is_exact()) throw DivisionByZero();
    throw DivisionByIndistinguishableZero();
  }
  if (a.is_zero_rep()) return PadicApprox::zero(p, prec);
  if (is_infinite(prec)) throw std::logic_error("exact division is not available");
  const long v = a.val() - b.val();
  const long k = prec - v;
  if (k <= 0) return PadicApprox::zero(p, prec);
  const Int inv = unit_inverse_mod(p, b.unit(), k);
  return PadicApprox::from_parts(p, a.unit() * inv, v, prec);
}

PadicApprox shift(const PadicApprox& a, long k) {
  if (a.is_zero_rep()) return a;
  const long prec = is_infinite(a.prec()) ? kInfinite : a.prec() + k;
  return PadicApprox::from_parts(a.prime(), a.unit(), a.val() + k, prec);
}

PadicApprox from_rational(long prime, const Rational& q, long prec) {
  const long N = clamp_infinite(prec);
  if (q == 0) return PadicApprox::zero(prime, N);
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);  // canonical: den >= 1
  long v = 0;
  while (num % prime == 0) {
    num /= prime;
    ++v;
  }
  while (den % prime == 0) {
    den /= prime;
    --v;
  }
  if (is_infinite(N)) {
    if (den != 1)
      throw std::invalid_argument("rational with non-p-power denominator has no exact expansion");
    return PadicApprox::from_parts(prime, num, v, kInfinite);
  }
  const long k = N - v;
  if (k <= 0) return PadicApprox::zero(prime, N);
  const Int inv = unit_inverse_mod(prime, den, k);
  return PadicApprox::from_parts(prime, num * inv, v, N);
}

namespace {

char digit_char(long d) { return d < 10 ? char('0' + d) : char('a' + d - 10); }

long digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

const std::string kEllipsis = "…";

}  // namespace

std::string render_digits(const PadicApprox& a) {
  if (a.prime() < 2 || a.prime() > 36)
    throw std::invalid_argument("digit rendering needs 2 <= p <= 36");
  const long N = a.prec();
  if (is_infinite(N)) throw std::logic_error("cannot render digits at infinite precision");
  if (N <= 0) return "0";

  const long lo = a.is_zero_rep() ? 0 : std::min(a.val(), 0L);
  std::vector<long> digit(static_cast<std::size_t>(N - lo), 0);
  if (!a.is_zero_rep()) {
    Int x = a.unit();
    long pos = a.val();
    while (x != 0) {
      digit[static_cast<std::size_t>(pos - lo)] = static_cast<long>(x % a.prime());
      x /= a.prime();
      ++pos;
    }
  }
  std::string out = kEllipsis;
  for (long k = N - 1; k >= lo; --k) {
    out += digit_char(digit[static_cast<std::size_t>(k - lo)]);
    if (k == 0 && lo < 0) out += '.';
  }
  return out;
}

PadicApprox parse_digits(long prime, const std::string& text) {
  if (text == "0") return PadicApprox::zero(prime, 0);
  if (text.compare(0, kEllipsis.size(), kEllipsis) != 0)
    throw std::invalid_argument("digit string must start with an ellipsis");
  long above = 0;
  long below = 0;
  bool seen_point = false;
  Int value(0);
  for (std::size_t i = kEllipsis.size(); i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.') {
      if (seen_point || i + 1 == text.size())
        throw std::invalid_argument("malformed radix point");
      seen_point = true;
      continue;
    }
    const long d = digit_value(c);
    if (d < 0 || d >= prime) throw std::invalid_argument("digit out of range for base");
    value = value * prime + d;
    (seen_point ? below : above) += 1;
  }
  if (above == 0) throw std::invalid_argument("no digits above the radix point");
  return PadicApprox::from_parts(prime, value, -below, above);
}

}  // namespace padic
