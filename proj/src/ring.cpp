#include "padic/ring.hpp"

#include <algorithm>
#include <cassert>

namespace padic {

namespace detail {

struct Access {
  static const RingStatePtr& state(const Element& x) { return x.slot_->state; }
  static const PadicApprox& rep(const Element& x) { return x.slot_->rep; }
  static VariableId id(const Element& x) { return x.slot_->id; }
  static Element wrap(std::shared_ptr<Slot> s) { return Element(std::move(s)); }
};

}  // namespace detail

namespace {

using detail::Access;
using detail::RingStatePtr;
using detail::Slot;

enum OpKind { kAdd, kSub, kMul, kDiv };

long sat_add(long a, long b) {
  if (is_infinite(a) || is_infinite(b)) return kInfinite;
  return a + b;
}

// Valuation as far as the interval can see it: a digit range that is zero
// throughout only witnesses val >= prec.
long v_eff(const PadicApprox& x) { return std::min(x.val(), x.prec()); }

PadicApprox lift_exact(const PadicApprox& x) {
  if (x.is_zero_rep()) return PadicApprox::zero(x.prime(), kInfinite);
  return PadicApprox::from_parts(x.prime(), x.unit(), x.val(), kInfinite);
}

Element make_element(const RingStatePtr& st, PadicApprox rep, VariableId id) {
  return Access::wrap(std::make_shared<Slot>(st, std::move(rep), id));
}

// A zero representative only justifies DivisionByZero when the divisor is
// provably zero; at any finite precision the honest report is that the digits
// ran out.  Under LF a cancellation stores an exact-zero float, so the rep
// alone cannot make this call — the joint precision can.
void check_zero_divisor(const Element& b) {
  if (!Access::rep(b).is_zero_rep()) return;
  if (is_infinite(b.precision())) throw DivisionByZero();
  throw DivisionByIndistinguishableZero();
}

// First-order interval propagation: the absolute precision of the result of
// each operation, given the operands' intervals.
long cr_target(OpKind op, const PadicApprox& a, const PadicApprox& b) {
  const long Na = a.prec(), Nb = b.prec();
  const long va = v_eff(a), vb = v_eff(b);
  switch (op) {
    case kAdd:
    case kSub:
      return std::min(Na, Nb);
    case kMul:
      return std::min(sat_add(Na, vb), sat_add(Nb, va));
    case kDiv:
      return std::min(sat_add(Na, -vb), sat_add(Nb, sat_add(va, -2 * vb)));
  }
  return 0;  // unreachable
}

PadicApprox apply_op(OpKind op, const PadicApprox& a, const PadicApprox& b, long N) {
  switch (op) {
    case kAdd:
      return add(a, b, N);
    case kSub:
      return sub(a, b, N);
    case kMul:
      return mul(a, b, N);
    case kDiv:
      return div(a, b, N);
  }
  return a;  // unreachable
}

long finite_or(long v, long fallback) { return is_infinite(v) ? fallback : v; }

// Absolute precision at which quotient values and partials must be computed
// so that their truncation is invisible after the tracker's own reduction.
long div_trunc_target(const RingStatePtr& st, const PadicApprox& ae, const PadicApprox& be,
                      long col_min) {
  PrecisionModule& m = *st->module;
  const long vb = be.val();
  if (st->mode == Mode::LC) {
    const long vq = ae.is_zero_rep() ? kInfinite : ae.val() - vb;
    const long cap =
        is_infinite(vq) ? m.abs_cap() : std::min(m.abs_cap(), m.rel_cap() + vq);
    return cap - std::min(0L, col_min) + 1;
  }
  const long base = ae.is_zero_rep() ? -vb : std::max(ae.val() - vb, -vb);
  return base + m.float_prec() + 1;
}

Element lattice_binop(const RingStatePtr& st, OpKind op, const Element& a,
                      const Element& b) {
  PrecisionModule& m = *st->module;
  const long p = st->prime;
  const PadicApprox ae = lift_exact(Access::rep(a));
  const PadicApprox be = lift_exact(Access::rep(b));
  const PadicApprox one = PadicApprox::one(p);

  DiffRecord rec{PadicApprox::zero(p, kInfinite), {}};
  switch (op) {
    case kAdd:
      rec.value = add(ae, be, kInfinite);
      rec.partials = {{Access::id(a), one}, {Access::id(b), one}};
      break;
    case kSub:
      rec.value = sub(ae, be, kInfinite);
      rec.partials = {{Access::id(a), one}, {Access::id(b), neg(one, kInfinite)}};
      break;
    case kMul:
      rec.value = mul(ae, be, kInfinite);
      rec.partials = {{Access::id(a), be}, {Access::id(b), ae}};
      break;
    case kDiv: {
      check_zero_divisor(b);
      const long col_min = std::min(finite_or(m.precision_absolute(Access::id(a)), 0),
                                    finite_or(m.precision_absolute(Access::id(b)), 0));
      const long T = div_trunc_target(st, ae, be, col_min);
      rec.value = div(ae, be, T);
      // d(a/b) = (1/b, -a/b^2); the second factors through the quotient itself.
      const PadicApprox ga = div(one, be, T);
      const PadicApprox gb = neg(div(rec.value, be, T), T);
      rec.partials = {{Access::id(a), ga}, {Access::id(b), gb}};
      break;
    }
  }
  auto made = m.create_from_computation(rec);
  return make_element(st, std::move(made.stored), made.id);
}

void check_quotient_in_ring(const detail::RingStatePtr& st, const PadicApprox& num,
                            const PadicApprox& den);

Element scalar_binop(const Element& a, const Int& c, OpKind op, bool scalar_left) {
  const RingStatePtr& st = Access::state(a);
  const long p = st->prime;
  const PadicApprox ce = PadicApprox::exact(p, c);
  const PadicApprox& araw = Access::rep(a);
  if (op == kDiv)
    check_quotient_in_ring(st, scalar_left ? ce : araw, scalar_left ? araw : ce);

  if (st->mode == Mode::CR) {
    const PadicApprox& x = scalar_left ? ce : araw;
    const PadicApprox& y = scalar_left ? araw : ce;
    long N = cr_target(op, x, y);
    if (op == kDiv && is_infinite(N) && !x.is_zero_rep())
      N = x.val() - y.val() + st->default_prec;
    return make_element(st, apply_op(op, x, y, N), 0);
  }

  PrecisionModule& m = *st->module;
  const PadicApprox ae = lift_exact(araw);
  const PadicApprox one = PadicApprox::one(p);
  DiffRecord rec{PadicApprox::zero(p, kInfinite), {}};
  switch (op) {
    case kAdd:
      rec.value = add(ae, ce, kInfinite);
      rec.partials = {{Access::id(a), one}};
      break;
    case kSub:
      rec.value = scalar_left ? sub(ce, ae, kInfinite) : sub(ae, ce, kInfinite);
      rec.partials = {{Access::id(a), scalar_left ? neg(one, kInfinite) : one}};
      break;
    case kMul:
      rec.value = mul(ae, ce, kInfinite);
      rec.partials = {{Access::id(a), ce}};
      break;
    case kDiv: {
      const long col_min = finite_or(m.precision_absolute(Access::id(a)), 0);
      if (scalar_left) {
        // c / a
        check_zero_divisor(a);
        const long T = div_trunc_target(st, ce, ae, col_min);
        rec.value = div(ce, ae, T);
        rec.partials = {{Access::id(a), neg(div(rec.value, ae, T), T)}};
      } else {
        // a / c
        if (c == 0) throw DivisionByZero();
        const long T = div_trunc_target(st, ae, ce, col_min);
        rec.value = div(ae, ce, T);
        rec.partials = {{Access::id(a), div(one, ce, T)}};
      }
      break;
    }
  }
  auto made = m.create_from_computation(rec);
  return make_element(st, std::move(made.stored), made.id);
}

// Z_p has no general division: a quotient that would acquire a negative
// valuation (as far as the representatives can tell) leaves the ring.
void check_quotient_in_ring(const RingStatePtr& st, const PadicApprox& num,
                            const PadicApprox& den) {
  if (st->kind != Kind::Integers || den.is_zero_rep()) return;
  if (v_eff(num) < den.val()) throw NotInRing();
}

Element binary(const Element& a, const Element& b, OpKind op) {
  const RingStatePtr& st = Access::state(a);
  if (st != Access::state(b)) throw MixedRings();
  if (op == kDiv) check_quotient_in_ring(st, Access::rep(a), Access::rep(b));
  if (st->mode == Mode::CR) {
    const PadicApprox& x = Access::rep(a);
    const PadicApprox& y = Access::rep(b);
    long N = cr_target(op, x, y);
    // Exact over exact: the quotient is generally an infinite expansion, so
    // fall back to the ring's default width above its valuation.
    if (op == kDiv && is_infinite(N) && !x.is_zero_rep())
      N = x.val() - y.val() + st->default_prec;
    return make_element(st, apply_op(op, x, y, N), 0);
  }
  return lattice_binop(st, op, a, b);
}

}  // namespace

Element pow(const Element& a, long e) {
  if (e < 1) throw std::invalid_argument("pow needs an exponent >= 1");
  const RingStatePtr& st = Access::state(a);
  const long p = st->prime;
  const PadicApprox& araw = Access::rep(a);
  const PadicApprox ae = lift_exact(araw);

  PadicApprox value = PadicApprox::zero(p, kInfinite);
  PadicApprox deriv = PadicApprox::zero(p, kInfinite);  // e * x^(e-1) at the representative
  if (!ae.is_zero_rep()) {
    using boost::multiprecision::pow;
    const Int ue = pow(ae.unit(), static_cast<unsigned>(e));
    value = PadicApprox::from_parts(p, ue, e * ae.val(), kInfinite);
    const Int ud = Int(e) * pow(ae.unit(), static_cast<unsigned>(e - 1));
    deriv = PadicApprox::from_parts(p, ud, (e - 1) * ae.val(), kInfinite);
  } else if (e == 1) {
    deriv = PadicApprox::one(p);
  }

  if (st->mode == Mode::CR) {
    long N;
    if (araw.is_zero_rep()) {
      // x = O(p^Na) with no visible digit: the e-th power is O(p^(e*Na)).
      N = is_infinite(araw.prec()) ? kInfinite : e * araw.prec();
    } else {
      long vp_e = 0;
      for (long t = e; t % p == 0; t /= p) ++vp_e;
      N = sat_add(araw.prec(), vp_e + (e - 1) * v_eff(araw));
    }
    return make_element(st, value.reduced(N), 0);
  }
  DiffRecord rec{value, {{Access::id(a), deriv}}};
  auto made = st->module->create_from_computation(rec);
  return make_element(st, std::move(made.stored), made.id);
}

Element operator+(const Element& a, const Element& b) { return binary(a, b, kAdd); }
Element operator-(const Element& a, const Element& b) { return binary(a, b, kSub); }
Element operator*(const Element& a, const Element& b) { return binary(a, b, kMul); }
Element operator/(const Element& a, const Element& b) { return binary(a, b, kDiv); }
Element operator-(const Element& a) { return scalar_binop(a, Int(0), kSub, true); }

Element operator+(const Element& a, const Int& c) { return scalar_binop(a, c, kAdd, false); }
Element operator+(const Int& c, const Element& a) { return scalar_binop(a, c, kAdd, true); }
Element operator-(const Element& a, const Int& c) { return scalar_binop(a, c, kSub, false); }
Element operator-(const Int& c, const Element& a) { return scalar_binop(a, c, kSub, true); }
Element operator*(const Element& a, const Int& c) { return scalar_binop(a, c, kMul, false); }
Element operator*(const Int& c, const Element& a) { return scalar_binop(a, c, kMul, true); }
Element operator/(const Element& a, const Int& c) { return scalar_binop(a, c, kDiv, false); }
Element operator/(const Int& c, const Element& a) { return scalar_binop(a, c, kDiv, true); }

long Element::precision() const {
  const auto& st = slot_->state;
  if (st->mode == Mode::CR) return slot_->rep.prec();
  return st->module->precision_absolute(slot_->id);
}

bool Element::is_zero() const {
  const PadicApprox& r = slot_->rep;
  const long v = r.is_zero_rep() ? kInfinite : r.val();
  return v >= precision();
}

std::string digits(const Element& x) {
  const PadicApprox& r = Access::rep(x);
  const RingStatePtr& st = Access::state(x);
  long N = std::min(x.precision(), r.prec());
  if (is_infinite(N))
    N = r.is_zero_rep() ? st->default_prec : r.val() + st->default_prec;
  return render_digits(r.prec() > N ? r.reduced(N) : r);
}

std::vector<std::vector<Int>> precision_lattice(const std::vector<Element>& xs) {
  if (xs.empty()) return {};
  const RingStatePtr& st = Access::state(xs.front());
  std::vector<VariableId> ids;
  ids.reserve(xs.size());
  for (const auto& x : xs) {
    if (Access::state(x) != st) throw MixedRings();
    ids.push_back(Access::id(x));
  }
  if (st->mode == Mode::CR) throw UnsupportedInMode("precision_lattice");
  return st->module->precision_lattice(ids);
}

long number_of_diffused_digits(const std::vector<Element>& xs) {
  if (xs.empty()) return 0;
  const RingStatePtr& st = Access::state(xs.front());
  std::vector<VariableId> ids;
  ids.reserve(xs.size());
  for (const auto& x : xs) {
    if (Access::state(x) != st) throw MixedRings();
    ids.push_back(Access::id(x));
  }
  if (st->mode == Mode::CR) throw UnsupportedInMode("number_of_diffused_digits");
  return st->module->number_of_diffused_digits(ids);
}

bool is_precision_capped(const Element& x) {
  const RingStatePtr& st = Access::state(x);
  if (st->mode == Mode::CR) throw UnsupportedInMode("is_precision_capped");
  return st->module->is_precision_capped(Access::id(x));
}

Ring::Ring(long prime, Mode mode, long default_prec, long rel_cap, long abs_cap,
           long float_prec, Kind kind) {
  if (prime < 2 || default_prec < 1)
    throw std::invalid_argument("need prime >= 2 and default precision >= 1");
  state_ = std::make_shared<detail::RingState>();
  state_->prime = prime;
  state_->kind = kind;
  state_->mode = mode;
  state_->default_prec = default_prec;
  if (mode != Mode::CR)
    state_->module.emplace(prime, mode, default_prec, rel_cap, abs_cap, float_prec);
}

Element Ring::element(const Int& value) const { return element(value, state_->default_prec); }

Element Ring::element(const Int& value, long prec) const {
  return element(PadicApprox(state_->prime, value, prec), prec);
}

Element Ring::element(const PadicApprox& value, long prec) const {
  if (value.prime() != state_->prime) throw NotInRing();
  if (state_->kind == Kind::Integers && !value.is_zero_rep() && value.val() < 0)
    throw NotInRing();
  const long k = std::min(prec, value.prec());
  if (state_->mode == Mode::CR)
    return make_element(state_, value.prec() > k ? value.reduced(k) : value, 0);
  auto made = state_->module->create_from_value(value, k);
  return make_element(state_, std::move(made.stored), made.id);
}

Element Ring::from_rational(const Rational& value, long prec) const {
  return element(padic::from_rational(state_->prime, value, prec), prec);
}

Element Ring::random_unit(DigitRng& rng) const {
  return random_unit(rng, state_->default_prec);
}

Element Ring::random_unit(DigitRng& rng, long prec) const {
  const long p = state_->prime;
  Int m = 1 + Int(rng.next(static_cast<std::uint64_t>(p - 1)));
  Int pk = p;
  for (long i = 1; i < prec; ++i) {
    m += Int(rng.next(static_cast<std::uint64_t>(p))) * pk;
    pk *= p;
  }
  return element(m, prec);
}

PrecisionModule& Ring::module() const {
  if (!state_->module) throw UnsupportedInMode("module");
  return *state_->module;
}

std::size_t Ring::live_count() const {
  return state_->module ? state_->module->live_count() : 0;
}

const Instrumentation& Ring::instrumentation() const { return module().instrumentation(); }

}  // namespace padic
