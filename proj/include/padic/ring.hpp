#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "padic/approx.hpp"
#include "padic/errors.hpp"
#include "padic/tracker.hpp"

namespace padic {

// Deterministic digit source so that examples and benchmarks are reproducible
// and, in particular, can be replayed identically under every tracking mode.
class DigitRng {
 public:
  explicit DigitRng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next(std::uint64_t bound) { return gen_() % bound; }

 private:
  std::mt19937_64 gen_;
};

class Ring;
class Element;

// Z_p (quotients must stay integral) versus Q_p (any nonzero divisor).
enum class Kind { Integers, Field };

namespace detail {

struct RingState {
  long prime;
  Kind kind;
  Mode mode;
  long default_prec;
  std::optional<PrecisionModule> module;  // engaged for LC and LF
};

using RingStatePtr = std::shared_ptr<RingState>;

// One tracked variable.  Elements share slots: copying an Element aliases the
// same variable, and the variable is released (its tracker column scheduled
// for deletion) when the last alias goes away.
struct Slot {
  RingStatePtr state;
  PadicApprox rep;
  VariableId id;  // 0 when the mode keeps no per-variable column (CR)

  Slot(RingStatePtr s, PadicApprox r, VariableId i)
      : state(std::move(s)), rep(std::move(r)), id(i) {}
  ~Slot() {
    if (id != 0 && state->module) state->module->enqueue_erase(id);
  }
  Slot(const Slot&) = delete;
  Slot& operator=(const Slot&) = delete;
};

struct Access;  // ring.cpp-internal gateway to Element's slot

}  // namespace detail

/// A p-adic number attached to a Ring.  Arithmetic dispatches on the ring's
/// tracking mode; copies alias the same tracked variable.
class Element {
 public:
  const PadicApprox& rep() const { return slot_->rep; }

  // Best known absolute precision: the stored interval width under CR, a
  // lattice query under LC/LF (where joint information can exceed what the
  // stored representative shows).
  long precision() const;

  // True when every known digit is zero, i.e. the element cannot be told
  // apart from zero at its current precision.
  bool is_zero() const;

  // Serial number of the underlying tracker column (0 under CR).
  VariableId id() const { return slot_->id; }

 private:
  explicit Element(std::shared_ptr<detail::Slot> s) : slot_(std::move(s)) {}
  std::shared_ptr<detail::Slot> slot_;

  friend class Ring;
  friend struct detail::Access;
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Element& a, const Element& b);
Element operator/(const Element& a, const Element& b);
Element operator-(const Element& a);

// e-th power (e >= 1) as a single differentiable step: in CR this sees the
// full valuation gain of d(x^e) = e*x^(e-1) that a chain of multiplications
// misses.
Element pow(const Element& a, long e);

Element operator+(const Element& a, const Int& c);
Element operator+(const Int& c, const Element& a);
Element operator-(const Element& a, const Int& c);
Element operator-(const Int& c, const Element& a);
Element operator*(const Element& a, const Int& c);
Element operator*(const Int& c, const Element& a);
Element operator/(const Element& a, const Int& c);
Element operator/(const Int& c, const Element& a);

/// Digit string of the element at its current precision.
std::string digits(const Element& x);

/// Joint precision lattice of the given elements (LC/LF only), as the rows of
/// the canonical p-power echelon matrix.
std::vector<std::vector<Int>> precision_lattice(const std::vector<Element>& xs);

/// Digits of precision the given family holds jointly beyond what the
/// elements hold individually (LC/LF only).
long number_of_diffused_digits(const std::vector<Element>& xs);

/// Whether the variable's current precision is an artifact of the tracker's
/// growth caps rather than of the computation (LC only).
bool is_precision_capped(const Element& x);

/// A family of p-adic numbers under one precision-tracking policy.
///
/// Mode::CR propagates one interval per element with the standard first-order
/// rules.  Mode::LC and Mode::LF maintain a joint precision lattice through a
/// PrecisionModule; see tracker.hpp for the cap parameters.
class Ring {
 public:
  Ring(long prime, Mode mode, long default_prec, long rel_cap = 0, long abs_cap = 0,
       long float_prec = 0, Kind kind = Kind::Integers);

  long prime() const { return state_->prime; }
  Kind kind() const { return state_->kind; }
  Mode mode() const { return state_->mode; }
  long default_prec() const { return state_->default_prec; }

  Element element(const Int& value) const;             // at the default precision
  Element element(const Int& value, long prec) const;  // prec may be kInfinite
  Element element(const PadicApprox& value, long prec) const;
  Element from_rational(const Rational& value, long prec) const;

  // Random unit: first digit in [1, p-1], the rest uniform.  Consumes exactly
  // `prec` draws, so replays agree across modes.
  Element random_unit(DigitRng& rng) const;
  Element random_unit(DigitRng& rng, long prec) const;

  PrecisionModule& module() const;  // LC/LF only
  std::size_t live_count() const;
  const Instrumentation& instrumentation() const;

  bool same_ring(const Element& x) const { return x.slot_->state == state_; }

 private:
  detail::RingStatePtr state_;

  friend class Element;
};

}  // namespace padic
