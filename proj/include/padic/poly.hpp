#pragma once

#include <vector>

#include "padic/ring.hpp"

namespace padic {

// Dense univariate polynomial with tracked coefficients, coeffs_[i] on x^i.
class Poly {
 public:
  Poly(Ring ring, std::vector<Element> coeffs);

  // degree+1 random unit coefficients, each at precision `prec`.
  static Poly random(const Ring& ring, long degree, long prec, DigitRng& rng);
  // Random with an exact leading 1 created at precision `prec`.
  static Poly random_monic(const Ring& ring, long degree, long prec, DigitRng& rng);

  const Ring& ring() const { return ring_; }
  std::size_t size() const { return coeffs_.size(); }
  const Element& operator[](std::size_t i) const { return coeffs_[i]; }

  // Largest index whose coefficient is distinguishable from zero; -1 if none.
  long degree() const;
  // Drop top coefficients that are indistinguishable from zero.
  void trim();

 private:
  Ring ring_;
  std::vector<Element> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

// Euclidean remainder of a by b (b must have nonzero degree-resolving lead).
Poly remainder(const Poly& a, const Poly& b);

// Remainder chain ending in the last nonzero element, normalized monic.
Poly euclid_gcd(Poly a, Poly b);

}  // namespace padic
