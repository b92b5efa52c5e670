#include "padic/poly.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace padic {

Poly::Poly(Ring ring, std::vector<Element> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("polynomial needs at least one coefficient");
  for (const auto& c : coeffs_)
    if (!ring_.same_ring(c)) throw MixedRings();
}

Poly Poly::random(const Ring& ring, long degree, long prec, DigitRng& rng) {
  std::vector<Element> cs;
  cs.reserve(static_cast<std::size_t>(degree) + 1);
  for (long i = 0; i <= degree; ++i) cs.push_back(ring.random_unit(rng, prec));
  return Poly(ring, std::move(cs));
}

Poly Poly::random_monic(const Ring& ring, long degree, long prec, DigitRng& rng) {
  std::vector<Element> cs;
  cs.reserve(static_cast<std::size_t>(degree) + 1);
  for (long i = 0; i < degree; ++i) cs.push_back(ring.random_unit(rng, prec));
  cs.push_back(ring.element(1, prec));
  return Poly(ring, std::move(cs));
}

long Poly::degree() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    if (!coeffs_[i].is_zero()) return static_cast<long>(i);
  return -1;
}

void Poly::trim() {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Element> cs;
  const std::size_t n = std::max(a.size(), b.size());
  cs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= a.size())
      cs.push_back(b[i]);
    else if (i >= b.size())
      cs.push_back(a[i]);
    else
      cs.push_back(a[i] + b[i]);
  }
  return Poly(a.ring(), std::move(cs));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Element> cs;
  const std::size_t n = std::max(a.size(), b.size());
  cs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= a.size())
      cs.push_back(-b[i]);
    else if (i >= b.size())
      cs.push_back(a[i]);
    else
      cs.push_back(a[i] - b[i]);
  }
  return Poly(a.ring(), std::move(cs));
}

Poly operator*(const Poly& a, const Poly& b) {
  std::vector<Element> cs;
  cs.reserve(a.size() + b.size() - 1);
  for (std::size_t k = 0; k < a.size() + b.size() - 1; ++k) {
    std::optional<Element> acc;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (k < i || k - i >= b.size()) continue;
      Element term = a[i] * b[k - i];
      acc = acc ? *acc + term : term;
    }
    cs.push_back(*acc);
  }
  return Poly(a.ring(), std::move(cs));
}

Poly remainder(const Poly& a, const Poly& b) {
  const long db = b.degree();
  if (db < 0) throw DivisionByZero();
  std::vector<Element> r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i]);
  while (static_cast<long>(r.size()) - 1 >= db) {
    const std::size_t d = r.size() - 1;
    // A top coefficient indistinguishable from zero is dropped as zero; that
    // decision is exactly where the tracking mode earns or loses its keep.
    if (!r[d].is_zero()) {
      const Element q = r[d] / b[static_cast<std::size_t>(db)];
      for (long j = 0; j < db; ++j) {
        const std::size_t k = d - static_cast<std::size_t>(db) + static_cast<std::size_t>(j);
        r[k] = r[k] - q * b[static_cast<std::size_t>(j)];
      }
    }
    r.pop_back();
  }
  if (r.empty()) r.push_back(a.ring().element(0));
  return Poly(a.ring(), std::move(r));
}

Poly euclid_gcd(Poly a, Poly b) {
  a.trim();
  b.trim();
  while (b.degree() >= 0) {
    Poly r = remainder(a, b);
    r.trim();
    a = std::move(b);
    b = std::move(r);
  }
  const long d = a.degree();
  if (d < 0) return a;
  std::vector<Element> cs;
  cs.reserve(static_cast<std::size_t>(d) + 1);
  for (long j = 0; j <= d; ++j)
    cs.push_back(a[static_cast<std::size_t>(j)] / a[static_cast<std::size_t>(d)]);
  return Poly(a.ring(), std::move(cs));
}

}  // namespace padic
