#include "padic/matrix.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>
#include <utility>

namespace padic {

Mat::Mat(Ring ring, std::size_t n, std::vector<Element> entries)
    : ring_(std::move(ring)), n_(n), e_(std::move(entries)) {
  if (n_ == 0 || e_.size() != n_ * n_)
    throw std::invalid_argument("matrix needs n*n entries, n >= 1");
  for (const auto& x : e_)
    if (!ring_.same_ring(x)) throw MixedRings();
}

Mat Mat::random(const Ring& ring, std::size_t n, long prec, DigitRng& rng) {
  std::vector<Element> es;
  es.reserve(n * n);
  for (std::size_t i = 0; i < n * n; ++i) es.push_back(ring.random_unit(rng, prec));
  return Mat(ring, n, std::move(es));
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimensions differ");
  const std::size_t n = a.dim();
  std::vector<Element> es;
  es.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::optional<Element> acc;
      for (std::size_t k = 0; k < n; ++k) {
        Element term = a.at(i, k) * b.at(k, j);
        acc = acc ? *acc + term : std::move(term);
      }
      es.push_back(std::move(*acc));
    }
  }
  return Mat(a.ring(), n, std::move(es));
}

// Berkowitz: q_r(x) = charpoly of the r-th leading principal submatrix,
// descending coefficients, obtained from q_{r-1} by a lower-triangular
// Toeplitz transform whose column is (1, -a, -R C, -R M C, -R M^2 C, ...).
std::vector<Element> charpoly(const Mat& A) {
  const std::size_t n = A.dim();
  const Ring& ring = A.ring();
  const Element one = ring.element(1, kInfinite);

  std::vector<Element> q;
  q.push_back(one);
  q.push_back(-A.at(0, 0));
  for (std::size_t r = 2; r <= n; ++r) {
    std::vector<Element> t;
    t.reserve(r + 1);
    t.push_back(one);
    t.push_back(-A.at(r - 1, r - 1));
    std::vector<Element> w;
    w.reserve(r - 1);
    for (std::size_t j = 0; j + 1 < r; ++j) w.push_back(A.at(r - 1, j));
    for (std::size_t k = 2; k <= r; ++k) {
      std::optional<Element> dot;
      for (std::size_t i = 0; i + 1 < r; ++i) {
        Element term = w[i] * A.at(i, r - 1);
        dot = dot ? *dot + term : std::move(term);
      }
      t.push_back(-*dot);
      if (k == r) break;
      std::vector<Element> w2;
      w2.reserve(r - 1);
      for (std::size_t j = 0; j + 1 < r; ++j) {
        std::optional<Element> acc;
        for (std::size_t i = 0; i + 1 < r; ++i) {
          Element term = w[i] * A.at(i, j);
          acc = acc ? *acc + term : std::move(term);
        }
        w2.push_back(std::move(*acc));
      }
      w = std::move(w2);
    }
    std::vector<Element> q2;
    q2.reserve(r + 1);
    for (std::size_t i = 0; i <= r; ++i) {
      std::optional<Element> acc;
      for (std::size_t k = 0; k <= std::min(i, r); ++k) {
        if (i - k >= q.size()) continue;
        Element term = t[k] * q[i - k];
        acc = acc ? *acc + term : std::move(term);
      }
      q2.push_back(std::move(*acc));
    }
    q = std::move(q2);
  }
  std::reverse(q.begin(), q.end());
  return q;
}

namespace {

Element det_expand(const Mat& A, unsigned mask,
                   std::vector<std::optional<Element>>& memo) {
  auto& slot = memo[mask];
  if (slot) return *slot;
  const std::size_t row = A.dim() - static_cast<std::size_t>(std::popcount(mask));
  std::optional<Element> acc;
  bool positive = true;
  for (std::size_t c = 0; c < A.dim(); ++c) {
    if (!(mask & (1u << c))) continue;
    const unsigned rest = mask & ~(1u << c);
    Element term = rest == 0 ? A.at(row, c) : A.at(row, c) * det_expand(A, rest, memo);
    if (!acc)
      acc = positive ? std::move(term) : -term;
    else
      acc = positive ? *acc + term : *acc - term;
    positive = !positive;
  }
  slot = std::move(*acc);
  return *slot;
}

}  // namespace

Element det(const Mat& A) {
  const std::size_t n = A.dim();
  if (n > 16) throw std::invalid_argument("expansion determinant capped at dim 16");
  std::vector<std::optional<Element>> memo(std::size_t(1) << n);
  return det_expand(A, (1u << n) - 1, memo);
}

}  // namespace padic
