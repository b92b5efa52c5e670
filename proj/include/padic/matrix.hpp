#pragma once

#include <cstddef>
#include <vector>

#include "padic/ring.hpp"

namespace padic {

// Square matrix with tracked entries, row-major.
class Mat {
 public:
  Mat(Ring ring, std::size_t n, std::vector<Element> entries);

  // n*n random unit entries, each at precision `prec`.
  static Mat random(const Ring& ring, std::size_t n, long prec, DigitRng& rng);

  const Ring& ring() const { return ring_; }
  std::size_t dim() const { return n_; }
  const Element& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

 private:
  Ring ring_;
  std::size_t n_;
  std::vector<Element> e_;
};

Mat operator*(const Mat& a, const Mat& b);

// Coefficients of det(xI - A), ascending in x (size dim+1, leading exactly 1).
// Division-free: only ring additions and multiplications are used.
std::vector<Element> charpoly(const Mat& a);

// Determinant by memoized first-row expansion; also division-free, but a
// different circuit than charpoly's constant term.
Element det(const Mat& a);

}  // namespace padic
