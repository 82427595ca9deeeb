#pragma once

#include "gfa/polynomial.hpp"

namespace gfa {

// Exact determinant by fraction-free (Bareiss) elimination. Works for any
// integral-domain scalar providing exact_div; every division in the
// elimination is exact by the Sylvester identity.
template <class Matrix>
typename Matrix::Scalar det_bareiss(Matrix m) {
  using Scalar = typename Matrix::Scalar;
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("det_bareiss: matrix not square");
  if (n == 0) return Scalar(1);

  bool negate = false;
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index pivot = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  return negate ? Scalar(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

// Exact determinant of a matrix of integer polynomials: evaluate at the
// integer points 0..D, run det_bareiss at each point, then interpolate.
// degree_bound must dominate the true determinant degree; it is clipped
// against the structural row/column bound before choosing D. Evaluation
// points are independent and spread over `threads` workers (0 = all cores)
// with a merge order fixed by the point index.
IntPoly det_poly(const PolyMat& m, int degree_bound, int threads = 0);

}  // namespace gfa
