#pragma once

#include <random>
#include <vector>

#include "gfa/group.hpp"
#include "gfa/numeric.hpp"
#include "gfa/polynomial.hpp"

namespace gfa::testing {

inline IntPoly poly(std::vector<long> coeffs) {
  std::vector<Int> c(coeffs.begin(), coeffs.end());
  return IntPoly::from_coeffs(std::move(c));
}

inline IntPoly random_poly(std::mt19937& rng, int max_degree, int max_abs) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coeff(-max_abs, max_abs);
  std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = coeff(rng);
  return IntPoly::from_coeffs(std::move(c));
}

// Determinant by cofactor expansion along the first row; exponential, for
// cross-checking the elimination path on small matrices.
inline Int det_cofactor(const IntMat& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int acc = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMat minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i) {
      Eigen::Index cc = 0;
      for (Eigen::Index k = 0; k < n; ++k) {
        if (k == j) continue;
        minor(i - 1, cc++) = m(i, k);
      }
    }
    const Int term = m(0, j) * det_cofactor(minor);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// Exhaustive count of the graded dimensions: a word of length n in letters
// of grades y_1..y_n contributes prod dims[y_i] basis monomials, and lands
// in the x component iff y_1...y_n = x. Enumerates all s^n grade
// sequences, so keep n small. Independent of both the recursion table and
// the determinant engine.
inline Int count_words_bruteforce(const Group& g, const std::vector<int>& dims,
                                  int n, int target) {
  if (n == 0) return target == 0 ? 1 : 0;
  const int s = g.order;
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  Int total = 0;
  for (;;) {
    int prod = 0;
    Int weight = 1;
    for (int i = 0; i < n; ++i) {
      const int y = word[static_cast<std::size_t>(i)];
      prod = g.mul(prod, y);
      weight *= dims[static_cast<std::size_t>(y)];
    }
    if (prod == target) total += weight;
    int pos = n - 1;
    while (pos >= 0 && ++word[static_cast<std::size_t>(pos)] == s) {
      word[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return total;
}

}  // namespace gfa::testing
