#include "gfa/determinant.hpp"

#include <stdexcept>

#include "gfa/errors.hpp"

namespace gfa {

namespace {

// Degree of det(m) is at most the sum over rows (or columns) of the
// largest entry degree; -1 when some row or column is identically zero.
int structural_degree_bound(const PolyMat& m) {
  const Eigen::Index n = m.rows();
  long rows = 0, cols = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    int best = -1;
    for (Eigen::Index j = 0; j < n; ++j)
      if (m(i, j).degree() > best) best = m(i, j).degree();
    if (best < 0) return -1;
    rows += best;
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    int best = -1;
    for (Eigen::Index i = 0; i < n; ++i)
      if (m(i, j).degree() > best) best = m(i, j).degree();
    if (best < 0) return -1;
    cols += best;
  }
  return static_cast<int>(rows < cols ? rows : cols);
}

// Newton interpolation at the unit-spaced nodes 0..D. The divided
// differences live in Q; the result must clear to integer coefficients.
IntPoly interpolate_integral(const std::vector<Int>& values) {
  const int d = static_cast<int>(values.size()) - 1;
  std::vector<Rat> dd(values.begin(), values.end());
  for (int j = 1; j <= d; ++j)
    for (int i = d; i >= j; --i)
      dd[static_cast<std::size_t>(i)] =
          (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) /
          Rat(static_cast<long>(j));
  RatPoly result;
  RatPoly basis(1);
  for (int k = 0; k <= d; ++k) {
    result += basis * dd[static_cast<std::size_t>(k)];
    basis = basis * RatPoly::from_coeffs({Rat(static_cast<long>(-k)), Rat(1)});
  }
  std::vector<Int> coeffs;
  coeffs.reserve(result.coeffs().size());
  for (const Rat& c : result.coeffs()) {
    if (c.get_den() != 1)
      throw InterpolationNotIntegral(
          "det_poly: interpolation produced a non-integer coefficient");
    coeffs.push_back(c.get_num());
  }
  return IntPoly::from_coeffs(std::move(coeffs));
}

}  // namespace

IntPoly det_poly(const PolyMat& m, int degree_bound, int threads) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("det_poly: matrix not square");
  if (degree_bound < 0) throw std::invalid_argument("det_poly: negative degree bound");
  if (n == 0) return IntPoly(1);

  const int structural = structural_degree_bound(m);
  if (structural < 0) return IntPoly{};
  const int d = structural < degree_bound ? structural : degree_bound;

  std::vector<Int> values(static_cast<std::size_t>(d) + 1);
  parallel_for(
      d + 1,
      [&](std::ptrdiff_t p) {
        const Int point(static_cast<long>(p));
        IntMat ev(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
          for (Eigen::Index j = 0; j < n; ++j) ev(i, j) = m(i, j)(point);
        values[static_cast<std::size_t>(p)] = det_bareiss(std::move(ev));
      },
      threads);

  return interpolate_integral(values);
}

}  // namespace gfa
