#include <doctest.h>

#include <random>

#include "gfa/determinant.hpp"
#include "helpers.hpp"

using namespace gfa;
using gfa::testing::det_cofactor;
using gfa::testing::poly;

namespace {

PolyMat poly_mat(const std::vector<std::vector<IntPoly>>& rows) {
  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  PolyMat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

}  // namespace

TEST_CASE("integer determinants of small matrices") {
  CHECK(det_bareiss(IntMat(IntMat::Identity(4, 4))) == 1);
  IntMat m(2, 2);
  m << 2, 1, 1, 2;
  CHECK(det_bareiss(m) == 3);
  IntMat z(3, 3);
  z.setZero();
  CHECK(det_bareiss(z) == 0);
  // Pivoting path: leading zero forces a row swap.
  IntMat p(2, 2);
  p << 0, 1, 1, 0;
  CHECK(det_bareiss(p) == -1);
}

TEST_CASE("random 5x5 matrices against cofactor expansion") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int iter = 0; iter < 50; ++iter) {
    IntMat m(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) m(i, j) = entry(rng);
    CHECK(det_bareiss(m) == det_cofactor(m));
  }
}

TEST_CASE("polynomial determinant of the 2x2 Z/2 system") {
  const IntPoly t_minus_1 = poly({-1, 1});
  const IntPoly t = poly({0, 1});
  const PolyMat m = poly_mat({{t_minus_1, t}, {t, t_minus_1}});
  CHECK(det_poly(m, 2) == poly({1, -2}));  // (t-1)^2 - t^2 = 1 - 2t
}

TEST_CASE("diagonal polynomial matrices") {
  const int s = 6;
  PolyMat m(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) m(i, j) = i == j ? poly({-1, 1}) : IntPoly{};
  IntPoly expect(1);
  for (int i = 0; i < s; ++i) expect = expect * poly({-1, 1});
  CHECK(det_poly(m, s) == expect);
}

TEST_CASE("equal rows give a zero determinant") {
  const IntPoly t = poly({0, 1});
  const PolyMat m = poly_mat({{t, poly({1, 1}), poly({2})},
                              {t, poly({1, 1}), poly({2})},
                              {poly({5}), poly({0, 3}), poly({1, -1})}});
  CHECK(det_poly(m, 3) == IntPoly{});
}

TEST_CASE("det_poly commutes with evaluation") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int iter = 0; iter < 30; ++iter) {
    const int n = 2 + iter % 4;
    PolyMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(i, j) = IntPoly::from_coeffs({Int(entry(rng)), Int(entry(rng))});
    const IntPoly d = det_poly(m, n);
    const Int v(entry(rng) + 10);
    IntMat ev(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ev(i, j) = m(i, j)(v);
    CHECK(d(v) == det_bareiss(ev));
  }
}

TEST_CASE("thread count does not change the result") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-3, 3);
  PolyMat m(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      m(i, j) = IntPoly::from_coeffs({Int(entry(rng)), Int(entry(rng))});
  const IntPoly serial = det_poly(m, 8, 1);
  CHECK(det_poly(m, 8, 4) == serial);
  CHECK(det_poly(m, 8, 0) == serial);
}
