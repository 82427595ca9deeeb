#include <doctest.h>

#include <random>

#include "gfa/errors.hpp"
#include "gfa/oracle.hpp"
#include "helpers.hpp"

using namespace gfa;
using gfa::testing::count_words_bruteforce;

TEST_CASE("row zero is the delta at the identity") {
  const Group g = dihedral(3);
  const ComponentTable t =
      tensor_dimensions(g, dim_vector({1, 2, 0, 1, 0, 0}), 0);
  CHECK(t.rows(0, 0) == 1);
  for (int x = 1; x < g.order; ++x) CHECK(t.rows(0, x) == 0);
}

TEST_CASE("Z/2 all-ones counts words with evenly many odd letters") {
  const ComponentTable t = tensor_dimensions(cyclic(2), dim_vector({1, 1}), 4);
  const std::vector<Int> expect{1, 1, 2, 4, 8};
  for (int n = 0; n <= 4; ++n) CHECK(t.rows(n, 0) == expect[static_cast<std::size_t>(n)]);
}

TEST_CASE("Z/3 all-ones gives 3^(n-1) for n >= 1") {
  const ComponentTable t = tensor_dimensions(cyclic(3), dim_vector({1, 1, 1}), 6);
  Int expect = 1;
  for (int n = 1; n <= 6; ++n) {
    CHECK(t.rows(n, 0) == expect);
    expect *= 3;
  }
}

TEST_CASE("trivial grading concentrates in multiples of the support order") {
  // Support on an element of order r: degree n holds d^n when r | n, else 0.
  const Group g = cyclic(4);
  const int d = 2;
  const ComponentTable t = tensor_dimensions(g, dim_vector({0, d, 0, 0}), 8);
  const int r = element_order(g, 1);
  CHECK(r == 4);
  for (int n = 0; n <= 8; ++n) {
    if (n % r == 0)
      CHECK(t.rows(n, 0) == pow_int(Int(d), static_cast<unsigned long>(n)));
    else
      CHECK(t.rows(n, 0) == 0);
  }
}

TEST_CASE("recursion table equals exhaustive word enumeration") {
  struct Case {
    Group g;
    std::vector<int> dims;
  };
  const std::vector<Case> cases{
      {cyclic(2), {1, 1}},
      {cyclic(2), {0, 2}},
      {cyclic(3), {1, 1, 1}},
      {cyclic(4), {0, 1, 0, 1}},
      {cyclic(4), {1, 0, 2, 0}},
      {symmetric(3), {1, 1, 0, 0, 0, 0}},
      {dihedral(3), {1, 0, 2, 0, 1, 0}},
      {direct_product(cyclic(2), cyclic(2)), {1, 2, 0, 1}},
  };
  for (const Case& c : cases) {
    const int n_max = c.g.order <= 4 ? 7 : 5;
    const ComponentTable t = tensor_dimensions(c.g, dim_vector(c.dims), n_max);
    for (int n = 0; n <= n_max; ++n)
      for (int x = 0; x < c.g.order; ++x)
        CHECK(t.rows(n, x) == count_words_bruteforce(c.g, c.dims, n, x));
  }
}

TEST_CASE("row sums are d^n") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dim(0, 3);
  const std::vector<Group> groups{cyclic(5), dihedral(4), symmetric(4)};
  for (const Group& g : groups) {
    std::vector<int> dims(static_cast<std::size_t>(g.order));
    for (auto& v : dims) v = dim(rng);
    const DimVector dv = dim_vector(dims);
    const ComponentTable t = tensor_dimensions(g, dv, 30);
    for (int n = 0; n <= 30; ++n) {
      Int sum = 0;
      for (int x = 0; x < g.order; ++x) sum += t.rows(n, x);
      CHECK(sum == pow_int(Int(dv.total), static_cast<unsigned long>(n)));
    }
  }
}

TEST_CASE("entrywise monotonicity in the dimension vector") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> dim(0, 2);
  std::uniform_int_distribution<int> bump(0, 1);
  const Group g = dihedral(3);
  for (int iter = 0; iter < 10; ++iter) {
    std::vector<int> lo(static_cast<std::size_t>(g.order));
    std::vector<int> hi(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
      lo[i] = dim(rng);
      hi[i] = lo[i] + bump(rng);
    }
    const ComponentTable a = tensor_dimensions(g, dim_vector(lo), 10);
    const ComponentTable b = tensor_dimensions(g, dim_vector(hi), 10);
    for (int n = 0; n <= 10; ++n)
      for (int x = 0; x < g.order; ++x) CHECK(b.rows(n, x) >= a.rows(n, x));
  }
}

TEST_CASE("length mismatch is rejected") {
  CHECK_THROWS_AS(tensor_dimensions(cyclic(3), dim_vector({1, 1}), 4),
                  LengthMismatch);
}
