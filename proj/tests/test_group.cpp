#include <doctest.h>

#include <random>

#include "gfa/errors.hpp"
#include "gfa/group.hpp"

using namespace gfa;

TEST_CASE("trivial group from a 1x1 table") {
  const Group g = from_cayley_table(std::vector<std::vector<int>>{{0}});
  CHECK(g.order == 1);
  CHECK(g.inv(0) == 0);
}

TEST_CASE("order-2 table is Z/2") {
  const Group g = from_cayley_table(std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(g.order == 2);
  CHECK(g.mul(1, 1) == 0);
  CHECK(g.inv(1) == 1);
}

TEST_CASE("non-permutation row is rejected") {
  const std::vector<std::vector<int>> t{
      {0, 1, 2, 3}, {1, 1, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  CHECK_THROWS_AS(from_cayley_table(t), NotAGroup);
}

TEST_CASE("order-5 loop that is not associative is rejected") {
  // Latin square with two-sided identity; any group of order 5 is cyclic,
  // but here 1*1 = 0, so associativity must fail somewhere.
  const std::vector<std::vector<int>> t{{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}};
  CHECK_THROWS_WITH_AS(from_cayley_table(t),
                       doctest::Contains("associativity"), NotAGroup);
}

TEST_CASE("identity is moved to index 0") {
  // Z/3 with elements listed as (g, e, g^2).
  const std::vector<std::vector<int>> t{{2, 0, 1}, {0, 1, 2}, {1, 2, 0}};
  const Group g = from_cayley_table(t, {"g", "e", "g2"});
  CHECK(g.labels[0] == "e");
  for (int j = 0; j < 3; ++j) {
    CHECK(g.mul(0, j) == j);
    CHECK(g.mul(j, 0) == j);
  }
  CHECK(element_order(g, 1) == 3);
}

TEST_CASE("cyclic groups") {
  const Group g = cyclic(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(g.mul(i, j) == (i + j) % 3);
  CHECK(element_order(cyclic(6), 0) == 1);
  CHECK(element_order(cyclic(6), 2) == 3);
}

TEST_CASE("Klein four-group: every element self-inverse") {
  const Group v4 = direct_product(cyclic(2), cyclic(2));
  CHECK(v4.order == 4);
  for (int i = 0; i < 4; ++i) CHECK(v4.mul(i, i) == 0);
}

TEST_CASE("S3 has exactly three elements of order 2") {
  const Group s3 = symmetric(3);
  CHECK(s3.order == 6);
  int involutions = 0;
  for (int i = 0; i < s3.order; ++i)
    if (element_order(s3, i) == 2) ++involutions;
  CHECK(involutions == 3);
  CHECK(element_order(s3, 1) == 2);  // "132", a transposition
}

TEST_CASE("dihedral groups") {
  const Group d4 = dihedral(4);
  CHECK(d4.order == 8);
  CHECK(element_order(d4, 1) == 4);   // r
  CHECK(element_order(d4, 4) == 2);   // s
  CHECK_THROWS_AS(dihedral(1), BoundExceeded);
}

TEST_CASE("symmetric(n) bounds") {
  CHECK(symmetric(1).order == 1);
  CHECK(symmetric(4).order == 24);
  CHECK_THROWS_AS(symmetric(7), BoundExceeded);
}

TEST_CASE("round-trip and Lagrange over the built-in families") {
  std::vector<Group> corpus;
  for (int n = 1; n <= 8; ++n) corpus.push_back(cyclic(n));
  for (int n = 2; n <= 5; ++n) corpus.push_back(dihedral(n));
  corpus.push_back(symmetric(3));
  corpus.push_back(symmetric(4));
  corpus.push_back(direct_product(cyclic(2), cyclic(2)));
  corpus.push_back(direct_product(cyclic(2), cyclic(3)));
  corpus.push_back(direct_product(symmetric(3), cyclic(4)));

  for (const Group& g : corpus) {
    const Group back = from_cayley_table(g.table, g.labels);
    CHECK(back.table == g.table);
    CHECK(back.inverse == g.inverse);
    CHECK(back.labels == g.labels);
    for (int i = 0; i < g.order; ++i) CHECK(g.order % element_order(g, i) == 0);
  }
}

TEST_CASE("round-trip of randomly relabeled tables") {
  std::mt19937 rng(20240811);
  const Group base = symmetric(3);
  for (int iter = 0; iter < 10; ++iter) {
    std::vector<int> perm(static_cast<std::size_t>(base.order));
    for (int i = 0; i < base.order; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Eigen::MatrixXi t(base.order, base.order);
    std::vector<int> inv_perm(perm.size());
    for (int i = 0; i < base.order; ++i)
      inv_perm[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < base.order; ++i)
      for (int j = 0; j < base.order; ++j)
        t(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) =
            perm[static_cast<std::size_t>(base.table(i, j))];
    const Group g = from_cayley_table(t);
    CHECK(g.order == base.order);
    // Isomorphic relabeling: the multiset of element orders must agree.
    std::vector<int> orders_a, orders_b;
    for (int i = 0; i < base.order; ++i) {
      orders_a.push_back(element_order(base, i));
      orders_b.push_back(element_order(g, i));
    }
    std::sort(orders_a.begin(), orders_a.end());
    std::sort(orders_b.begin(), orders_b.end());
    CHECK(orders_a == orders_b);
    // And the normalized table must round-trip identically.
    CHECK(from_cayley_table(g.table, g.labels).table == g.table);
  }
}

TEST_CASE("direct product order") {
  CHECK(direct_product(symmetric(3), cyclic(4)).order == 24);
  CHECK_THROWS_AS(direct_product(symmetric(6), cyclic(2)), BoundExceeded);
}
