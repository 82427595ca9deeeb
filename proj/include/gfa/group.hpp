#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

namespace gfa {

// Validated finite group given by its full Cayley table. Index 0 is always
// the identity; table(i, j) is the index of x_i * x_j. Values are immutable
// after construction and safe to share across threads.
struct Group {
  int order = 1;
  Eigen::MatrixXi table;
  std::vector<int> inverse;
  std::vector<std::string> labels;

  int mul(int i, int j) const { return table(i, j); }
  int inv(int i) const { return inverse[static_cast<std::size_t>(i)]; }
};

// Cayley tables above this order are rejected; 720 = |S6| is the intended
// stress ceiling for the polynomial determinants downstream.
inline constexpr int kMaxGroupOrder = 720;

// Validates the group axioms (identity, Latin-square rows/columns,
// associativity) and normalizes the identity to index 0, permuting labels
// consistently. Throws NotAGroup naming the first violation.
Group from_cayley_table(const Eigen::MatrixXi& table,
                        std::vector<std::string> labels = {});
Group from_cayley_table(const std::vector<std::vector<int>>& table,
                        std::vector<std::string> labels = {});

Group cyclic(int n);
Group dihedral(int n);  // order 2n, n >= 2
Group symmetric(int n);  // order n!, n in 1..6
Group direct_product(const Group& g, const Group& h);

// Smallest r >= 1 with x_i^r = e.
int element_order(const Group& g, int i);

}  // namespace gfa
