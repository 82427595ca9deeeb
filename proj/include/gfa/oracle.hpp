#pragma once

#include "gfa/group.hpp"
#include "gfa/hilbert.hpp"
#include "gfa/numeric.hpp"

namespace gfa {

// Ground-truth table of graded tensor-power dimensions:
// rows(n, x) = dim (V^{tensor n})_x. Row 0 is the delta at the identity;
// row n comes from row n-1 by one matrix-vector product with the
// transfer matrix D(x, y) = d_{x y^{-1}}. This path shares no code with
// the determinant engine beyond the group table and big integers.
struct ComponentTable {
  int n_max = 0;
  IntMat rows;  // (n_max + 1) x s
};

ComponentTable tensor_dimensions(const Group& g, const DimVector& dims,
                                 int n_max);

// Compares the engine's series expansion with the identity column of the
// table, coefficient by coefficient.
struct CrossCheck {
  bool ok = false;
  int first_mismatch = -1;  // degree of the first disagreement when !ok
  explicit operator bool() const { return ok; }
};

CrossCheck cross_check(const HilbertResult& res, const ComponentTable& table);

}  // namespace gfa
