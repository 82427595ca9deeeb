#pragma once

#include "gfa/determinant.hpp"
#include "gfa/group.hpp"
#include "gfa/rational_function.hpp"

namespace gfa {

// Graded dimensions of the generating space: dims(i) = dim V_{x_i}.
struct DimVector {
  Eigen::VectorXi dims;
  long total = 0;  // d = sum of all entries
};

DimVector dim_vector(const std::vector<int>& dims);

// Matrix of the linear system satisfied by the component series F_x(t):
// m(i, j) = d_{x_i x_j^{-1}} t - delta_{ij}, right-hand side (-1, 0, ..., 0).
// Every entry has degree <= 1 and the diagonal is d_e t - 1 throughout.
struct SystemMatrix {
  PolyMat m;
  Group group;
  DimVector dims;
};

SystemMatrix build_system_matrix(const Group& g, const DimVector& dims);

// Cramer output for the identity component. p_raw and r_raw are the raw
// column-replacement and system determinants; series is the reduced ratio
// re-signed so numerator and denominator both have constant term +1, and
// q is the cofactor of (1 - d t) in the sign-normalized r.
struct HilbertResult {
  IntPoly p_raw;
  IntPoly r_raw;
  IntPoly q;
  RatFun series;
  long d = 0;
  int s = 1;
};

HilbertResult hilbert_identity(const Group& g, const DimVector& dims,
                               int threads = 0);

// F_x(t) as a reduced rational function (constant terms re-signed
// positive); x = 0 coincides with hilbert_identity().series.
RatFun hilbert_component(const Group& g, const DimVector& dims, int x,
                         int threads = 0);

// Structural guarantees of the closed form, all checked in exact integer
// arithmetic. pre: res.d > 0.
struct StructureReport {
  bool r_vanishes_at_inv_d = false;  // d^s * r(1/d) = 0
  bool p_degree_bound = false;       // deg p <= s - 1
  bool q_degree_bound = false;       // deg q <= s - 1
  bool const_terms = false;          // p(0) = r(0) = (-1)^s
  bool all() const {
    return r_vanishes_at_inv_d && p_degree_bound && q_degree_bound && const_terms;
  }
};

StructureReport verify_structure(const HilbertResult& res);

}  // namespace gfa
