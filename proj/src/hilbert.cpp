#include "gfa/hilbert.hpp"

#include <stdexcept>

#include "gfa/errors.hpp"

namespace gfa {

namespace {

void check_dims(const Group& g, const DimVector& dims) {
  if (dims.dims.size() != g.order)
    throw LengthMismatch("dimension vector has " +
                         std::to_string(dims.dims.size()) +
                         " entries for a group of order " +
                         std::to_string(g.order));
}

// Column x of the system matrix replaced by the right-hand side.
void replace_by_rhs(PolyMat& m, int x) {
  m(0, x) = IntPoly(-1);
  for (Eigen::Index i = 1; i < m.rows(); ++i) m(i, x) = IntPoly{};
}

Int pow_long(long base, unsigned long exp) { return pow_int(Int(base), exp); }

}  // namespace

DimVector dim_vector(const std::vector<int>& dims) {
  DimVector v;
  v.dims.resize(static_cast<Eigen::Index>(dims.size()));
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 0)
      throw std::invalid_argument("dim_vector: negative dimension at index " +
                                  std::to_string(i));
    v.dims(static_cast<Eigen::Index>(i)) = dims[i];
    v.total += dims[i];
  }
  return v;
}

SystemMatrix build_system_matrix(const Group& g, const DimVector& dims) {
  check_dims(g, dims);
  const int s = g.order;
  PolyMat m(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      const int k = g.mul(i, g.inv(j));  // x_i * x_j^{-1}
      std::vector<Int> c{Int(i == j ? -1 : 0), Int(dims.dims(k))};
      m(i, j) = IntPoly::from_coeffs(std::move(c));
    }
  return SystemMatrix{std::move(m), g, dims};
}

HilbertResult hilbert_identity(const Group& g, const DimVector& dims,
                               int threads) {
  check_dims(g, dims);
  HilbertResult res;
  res.d = dims.total;
  res.s = g.order;
  const int s = g.order;
  const bool s_even = s % 2 == 0;

  if (res.d == 0) {
    // V = 0: the system matrix is -I at every t.
    res.p_raw = IntPoly(s_even ? 1 : -1);
    res.r_raw = res.p_raw;
    res.q = IntPoly(1);
    res.series = RatFun{IntPoly(1), IntPoly(1)};
    return res;
  }
  if (s == 1) {
    res.r_raw = IntPoly::from_coeffs({Int(-1), Int(res.d)});
    res.p_raw = IntPoly(-1);
    res.q = IntPoly(1);
    res.series = RatFun{IntPoly(1), IntPoly::from_coeffs({Int(1), Int(-res.d)})};
    return res;
  }

  SystemMatrix sm = build_system_matrix(g, dims);
  res.r_raw = det_poly(sm.m, s, threads);
  replace_by_rhs(sm.m, 0);
  res.p_raw = det_poly(sm.m, s, threads);

  res.series = normalized_at_zero(reduce(res.p_raw, res.r_raw));

  // (1 - d t) divides the sign-normalized r; failure here is a bug, not a
  // property of the input.
  const IntPoly r_norm = s_even ? res.r_raw : -res.r_raw;
  const IntPoly one_minus_dt = IntPoly::from_coeffs({Int(1), Int(-res.d)});
  res.q = divide_exact(r_norm, one_minus_dt);
  return res;
}

RatFun hilbert_component(const Group& g, const DimVector& dims, int x,
                         int threads) {
  check_dims(g, dims);
  const int s = g.order;
  if (x < 0 || x >= s)
    throw PreconditionViolated("hilbert_component: index out of range");

  if (dims.total == 0)
    return x == 0 ? RatFun{IntPoly(1), IntPoly(1)} : RatFun{};
  if (s == 1)
    return RatFun{IntPoly(1), IntPoly::from_coeffs({Int(1), Int(-dims.total)})};

  SystemMatrix sm = build_system_matrix(g, dims);
  const IntPoly r = det_poly(sm.m, s, threads);
  replace_by_rhs(sm.m, x);
  const IntPoly px = det_poly(sm.m, s, threads);
  if (px.is_zero()) return RatFun{};
  return normalized_at_zero(reduce(px, r));
}

StructureReport verify_structure(const HilbertResult& res) {
  if (res.d <= 0)
    throw PreconditionViolated("verify_structure: requires d > 0");
  StructureReport rep;
  // d^s * r(1/d) as an integer; deg r <= s so every exponent is >= 0.
  Int acc = 0;
  for (int n = 0; n <= res.r_raw.degree(); ++n)
    acc += res.r_raw.coeff(n) *
           pow_long(res.d, static_cast<unsigned long>(res.s - n));
  rep.r_vanishes_at_inv_d = acc == 0;
  rep.p_degree_bound = res.p_raw.degree() <= res.s - 1;
  rep.q_degree_bound = res.q.degree() <= res.s - 1;
  const Int sign(res.s % 2 == 0 ? 1 : -1);
  rep.const_terms = res.p_raw.coeff(0) == sign && res.r_raw.coeff(0) == sign;
  return rep;
}

}  // namespace gfa
