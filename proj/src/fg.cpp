#include "gfa/fg.hpp"

#include <stdexcept>

#include "gfa/errors.hpp"

namespace gfa {

namespace {

// v^deg(p) * p(1/v) as an exact integer; zero iff 1/v is a root of p.
Int eval_at_reciprocal(const IntPoly& p, long v) {
  Int acc = 0;
  for (int n = 0; n <= p.degree(); ++n)
    acc += p.coeff(n) * pow_int(Int(v), static_cast<unsigned long>(p.degree() - n));
  return acc;
}

}  // namespace

GradingClass classify_grading(const DimVector& dims) {
  GradingClass c;
  for (int i = 0; i < dims.dims.size(); ++i)
    if (dims.dims(i) > 0) c.support.push_back(i);
  c.trivial = c.support.size() <= 1;
  return c;
}

std::string to_string(FgReason r) {
  switch (r) {
    case FgReason::TrivialGrading: return "TrivialGrading";
    case FgReason::InversePolynomial: return "InversePolynomial";
    case FgReason::InverseNotPolynomial: return "InverseNotPolynomial";
  }
  return "?";
}

FgVerdict is_finitely_generated(const Group& g, const DimVector& dims,
                                const HilbertResult& res) {
  FgVerdict v;
  const GradingClass cls = classify_grading(dims);
  v.support = cls.support;

  // P^{-1} = den/num is a polynomial iff the reduced numerator is
  // constant; with both constant terms normalized to +1 that constant is 1.
  v.finitely_generated = res.series.num == IntPoly(1);

  if (cls.trivial) {
    if (!v.finitely_generated)
      throw std::logic_error(
          "trivial grading produced a non-constant reduced numerator");
    v.reason = FgReason::TrivialGrading;
    v.trivial_support_order =
        cls.support.empty() ? 1 : element_order(g, cls.support.front());
  } else {
    v.reason = v.finitely_generated ? FgReason::InversePolynomial
                                    : FgReason::InverseNotPolynomial;
  }
  return v;
}

RatFun trivial_grading_series(long d, int r) {
  if (d < 0 || r < 1)
    throw PreconditionViolated("trivial_grading_series: need d >= 0, r >= 1");
  if (d == 0) return RatFun{IntPoly(1), IntPoly(1)};
  const Int dr = pow_int(Int(d), static_cast<unsigned long>(r));
  return RatFun{IntPoly(1), IntPoly(1) - IntPoly::monomial(dr, r)};
}

Int generator_count_trivial(long d, int r) {
  if (d < 0 || r < 1)
    throw PreconditionViolated("generator_count_trivial: need d >= 0, r >= 1");
  if (d == 0) return 0;
  return pow_int(Int(d), static_cast<unsigned long>(r));
}

GeneratorSeries generator_series(const HilbertResult& res, int n_max) {
  if (res.series.num.coeff(0) != 1 || res.series.den.coeff(0) != 1)
    throw PreconditionViolated("generator_series: series not normalized");
  GeneratorSeries out;
  // g = 1 - 1/P = (num - den)/num.
  out.closed_form =
      normalized_at_zero(reduce(res.series.num - res.series.den, res.series.num));
  out.coeffs = expand(out.closed_form, n_max);
  for (int n = 0; n <= n_max; ++n)
    if (out.coeffs[static_cast<std::size_t>(n)] < 0)
      throw NegativeGeneratorCount(
          "generator count is negative at degree " + std::to_string(n));
  return out;
}

bool verify_nontrivial_theorem(const Group& g, const DimVector& dims) {
  const GradingClass cls = classify_grading(dims);
  if (cls.trivial || dims.dims(0) == 0)
    throw PreconditionViolated(
        "verify_nontrivial_theorem: needs a nontrivial grading with dims[e] > 0");
  const HilbertResult res = hilbert_identity(g, dims);
  return !is_finitely_generated(g, dims, res).finitely_generated;
}

TwoBlockRoots verify_two_block_roots(const Group& g, const DimVector& dims) {
  const GradingClass cls = classify_grading(dims);
  if (cls.support.size() != 2 || cls.support.front() != 0)
    throw PreconditionViolated(
        "verify_two_block_roots: support must be exactly {e, x} with x != e");
  const long d_e = dims.dims(0);
  const HilbertResult res = hilbert_identity(g, dims);
  TwoBlockRoots roots;
  roots.p_root = eval_at_reciprocal(res.p_raw, d_e) == 0;
  roots.r_nonroot = eval_at_reciprocal(res.r_raw, d_e) != 0;
  return roots;
}

}  // namespace gfa
