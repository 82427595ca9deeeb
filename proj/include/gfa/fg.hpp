#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfa/hilbert.hpp"

namespace gfa {

// A grading is trivial when at most one component of V is nonzero.
struct GradingClass {
  bool trivial = true;
  std::vector<int> support;  // indices x with dims[x] > 0
};

GradingClass classify_grading(const DimVector& dims);

enum class FgReason { TrivialGrading, InversePolynomial, InverseNotPolynomial };

std::string to_string(FgReason r);

// Verdict on finite generation of the identity component. The boolean is
// always the inverse-polynomial criterion on the reduced series (P^{-1}
// is a polynomial iff the reduced numerator is the constant 1); the
// reason records whether the trivial-grading fast path applies.
struct FgVerdict {
  bool finitely_generated = false;
  FgReason reason = FgReason::InverseNotPolynomial;
  std::vector<int> support;
  std::optional<int> trivial_support_order;  // order of the support element
};

FgVerdict is_finitely_generated(const Group& g, const DimVector& dims,
                                const HilbertResult& res);

// Closed form for a trivial grading of dimension d supported on an
// element of order r: 1 / (1 - d^r t^r).
RatFun trivial_grading_series(long d, int r);

// Size of the generating set exhibited in the trivial case: d^r.
Int generator_count_trivial(long d, int r);

// Free-generator counting series g(t) = 1 - 1/P for the free algebra with
// Hilbert series P, with its expansion through degree n_max. Coefficients
// are degree counts of any free generating set, so a negative entry can
// only mean an arithmetic bug and is fatal.
struct GeneratorSeries {
  RatFun closed_form;
  std::vector<Int> coeffs;
};

GeneratorSeries generator_series(const HilbertResult& res, int n_max);

// True iff the verdict for this nontrivial grading with dims[e] > 0 is
// "not finitely generated" (always, for a correct engine).
bool verify_nontrivial_theorem(const Group& g, const DimVector& dims);

// Root analysis behind the two-block reduction: with support exactly
// {e, x}, the numerator determinant vanishes at t = 1/d_e while the
// denominator determinant does not. Both evaluations are homogenized to
// stay in integer arithmetic.
struct TwoBlockRoots {
  bool p_root = false;
  bool r_nonroot = false;
};

TwoBlockRoots verify_two_block_roots(const Group& g, const DimVector& dims);

}  // namespace gfa
