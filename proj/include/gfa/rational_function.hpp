#pragma once

#include <string>
#include <vector>

#include "gfa/polynomial.hpp"

namespace gfa {

// Reduced ratio of integer polynomials. reduce() is the factory: it strips
// the polynomial gcd and the shared integer content and leaves the
// denominator with a positive leading coefficient. Code that needs the
// presentation form with den(0) = +1 re-signs via normalized_at_zero().
struct RatFun {
  IntPoly num;
  IntPoly den = IntPoly(1);
};

RatFun reduce(const IntPoly& num, const IntPoly& den);

// Flips both signs so den(0) > 0. pre: den(0) != 0.
RatFun normalized_at_zero(RatFun f);

// Equality as rational functions (cross-multiplied), so differently
// normalized representatives compare equal.
bool operator==(const RatFun& a, const RatFun& b);

RatFun operator+(const RatFun& a, const RatFun& b);

// First n_max+1 Maclaurin coefficients of num/den by long division.
// Throws NotExpandable if den(0) = 0; every division step must be exact,
// which holds for every series this engine produces.
std::vector<Int> expand(const RatFun& f, int n_max);

std::string to_string(const RatFun& f);

}  // namespace gfa
