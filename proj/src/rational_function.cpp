#include "gfa/rational_function.hpp"

#include <stdexcept>

#include "gfa/errors.hpp"

namespace gfa {

RatFun reduce(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("reduce: zero denominator");
  if (num.is_zero()) return RatFun{IntPoly{}, IntPoly(1)};
  const IntPoly g = gcd_primitive(num, den);
  IntPoly n = divide_exact(num, g);
  IntPoly d = divide_exact(den, g);
  const Int c = gcd_int(content(n), content(d));
  n = divexact_scalar(n, c);
  d = divexact_scalar(d, c);
  if (d.leading() < 0) {
    n = -n;
    d = -d;
  }
  return RatFun{std::move(n), std::move(d)};
}

RatFun normalized_at_zero(RatFun f) {
  const Int c = f.den.coeff(0);
  if (c == 0)
    throw std::invalid_argument("normalized_at_zero: den(0) = 0");
  if (c < 0) {
    f.num = -f.num;
    f.den = -f.den;
  }
  return f;
}

bool operator==(const RatFun& a, const RatFun& b) {
  return a.num * b.den == b.num * a.den;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return reduce(a.num * b.den + b.num * a.den, a.den * b.den);
}

std::vector<Int> expand(const RatFun& f, int n_max) {
  if (n_max < 0) throw std::invalid_argument("expand: negative n_max");
  const Int c0 = f.den.coeff(0);
  if (c0 == 0) throw NotExpandable("expand: denominator vanishes at t = 0");
  std::vector<Int> out(static_cast<std::size_t>(n_max) + 1);
  const int dd = f.den.degree();
  for (int n = 0; n <= n_max; ++n) {
    Int acc = f.num.coeff(n);
    const int hi = n < dd ? n : dd;
    for (int j = 1; j <= hi; ++j)
      acc -= f.den.coeff(j) * out[static_cast<std::size_t>(n - j)];
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), c0.get_mpz_t());
    if (r != 0)
      throw std::logic_error("expand: non-integral coefficient at degree " +
                             std::to_string(n));
    out[static_cast<std::size_t>(n)] = std::move(q);
  }
  return out;
}

std::string to_string(const RatFun& f) {
  if (f.den == IntPoly(1)) return to_string(f.num);
  return "(" + to_string(f.num) + ") / (" + to_string(f.den) + ")";
}

}  // namespace gfa
