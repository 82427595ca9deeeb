#include "gfa/polynomial.hpp"

#include <stdexcept>

#include "gfa/errors.hpp"

namespace gfa {

Int content(const IntPoly& p) {
  Int g = 0;
  for (const Int& c : p.coeffs()) {
    g = gcd_int(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  return divexact_scalar(p, content(p));
}

IntPoly divexact_scalar(const IntPoly& a, const Int& c) {
  std::vector<Int> out;
  out.reserve(a.coeffs().size());
  for (const Int& v : a.coeffs()) out.push_back(exact_div(v, c));
  return IntPoly::from_coeffs(std::move(out));
}

std::optional<IntPoly> try_divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;

  std::vector<Int> rem(a.coeffs());
  std::vector<Int> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Int(0));
  const std::vector<Int>& d = b.coeffs();
  int top = a.degree();
  while (top >= b.degree()) {
    const Int& lead = rem[static_cast<std::size_t>(top)];
    if (lead != 0) {
      Int q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(),
                  d.back().get_mpz_t());
      if (r != 0) return std::nullopt;
      const int shift = top - b.degree();
      quot[static_cast<std::size_t>(shift)] = q;
      for (int i = 0; i <= b.degree(); ++i)
        rem[static_cast<std::size_t>(i + shift)] -= q * d[static_cast<std::size_t>(i)];
    }
    --top;
  }
  for (const Int& c : rem)
    if (c != 0) return std::nullopt;
  return IntPoly::from_coeffs(std::move(quot));
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  auto q = try_divide_exact(a, b);
  if (!q)
    throw std::logic_error("divide_exact: (" + to_string(b) +
                           ") does not divide (" + to_string(a) + ")");
  return *q;
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_rem: zero divisor");
  const int delta = a.degree() - b.degree();
  if (delta < 0) throw std::invalid_argument("pseudo_rem: deg a < deg b");
  const Int& lc = b.leading();
  IntPoly r = a;
  int steps = 0;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    r = r * lc - IntPoly::monomial(r.leading(), r.degree() - b.degree()) * b;
    ++steps;
  }
  // The classical pseudo-remainder scales a by lc^(delta+1) regardless of
  // how fast the degree actually dropped.
  for (; steps < delta + 1; ++steps) r *= lc;
  return r;
}

IntPoly gcd_primitive(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("gcd_primitive: both inputs zero");
  auto positive = [](IntPoly p) {
    if (!p.is_zero() && p.leading() < 0) p = -p;
    return p;
  };
  if (a.is_zero()) return positive(primitive_part(b));
  if (b.is_zero()) return positive(primitive_part(a));

  IntPoly u = primitive_part(a);
  IntPoly v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  if (v.degree() == 0) return IntPoly(1);

  Int g = 1, h = 1;
  for (;;) {
    const int delta = u.degree() - v.degree();
    IntPoly r = pseudo_rem(u, v);
    if (r.is_zero()) break;
    if (r.degree() == 0) return IntPoly(1);
    u = std::move(v);
    v = divexact_scalar(r, g * pow_int(h, static_cast<unsigned long>(delta)));
    g = u.leading();
    if (delta > 0)
      h = exact_div(pow_int(g, static_cast<unsigned long>(delta)),
                    pow_int(h, static_cast<unsigned long>(delta - 1)));
  }
  return positive(primitive_part(v));
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int n = 0; n <= p.degree(); ++n) {
    const Int c = p.coeff(n);
    if (c == 0) continue;
    const bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const Int mag = abs(c);
    const bool unit = mag == 1;
    if (!unit || n == 0) out += to_decimal(mag);
    if (n > 0) {
      if (!unit) out += "*";
      out += n == 1 ? "t" : "t^" + std::to_string(n);
    }
  }
  return out;
}

}  // namespace gfa
