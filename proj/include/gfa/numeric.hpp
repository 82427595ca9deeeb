#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <atomic>
#include <cstddef>
#include <string>
#include <thread>
#include <vector>

namespace gfa {

// Exact arithmetic scalars. Coefficients grow like d^s, far past any
// machine-integer range, so all ring arithmetic runs on GMP.
using Int = mpz_class;
using Rat = mpq_class;

inline Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// Quotient a/b. Contract: b divides a exactly.
inline Int exact_div(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline std::string to_decimal(const Int& v) { return v.get_str(); }

// Runs fn(0..n-1), spreading the indices over a small thread pool.
// Each index must write only to its own slot, so the merged result is
// identical for any thread count.
template <class Fn>
void parallel_for(std::ptrdiff_t n, Fn&& fn, int threads = 0) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads > n) threads = static_cast<int>(n);
  if (threads <= 1) {
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::ptrdiff_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::ptrdiff_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads) - 1);
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace gfa

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

}  // namespace Eigen

namespace gfa {

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

}  // namespace gfa
