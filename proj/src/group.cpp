#include "gfa/group.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "gfa/errors.hpp"

namespace gfa {

namespace {

std::string default_label(int i) { return "x" + std::to_string(i); }

// Finds the index acting as a two-sided identity, or -1.
int find_identity(const Eigen::MatrixXi& table) {
  const int s = static_cast<int>(table.rows());
  for (int k = 0; k < s; ++k) {
    bool ok = true;
    for (int j = 0; j < s && ok; ++j) ok = table(k, j) == j && table(j, k) == j;
    if (ok) return k;
  }
  return -1;
}

void check_latin(const Eigen::MatrixXi& table) {
  const int s = static_cast<int>(table.rows());
  std::vector<char> seen(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < s; ++j) {
      const int v = table(i, j);
      if (seen[static_cast<std::size_t>(v)])
        throw NotAGroup("row " + std::to_string(i) +
                        " is not a permutation: entry " + std::to_string(v) +
                        " repeats");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int j = 0; j < s; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < s; ++i) {
      const int v = table(i, j);
      if (seen[static_cast<std::size_t>(v)])
        throw NotAGroup("column " + std::to_string(j) +
                        " is not a permutation: entry " + std::to_string(v) +
                        " repeats");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
}

void check_associative(const Eigen::MatrixXi& table) {
  const int s = static_cast<int>(table.rows());
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      const int ij = table(i, j);
      for (int k = 0; k < s; ++k)
        if (table(ij, k) != table(i, table(j, k)))
          throw NotAGroup("associativity fails at triple (" +
                          std::to_string(i) + ", " + std::to_string(j) +
                          ", " + std::to_string(k) + "): (x_i*x_j)*x_k = x" +
                          std::to_string(table(ij, k)) +
                          " but x_i*(x_j*x_k) = x" +
                          std::to_string(table(i, table(j, k))));
    }
}

}  // namespace

Group from_cayley_table(const Eigen::MatrixXi& table,
                        std::vector<std::string> labels) {
  const int s = static_cast<int>(table.rows());
  if (s == 0 || table.cols() != s)
    throw NotAGroup("table must be square and nonempty");
  if (s > kMaxGroupOrder)
    throw BoundExceeded("group order " + std::to_string(s) + " exceeds " +
                        std::to_string(kMaxGroupOrder));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (table(i, j) < 0 || table(i, j) >= s)
        throw NotAGroup("entry (" + std::to_string(i) + ", " +
                        std::to_string(j) + ") = " +
                        std::to_string(table(i, j)) + " is out of range");
  check_latin(table);

  if (labels.empty()) {
    labels.resize(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) labels[static_cast<std::size_t>(i)] = default_label(i);
  } else if (static_cast<int>(labels.size()) != s) {
    throw NotAGroup("label count does not match table size");
  }

  const int id = find_identity(table);
  if (id < 0) throw NotAGroup("no two-sided identity element");

  Eigen::MatrixXi t = table;
  if (id != 0) {
    // Swap indices 0 and id so the identity sits at index 0.
    auto perm = [&](int i) { return i == 0 ? id : (i == id ? 0 : i); };
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) t(i, j) = perm(table(perm(i), perm(j)));
    std::swap(labels[0], labels[static_cast<std::size_t>(id)]);
  }

  check_associative(t);

  Group g;
  g.order = s;
  g.table = std::move(t);
  g.labels = std::move(labels);
  g.inverse.resize(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) {
    int inv = -1;
    for (int j = 0; j < s; ++j)
      if (g.table(i, j) == 0) {
        inv = j;
        break;
      }
    if (inv < 0 || g.table(inv, i) != 0)
      throw NotAGroup("element " + std::to_string(i) +
                      " has no two-sided inverse");
    g.inverse[static_cast<std::size_t>(i)] = inv;
  }
  return g;
}

Group from_cayley_table(const std::vector<std::vector<int>>& table,
                        std::vector<std::string> labels) {
  const int s = static_cast<int>(table.size());
  Eigen::MatrixXi t(s, s);
  for (int i = 0; i < s; ++i) {
    if (static_cast<int>(table[static_cast<std::size_t>(i)].size()) != s)
      throw NotAGroup("table must be square and nonempty");
    for (int j = 0; j < s; ++j)
      t(i, j) = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return from_cayley_table(t, std::move(labels));
}

Group cyclic(int n) {
  if (n < 1) throw BoundExceeded("cyclic: n must be positive");
  Eigen::MatrixXi t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(i, j) = (i + j) % n;
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    labels[static_cast<std::size_t>(i)] =
        i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i));
  return from_cayley_table(t, std::move(labels));
}

Group dihedral(int n) {
  if (n < 2) throw BoundExceeded("dihedral: n must be >= 2");
  const int s = 2 * n;
  if (s > kMaxGroupOrder) throw BoundExceeded("dihedral: order exceeds limit");
  // Element i + n*b is r^i s^b; s r = r^{-1} s.
  auto idx = [n](int i, int b) { return ((i % n) + n) % n + n * b; };
  Eigen::MatrixXi t(s, s);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < 2; ++d)
          t(idx(a, b), idx(c, d)) = idx(b ? a - c : a + c, (b + d) % 2);
  std::vector<std::string> labels(static_cast<std::size_t>(s));
  for (int i = 0; i < n; ++i) {
    const std::string r = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
    labels[static_cast<std::size_t>(idx(i, 0))] = i == 0 ? "e" : r;
    labels[static_cast<std::size_t>(idx(i, 1))] = i == 0 ? "s" : r + "*s";
  }
  return from_cayley_table(t, std::move(labels));
}

Group symmetric(int n) {
  if (n < 1 || n > 6)
    throw BoundExceeded("symmetric: n must be in 1..6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int s = static_cast<int>(perms.size());

  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) -
                            perms.begin());
  };
  Eigen::MatrixXi t(s, s);
  std::vector<int> prod(static_cast<std::size_t>(n));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      // Composition: (sigma_i . sigma_j)(k) = sigma_i(sigma_j(k)).
      for (int k = 0; k < n; ++k)
        prod[static_cast<std::size_t>(k)] = perms[static_cast<std::size_t>(
            i)][static_cast<std::size_t>(perms[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)])];
      t(i, j) = index_of(prod);
    }
  std::vector<std::string> labels(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) {
    std::string l;
    for (int k = 0; k < n; ++k)
      l += std::to_string(perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] + 1);
    labels[static_cast<std::size_t>(i)] = l;
  }
  return from_cayley_table(t, std::move(labels));
}

Group direct_product(const Group& g, const Group& h) {
  const int s = g.order * h.order;
  if (s > kMaxGroupOrder)
    throw BoundExceeded("direct_product: order exceeds limit");
  auto idx = [&](int a, int b) { return a * h.order + b; };
  Eigen::MatrixXi t(s, s);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < h.order; ++b)
      for (int c = 0; c < g.order; ++c)
        for (int d = 0; d < h.order; ++d)
          t(idx(a, b), idx(c, d)) = idx(g.mul(a, c), h.mul(b, d));
  std::vector<std::string> labels(static_cast<std::size_t>(s));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < h.order; ++b)
      labels[static_cast<std::size_t>(idx(a, b))] =
          "(" + g.labels[static_cast<std::size_t>(a)] + "," +
          h.labels[static_cast<std::size_t>(b)] + ")";
  return from_cayley_table(t, std::move(labels));
}

int element_order(const Group& g, int i) {
  if (i < 0 || i >= g.order)
    throw PreconditionViolated("element_order: index out of range");
  int acc = i;
  int r = 1;
  while (acc != 0) {
    acc = g.mul(acc, i);
    ++r;
  }
  return r;
}

}  // namespace gfa
