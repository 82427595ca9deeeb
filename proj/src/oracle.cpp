#include "gfa/oracle.hpp"

#include <stdexcept>

#include "gfa/errors.hpp"
#include "gfa/rational_function.hpp"

namespace gfa {

ComponentTable tensor_dimensions(const Group& g, const DimVector& dims,
                                 int n_max) {
  if (n_max < 0) throw std::invalid_argument("tensor_dimensions: n_max < 0");
  if (dims.dims.size() != g.order)
    throw LengthMismatch("dimension vector does not match group order");
  const int s = g.order;

  IntMat transfer(s, s);
  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y)
      transfer(x, y) = Int(dims.dims(g.mul(x, g.inv(y))));

  ComponentTable table;
  table.n_max = n_max;
  table.rows.setZero(n_max + 1, s);
  table.rows(0, 0) = 1;  // a_0^{(x)} = delta_{e,x}
  IntVec cur = table.rows.row(0).transpose();
  for (int n = 1; n <= n_max; ++n) {
    IntVec next = transfer * cur;
    table.rows.row(n) = next.transpose();
    cur.swap(next);
  }
  return table;
}

CrossCheck cross_check(const HilbertResult& res, const ComponentTable& table) {
  const std::vector<Int> series = expand(res.series, table.n_max);
  for (int n = 0; n <= table.n_max; ++n)
    if (series[static_cast<std::size_t>(n)] != table.rows(n, 0))
      return CrossCheck{false, n};
  return CrossCheck{true, -1};
}

}  // namespace gfa
