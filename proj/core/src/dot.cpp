#include "abspec/dot.hpp"

#include <sstream>

namespace abspec {

namespace {

// order_rows[x] = {y : x <= y}, names indexed alike. Equivalent nodes are
// merged onto their smallest member; edges are the transitive reduction.
std::string hasse_from_order(const std::vector<ElemSet>& order_rows,
                             const std::vector<std::string>& names) {
  const int n = static_cast<int>(order_rows.size());
  std::vector<int> repr(n);
  for (int x = 0; x < n; ++x) {
    repr[x] = x;
    for (int y = 0; y < x; ++y)
      if (order_rows[x].contains(y) && order_rows[y].contains(x)) {
        repr[x] = repr[y];
        break;
      }
  }
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (int x = 0; x < n; ++x) {
    if (repr[x] != x) continue;
    out << "  n" << x << " [label=\"" << names[x];
    for (int y = x + 1; y < n; ++y)
      if (repr[y] == x) out << " = " << names[y];
    out << "\"];\n";
  }
  auto strictly_below = [&](int x, int y) {
    return order_rows[x].contains(y) && !order_rows[y].contains(x);
  };
  for (int x = 0; x < n; ++x) {
    if (repr[x] != x) continue;
    for (int y = 0; y < n; ++y) {
      if (repr[y] != y || !strictly_below(x, y)) continue;
      bool covered = false;
      for (int z = 0; z < n && !covered; ++z)
        if (repr[z] == z && strictly_below(x, z) && strictly_below(z, y)) covered = true;
      if (!covered) out << "  n" << x << " -> n" << y << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string hasse_dot(const ClosureCache& cache) {
  const int n = cache.algebra().size();
  std::vector<ElemSet> rows(n);
  for (int x = 0; x < n; ++x) rows[x] = cache.above(x);
  return hasse_from_order(rows, cache.algebra().carrier.names);
}

std::string hasse_dot(const BitopSpace& space) {
  Specialization sp = specialization_and_extremes(space);
  return hasse_from_order(sp.order_rows, space.point_names);
}

std::string hasse_dot(const FiniteDistLattice& l) {
  std::vector<ElemSet> rows(l.size);
  std::vector<std::string> names(l.size);
  for (int a = 0; a < l.size; ++a) {
    names[a] = std::to_string(a);
    for (int b = 0; b < l.size; ++b)
      if (l.leq(a, b)) rows[a].add(b);
  }
  return hasse_from_order(rows, names);
}

}  // namespace abspec
