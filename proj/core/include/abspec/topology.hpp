#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "abspec/elem_set.hpp"

namespace abspec {

/// A finite topology, opens stored extensionally as sorted bitmasks.
struct FiniteTopology {
  int point_count = 0;
  std::vector<std::uint64_t> opens;  // ascending, always holds 0 and full

  ElemSet universe() const { return ElemSet::full(point_count); }
  bool is_open(ElemSet u) const;
  bool is_closed(ElemSet u) const { return is_open(u.complement(point_count)); }

  /// Smallest closed superset.
  ElemSet closure(ElemSet a) const;
  /// Largest open subset.
  ElemSet interior(ElemSet a) const;

  bool t0() const;
  bool t1() const;
  bool discrete() const;

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.point_count == b.point_count && a.opens == b.opens;
  }
};

/// Topology generated by a subbase: adds empty and full sets, closes under
/// pairwise intersection, then under pairwise union.
FiniteTopology generate_topology(int point_count, std::span<const ElemSet> subbase);

FiniteTopology discrete_topology(int point_count);
FiniteTopology indiscrete_topology(int point_count);

}  // namespace abspec
