#pragma once

#include <string>
#include <vector>

#include "abspec/algebra.hpp"
#include "abspec/report.hpp"
#include "abspec/topology.hpp"

namespace abspec {

/// A bitopological space. Points may carry prime-ideal labels (subsets of an
/// algebra's carrier); spaces produced by other routes leave labels empty.
struct BitopSpace {
  std::vector<std::string> point_names;
  std::vector<ElemSet> ideal_labels;  // empty when points are opaque
  FiniteTopology tplus;
  FiniteTopology tminus;

  int point_count() const { return tplus.point_count; }
  bool labeled() const { return !ideal_labels.empty(); }
};

/// Points: subsets p with  x,y in p => x+y subset p  and
/// (xy) meets p => x in p or y in p. When proper, additionally xi0 in p and
/// xi1 not in p. T+ generated by the sets {p : x not in p}, T- by complements
/// per element. Enumeration runs as a pruned in/out search over elements.
BitopSpace build_spectrum(const Algebra& alg, bool proper, const Limits& lim = {});

/// Single-valued variant: points are subsets with  x+y in p iff x,y in p  and
/// xy in p iff x in p or y in p.
BitopSpace build_lspectrum(const Algebra& alg, bool proper, const Limits& lim = {});

/// SP1 (exactly complemented opens form a base), SP2 (structural on finite
/// spaces), SP3 and the finite consequences: both topologies T0, the
/// complemented opens of one topology are exactly the complements of the
/// other's opens, and T- is determined by T+.
CheckReport check_spectrum_axioms(const BitopSpace& space);

struct JoinStone {
  FiniteTopology join;
  bool stone_space = false;     // join topology discrete
  bool stone_spectrum = false;  // tplus == tminus
};

JoinStone join_and_stone(const BitopSpace& space);

struct Specialization {
  std::vector<ElemSet> order_rows;  // row x: {y : x <= y}
  ElemSet max_points;
  ElemSet min_points;
};

/// Specialization order from T- closures, with Max/Min. Verifies the four
/// equivalent formulations agree, inclusion order on labeled points, density
/// of Min in T+ and Max in T-, and samples restricted subspaces.
Specialization specialization_and_extremes(const BitopSpace& space);

}  // namespace abspec
