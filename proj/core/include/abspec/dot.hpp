#pragma once

#include <string>
#include <vector>

#include "abspec/closure.hpp"
#include "abspec/lattice.hpp"
#include "abspec/spectrum.hpp"

namespace abspec {

/// Hasse diagram of the carrier preorder as Graphviz dot: one node per
/// element (equivalent elements share a node), edges from the transitive
/// reduction, ascending node order. Deterministic output.
std::string hasse_dot(const ClosureCache& cache);

/// Hasse diagram of the specialization order of a spectrum.
std::string hasse_dot(const BitopSpace& space);

/// Hasse diagram of a lattice under its own order.
std::string hasse_dot(const FiniteDistLattice& l);

}  // namespace abspec
