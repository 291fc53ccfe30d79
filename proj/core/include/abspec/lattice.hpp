#pragma once

#include <vector>

#include "abspec/elem_set.hpp"
#include "abspec/errors.hpp"
#include "abspec/report.hpp"

namespace abspec {

/// Bounded distributive lattice with explicit operation tables.
/// Bottom may equal top (the one-element lattice).
struct FiniteDistLattice {
  int size = 0;
  std::vector<int> join_table;  // row-major
  std::vector<int> meet_table;
  int bottom = 0;
  int top = 0;

  int join(int a, int b) const { return join_table[static_cast<size_t>(a) * size + b]; }
  int meet(int a, int b) const { return meet_table[static_cast<size_t>(a) * size + b]; }
  bool leq(int a, int b) const { return join(a, b) == b; }

  /// Lattice laws, distributivity, and neutrality of the bounds.
  CheckReport check() const;
  void validate() const;  // throws input_error on the first failed law

  friend bool operator==(const FiniteDistLattice&, const FiniteDistLattice&) = default;
};

/// Elements j != bottom with j = a v b only if j = a or j = b.
std::vector<int> join_irreducibles(const FiniteDistLattice& l);

/// Prime ideals as element masks: down-closed, join-closed, containing bottom,
/// missing top, and meet-prime. One per join-irreducible element.
std::vector<ElemSet> lattice_prime_ideals(const FiniteDistLattice& l, const Limits& lim = {});

/// Bound-preserving lattice homomorphism, verified on construction.
struct LatticeHom {
  FiniteDistLattice source;
  FiniteDistLattice target;
  std::vector<int> map;

  int operator()(int a) const { return map[a]; }
  bool bijective() const;
};

LatticeHom make_hom(FiniteDistLattice source, FiniteDistLattice target, std::vector<int> map);
LatticeHom compose(const LatticeHom& f, const LatticeHom& g);  // g after f

/// Every bound-preserving homomorphism, enumerated by backtracking.
/// Intended for small sources; guarded by the carrier cap.
std::vector<std::vector<int>> enumerate_homs(const FiniteDistLattice& source,
                                             const FiniteDistLattice& target,
                                             const Limits& lim = {});

}  // namespace abspec
