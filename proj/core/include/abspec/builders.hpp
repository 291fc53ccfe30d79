#pragma once

#include <string>
#include <vector>

#include "abspec/algebra.hpp"
#include "abspec/lattice.hpp"

namespace abspec {

/// Z_n with x*y = {xy mod n} and x+y = the ring ideal generated by {x, y}
/// (the multiples of gcd(x, y, n)). Designated points 0 and 1. n >= 2.
Algebra ring_algebra(int n);

FiniteDistLattice chain_lattice(int k);          // 0 < 1 < ... < k-1, k >= 1
FiniteDistLattice powerset_lattice(int atoms);   // subsets ordered by inclusion
FiniteDistLattice divisor_lattice(int n);        // divisors of n under gcd/lcm

/// Multivalued: x*y = up-set of the meet, x+y = down-set of the join.
/// Single-valued: x*y = {meet}, x+y = {join}. Designated points are the
/// bounds when they differ.
Algebra lattice_algebra(const FiniteDistLattice& l, bool single_valued);

/// Display names for lattice_algebra carriers: bounds "0"/"1", chain middles
/// "a", "b", ...; powerset atoms "p", "q", ...; divisors by their value.
std::vector<std::string> chain_names(int k);
std::vector<std::string> powerset_names(int atoms);

/// Both operations return the singleton product. The table must be
/// commutative and associative. No designated points.
Algebra semigroup_algebra(const std::vector<std::vector<int>>& product);

}  // namespace abspec
