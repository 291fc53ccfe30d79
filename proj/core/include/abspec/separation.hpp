#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "abspec/closure.hpp"

namespace abspec {

/// Complementary pair: a prime filter and its complement ideal.
struct PrimePair {
  ElemSet filter;
  ElemSet ideal;
};

/// All prime filters with complements, ascending by filter bitmask.
/// Always contains (empty, X) and (X, empty).
std::vector<PrimePair> enumerate_prime_pairs(const Algebra& alg, const Limits& lim = {});

struct SeparateResult {
  bool ok = false;
  PrimePair pair;      // valid when ok
  int stuck = -1;      // element where both extensions clashed, when not ok
};

/// Greedy extension of a disjoint filter/ideal pair to a complementary prime
/// pair. Walks elements in ascending order, preferring the filter branch.
/// Failure is possible only when the carrier preorder is not transitive.
SeparateResult separate(const ClosureCache& cache, ElemSet f0, ElemSet i0);

struct SepResult {
  bool pass = true;
  ElemSet f0, i0;  // first disjoint pair with no prime extension
};

/// Whether every disjoint (filter, ideal) pair extends to some enumerated
/// complementary prime pair.
SepResult check_sep(const Algebra& alg, const Limits& lim = {});

/// From a transitivity failure a<=b<=c, not a<=c, build the unseparable pair
/// (mu(a), alpha(c)); verifies disjointness and that no prime pair extends it.
std::pair<ElemSet, ElemSet> sep0_failure_to_sep_failure(const ClosureCache& cache,
                                                        int a, int b, int c,
                                                        const Limits& lim = {});

/// Given a filter M and, for every prime filter F containing M, a chosen
/// element x_F of F (keyed by the filter's bitmask), returns a greedily
/// minimized list of chosen elements whose generated ideal meets M.
std::vector<int> wallman(const ClosureCache& cache, ElemSet m,
                         const std::map<std::uint64_t, int>& choice,
                         const Limits& lim = {});

}  // namespace abspec
