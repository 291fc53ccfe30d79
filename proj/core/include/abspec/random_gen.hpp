#pragma once

#include <cstdint>
#include <random>

#include "abspec/algebra.hpp"
#include "abspec/topology.hpp"

namespace abspec {

/// Sparse-biased multivalued op: each unordered entry is empty, a singleton,
/// or a two-element set, symmetrized. Commutative by construction.
MultiOp random_op(int n, std::mt19937_64& rng);

/// Commutative algebra with both ops drawn from random_op. No axioms beyond
/// commutativity are guaranteed; no designated points.
Algebra random_algebra(int n, std::mt19937_64& rng);

/// Rejection sampling: redraw each op until associative, then redraw the
/// pair until the compatibility axiom holds. Practical for n <= 4 only.
Algebra random_preseparative(int n, std::mt19937_64& rng);

/// Topology generated by a few random subbase sets. Coherent by
/// construction on finite carriers; T0 is enforced by quotienting
/// topologically indistinguishable points before returning.
FiniteTopology random_t0_topology(int max_points, std::mt19937_64& rng);

}  // namespace abspec
