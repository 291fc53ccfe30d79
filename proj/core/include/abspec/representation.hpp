#pragma once

#include <span>

#include "abspec/closure.hpp"
#include "abspec/duality.hpp"
#include "abspec/spectrum.hpp"

namespace abspec {

enum class RepVariant {
  multivalued_proper,
  multivalued_all,
  single_valued_proper,
  single_valued_all,
};

/// Canonical lattice representation of an algebra: the lattice is the family
/// of compact opens of the spectrum's T+, and phi(x) is the open
/// {p : x not in p} as a lattice element index.
struct Representation {
  Algebra algebra;
  RepVariant variant = RepVariant::multivalued_proper;
  BitopSpace spectrum;
  FiniteDistLattice lattice;
  std::vector<int> phi;

  /// Point-set of the open that phi(x) denotes.
  ElemSet phi_open(int x) const;
};

Representation canonical_rep(const Algebra& alg, RepVariant variant, const Limits& lim = {});

/// The inverse-image map q -> phi^{-1}(q) from lattice prime ideals back to
/// spectrum points: bijective, bicontinuous, inverse to the duality unit.
/// Also the injectivity criterion: phi injective iff every distinct pair of
/// carrier elements is split by some point.
CheckReport check_rep_properties(const Representation& rep, const Limits& lim = {});

/// Unique homomorphism l with l(phi(x)) = theta(x), computed pointwise
/// through the spectra. Preconditions on theta are checked literally; the
/// uniqueness argument closes phi's image under join/meet.
LatticeHom universal_factor(const Representation& rep, const FiniteDistLattice& lp,
                            std::span<const int> theta, const Limits& lim = {});

/// Operation containments against the lattice order: sums below joins,
/// products above meets; equalities for the single-valued variants.
CheckReport check_op_bounds(const Representation& rep);

/// times(a,b) = mu({a,b}), plus(a,b) = alpha({a,b}). Filters and ideals are
/// unchanged; that and the axioms are re-verified on the output.
Algebra convex_ops(const Algebra& alg, const Limits& lim = {});

/// Intersection of all prime filters (ideals) containing A.
ElemSet radical_closure(const ClosureCache& cache, ElemSet a, SetKind kind,
                        const Limits& lim = {});

/// Tables built from radical closures of pairs; preserves the carrier
/// preorder and swaps filters/ideals for radical ones.
Algebra radical_ops(const Algebra& alg, const Limits& lim = {});

/// Carrier preorder versus inclusion of phi-images, and the induced
/// order embedding of the quotient by phi-equality.
CheckReport order_embedding_check(const Representation& rep);

}  // namespace abspec
