#pragma once

#include "abspec/report.hpp"
#include "abspec/spectrum.hpp"
#include "abspec/topology.hpp"

namespace abspec {

struct CoherentSpace {
  FiniteTopology topology;

  int point_count() const { return topology.point_count; }
  friend bool operator==(const CoherentSpace&, const CoherentSpace&) = default;
};

/// Literal coherence clauses: T0, sobriety by irreducible-closed-set
/// enumeration, and the compact-open base conditions. On finite spaces the
/// whole report collapses to the T0 clause; the others document the
/// definition and must never fail once T0 holds.
CheckReport is_coherent(const FiniteTopology& top);

/// Forgets T-; the result must be coherent.
CoherentSpace functor_F(const BitopSpace& space);

/// Rebuilds T- from complements of compact opens of T+.
BitopSpace functor_G(const CoherentSpace& coh);

/// G(F(space)) == space, extensionally.
bool roundtrip_space(const BitopSpace& space);

/// F(G(coh)) == coh, extensionally.
bool roundtrip_coherent(const CoherentSpace& coh);

}  // namespace abspec
