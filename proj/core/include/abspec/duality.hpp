#pragma once

#include <span>
#include <vector>

#include "abspec/coherent.hpp"
#include "abspec/lattice.hpp"

namespace abspec {

/// Stone spectrum of a lattice: points are its prime ideals, the topology is
/// generated by the principal-ideal opens {p : a not in p}.
struct StoneSpec {
  CoherentSpace space;
  std::vector<ElemSet> points;  // prime ideals, ascending by mask
};

StoneSpec stone_spec(const FiniteDistLattice& l, const Limits& lim = {});

/// Compact opens under union/intersection. Element i is the i-th open of the
/// topology in ascending mask order.
FiniteDistLattice ko_lattice(const CoherentSpace& coh);

/// Contravariant action on a coherent map f : X1 -> X2 (given pointwise):
/// the homomorphism KO(X2) -> KO(X1), U -> preimage of U.
LatticeHom coherent_map_to_hom(const CoherentSpace& x1, const CoherentSpace& x2,
                               std::span<const int> f);

/// Contravariant action on a homomorphism h : L1 -> L2: the coherent map
/// spec(L2) -> spec(L1), p -> preimage of p. Returned as indices into
/// stone_spec(l1).points per point of stone_spec(l2).
std::vector<int> hom_to_spec_map(const LatticeHom& h, const Limits& lim = {});

struct NaturalIsos {
  std::vector<int> psi;  // point x of coh -> index of its prime ideal in stone_spec(ko_lattice(coh))
  LatticeHom phi;        // L -> ko_lattice(stone_spec(L))
};

/// The unit maps of the duality, verified to be a homeomorphism and a lattice
/// isomorphism respectively.
NaturalIsos natural_isos(const CoherentSpace& coh, const FiniteDistLattice& l,
                         const Limits& lim = {});

std::vector<int> natural_psi(const CoherentSpace& coh, const Limits& lim = {});
LatticeHom natural_phi(const FiniteDistLattice& l, const Limits& lim = {});

}  // namespace abspec
