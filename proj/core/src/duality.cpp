#include "abspec/duality.hpp"

#include <algorithm>
#include <string>

namespace abspec {

StoneSpec stone_spec(const FiniteDistLattice& l, const Limits& lim) {
  l.validate();
  StoneSpec out;
  out.points = lattice_prime_ideals(l, lim);
  const int count = static_cast<int>(out.points.size());
  if (count > lim.point_cap)
    throw capacity_error("stone spectrum has " + std::to_string(count) +
                         " points, cap is " + std::to_string(lim.point_cap));
  std::vector<ElemSet> subbase;
  for (int a = 0; a < l.size; ++a) {
    ElemSet u;  // {p : a not in p}, the principal-ideal open
    for (int i = 0; i < count; ++i)
      if (!out.points[i].contains(a)) u.add(i);
    subbase.push_back(u);
  }
  out.space.topology = generate_topology(count, subbase);
  if (!is_coherent(out.space.topology).pass())
    throw internal_error("stone spectrum topology fails coherence");
  return out;
}

FiniteDistLattice ko_lattice(const CoherentSpace& coh) {
  if (const CheckItem* f = is_coherent(coh.topology).first_failure())
    throw input_error("not a coherent space: " + f->name + " fails");
  const auto& opens = coh.topology.opens;  // ascending, all compact here
  const int n = static_cast<int>(opens.size());
  auto index_of = [&](std::uint64_t u) {
    return static_cast<int>(std::lower_bound(opens.begin(), opens.end(), u) -
                            opens.begin());
  };
  FiniteDistLattice l;
  l.size = n;
  l.join_table.resize(static_cast<size_t>(n) * n);
  l.meet_table.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      l.join_table[static_cast<size_t>(i) * n + j] = index_of(opens[i] | opens[j]);
      l.meet_table[static_cast<size_t>(i) * n + j] = index_of(opens[i] & opens[j]);
    }
  l.bottom = index_of(0);
  l.top = index_of(coh.topology.universe().bits);
  l.validate();
  return l;
}

LatticeHom coherent_map_to_hom(const CoherentSpace& x1, const CoherentSpace& x2,
                               std::span<const int> f) {
  if (static_cast<int>(f.size()) != x1.point_count())
    throw input_error("point map size does not match the source space");
  for (int v : f)
    if (v < 0 || v >= x2.point_count()) throw input_error("point map value out of range");
  FiniteDistLattice k1 = ko_lattice(x1), k2 = ko_lattice(x2);
  std::vector<int> map(k2.size);
  for (int i = 0; i < k2.size; ++i) {
    ElemSet u{x2.topology.opens[i]};
    ElemSet pre;
    for (int x = 0; x < x1.point_count(); ++x)
      if (u.contains(f[x])) pre.add(x);
    if (!x1.topology.is_open(pre))
      throw input_error("map is not coherent: a compact open pulls back to a non-open");
    map[i] = static_cast<int>(std::lower_bound(x1.topology.opens.begin(),
                                               x1.topology.opens.end(), pre.bits) -
                              x1.topology.opens.begin());
  }
  return make_hom(std::move(k2), std::move(k1), std::move(map));
}

std::vector<int> hom_to_spec_map(const LatticeHom& h, const Limits& lim) {
  StoneSpec s1 = stone_spec(h.source, lim);
  StoneSpec s2 = stone_spec(h.target, lim);
  std::vector<int> out;
  out.reserve(s2.points.size());
  for (ElemSet q : s2.points) {
    ElemSet pre;
    for (int a = 0; a < h.source.size; ++a)
      if (q.contains(h.map[a])) pre.add(a);
    auto it = std::lower_bound(s1.points.begin(), s1.points.end(), pre);
    if (it == s1.points.end() || !(*it == pre))
      throw internal_error("preimage of a prime ideal is not a prime ideal");
    out.push_back(static_cast<int>(it - s1.points.begin()));
  }
  // continuity between the stone topologies
  for (std::uint64_t u : s1.space.topology.opens) {
    ElemSet pre;
    for (size_t i = 0; i < out.size(); ++i)
      if (ElemSet{u}.contains(out[i])) pre.add(static_cast<int>(i));
    if (!s2.space.topology.is_open(pre))
      throw internal_error("spectrum map of a homomorphism is not continuous");
  }
  return out;
}

std::vector<int> natural_psi(const CoherentSpace& coh, const Limits& lim) {
  FiniteDistLattice ko = ko_lattice(coh);
  StoneSpec target = stone_spec(ko, lim);
  const auto& opens = coh.topology.opens;
  std::vector<int> psi(coh.point_count());
  for (int x = 0; x < coh.point_count(); ++x) {
    ElemSet ideal;  // the compact opens missing x, as ko indices
    for (size_t i = 0; i < opens.size(); ++i)
      if (!ElemSet{opens[i]}.contains(x)) ideal.add(static_cast<int>(i));
    auto it = std::lower_bound(target.points.begin(), target.points.end(), ideal);
    if (it == target.points.end() || !(*it == ideal))
      throw internal_error("psi image is not a prime ideal of the compact opens");
    psi[x] = static_cast<int>(it - target.points.begin());
  }
  // homeomorphism: bijective, and the image family of opens matches exactly
  std::vector<char> hit(target.points.size(), 0);
  for (int v : psi) {
    if (hit[v]) throw internal_error("psi is not injective");
    hit[v] = 1;
  }
  if (!std::all_of(hit.begin(), hit.end(), [](char c) { return c == 1; }))
    throw internal_error("psi is not surjective");
  std::vector<std::uint64_t> mapped;
  for (std::uint64_t u : opens) {
    ElemSet img;
    for_each(ElemSet{u}, [&](int x) { img.add(psi[x]); });
    mapped.push_back(img.bits);
  }
  std::sort(mapped.begin(), mapped.end());
  if (mapped != target.space.topology.opens)
    throw internal_error("psi does not carry the opens onto the stone topology");
  return psi;
}

LatticeHom natural_phi(const FiniteDistLattice& l, const Limits& lim) {
  StoneSpec spec = stone_spec(l, lim);
  FiniteDistLattice ko = ko_lattice(spec.space);
  const int count = static_cast<int>(spec.points.size());
  std::vector<int> map(l.size);
  for (int a = 0; a < l.size; ++a) {
    ElemSet u;
    for (int i = 0; i < count; ++i)
      if (!spec.points[i].contains(a)) u.add(i);
    auto it = std::lower_bound(spec.space.topology.opens.begin(),
                               spec.space.topology.opens.end(), u.bits);
    if (it == spec.space.topology.opens.end() || *it != u.bits)
      throw internal_error("phi image is not open in the stone spectrum");
    map[a] = static_cast<int>(it - spec.space.topology.opens.begin());
  }
  LatticeHom phi = make_hom(l, std::move(ko), std::move(map));
  if (!phi.bijective()) throw internal_error("phi is not a lattice isomorphism");
  return phi;
}

NaturalIsos natural_isos(const CoherentSpace& coh, const FiniteDistLattice& l,
                         const Limits& lim) {
  return {natural_psi(coh, lim), natural_phi(l, lim)};
}

}  // namespace abspec
