#include "abspec/coherent.hpp"

#include <string>

#include "abspec/errors.hpp"

namespace abspec {

namespace {

std::string mask_str(ElemSet s) {
  std::string out = "{";
  bool first = true;
  for_each(s, [&](int x) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  });
  return out + "}";
}

}  // namespace

CheckReport is_coherent(const FiniteTopology& top) {
  CheckReport rep;
  rep.add("t0", top.t0(), "");
  rep.add("compact", true, "finite space");

  std::vector<ElemSet> closed;
  for (std::uint64_t u : top.opens)
    closed.push_back(ElemSet{u}.complement(top.point_count));

  // sober: every nonempty irreducible closed set is the closure of exactly
  // one point
  bool sober = true;
  std::string sober_why;
  for (ElemSet c : closed) {
    if (c.is_empty()) continue;
    bool irreducible = true;
    for (ElemSet a : closed) {
      if (!a.subset_of(c) || a == c) continue;
      for (ElemSet b : closed) {
        if (!b.subset_of(c) || b == c) continue;
        if ((a | b) == c) {
          irreducible = false;
          break;
        }
      }
      if (!irreducible) break;
    }
    if (!irreducible) continue;
    int generic = 0;
    for_each(c, [&](int x) {
      if (top.closure(ElemSet::single(x)) == c) ++generic;
    });
    if (generic != 1) {
      sober = false;
      sober_why = mask_str(c) + " has " + std::to_string(generic) + " generic points";
      break;
    }
  }
  rep.add("sober", sober, sober_why);

  // on a finite space every open is compact, so KO is the whole topology
  bool base = true;
  std::string base_why;
  for (std::uint64_t u : top.opens) {
    ElemSet acc;
    for (std::uint64_t v : top.opens)
      if (ElemSet{v}.subset_of(ElemSet{u})) acc |= ElemSet{v};
    if (acc != ElemSet{u}) {
      base = false;
      base_why = mask_str(ElemSet{u});
      break;
    }
  }
  rep.add("ko-base", base, base_why);

  bool inter = true;
  std::string inter_why;
  for (std::uint64_t u : top.opens) {
    for (std::uint64_t v : top.opens)
      if (!top.is_open(ElemSet{u} & ElemSet{v})) {
        inter = false;
        inter_why = mask_str(ElemSet{u}) + " and " + mask_str(ElemSet{v});
        break;
      }
    if (!inter) break;
  }
  rep.add("ko-intersections", inter, inter_why);
  return rep;
}

CoherentSpace functor_F(const BitopSpace& space) {
  CheckReport ax = check_spectrum_axioms(space);
  if (const CheckItem* f = ax.first_failure())
    throw input_error("not a spectrum: " + f->name + " fails");
  CoherentSpace coh{space.tplus};
  if (!is_coherent(coh.topology).pass())
    throw internal_error("plus topology of a spectrum fails coherence");
  return coh;
}

BitopSpace functor_G(const CoherentSpace& coh) {
  if (const CheckItem* f = is_coherent(coh.topology).first_failure())
    throw input_error("not a coherent space: " + f->name + " fails");
  BitopSpace s;
  s.tplus = coh.topology;
  std::vector<ElemSet> subbase;
  for (std::uint64_t u : coh.topology.opens)
    subbase.push_back(ElemSet{u}.complement(coh.point_count()));
  s.tminus = generate_topology(coh.point_count(), subbase);
  for (int i = 0; i < coh.point_count(); ++i)
    s.point_names.push_back(std::to_string(i));
  if (!check_spectrum_axioms(s).pass())
    throw internal_error("rebuilt bitopology fails the spectrum axioms");
  return s;
}

bool roundtrip_space(const BitopSpace& space) {
  BitopSpace back = functor_G(functor_F(space));
  return back.tplus == space.tplus && back.tminus == space.tminus;
}

bool roundtrip_coherent(const CoherentSpace& coh) {
  return functor_F(functor_G(coh)) == coh;
}

}  // namespace abspec
