#include "abspec/representation.hpp"

#include <algorithm>
#include <string>

#include "abspec/axioms.hpp"
#include "abspec/separation.hpp"

namespace abspec {

namespace {

bool multivalued(RepVariant v) {
  return v == RepVariant::multivalued_proper || v == RepVariant::multivalued_all;
}

bool proper_variant(RepVariant v) {
  return v == RepVariant::multivalued_proper || v == RepVariant::single_valued_proper;
}

int open_index(const FiniteTopology& t, ElemSet u) {
  auto it = std::lower_bound(t.opens.begin(), t.opens.end(), u.bits);
  if (it == t.opens.end() || *it != u.bits) return -1;
  return static_cast<int>(it - t.opens.begin());
}

ElemSet join_meet_closure(const FiniteDistLattice& l, ElemSet gen) {
  ElemSet s = gen;
  for (bool grew = true; grew;) {
    grew = false;
    auto mem = s.members();
    for (int a : mem)
      for (int b : mem) {
        int j = l.join(a, b), m = l.meet(a, b);
        if (!s.contains(j) || !s.contains(m)) {
          s.add(j);
          s.add(m);
          grew = true;
        }
      }
  }
  return s;
}

void require_separative(const Algebra& alg, const char* who) {
  AxiomReport ax = check_preseparative(alg);
  if (!ax.pass)
    throw input_error(std::string(who) + ": operations break axiom " + ax.violation->axiom);
  if (!check_sep0(ClosureCache(alg)).pass)
    throw input_error(std::string(who) + ": carrier preorder is not transitive");
}

}  // namespace

ElemSet Representation::phi_open(int x) const {
  return ElemSet{spectrum.tplus.opens[phi[x]]};
}

Representation canonical_rep(const Algebra& alg, RepVariant variant, const Limits& lim) {
  Representation rep;
  rep.algebra = alg;
  rep.variant = variant;
  rep.spectrum = multivalued(variant) ? build_spectrum(alg, proper_variant(variant), lim)
                                      : build_lspectrum(alg, proper_variant(variant), lim);
  rep.lattice = ko_lattice(CoherentSpace{rep.spectrum.tplus});
  const auto& points = rep.spectrum.ideal_labels;
  rep.phi.resize(alg.size());
  for (int x = 0; x < alg.size(); ++x) {
    ElemSet u;
    for (size_t i = 0; i < points.size(); ++i)
      if (!points[i].contains(x)) u.add(static_cast<int>(i));
    rep.phi[x] = open_index(rep.spectrum.tplus, u);
    if (rep.phi[x] < 0)
      throw internal_error("phi image is not open in the spectrum topology");
  }
  if (proper_variant(variant)) {
    if (rep.phi[*alg.carrier.xi0] != rep.lattice.bottom ||
        rep.phi[*alg.carrier.xi1] != rep.lattice.top)
      throw internal_error("designated points miss the lattice bounds");
  }
  ElemSet gen;
  gen.add(rep.lattice.bottom);
  gen.add(rep.lattice.top);
  for (int v : rep.phi) gen.add(v);
  if (join_meet_closure(rep.lattice, gen) != ElemSet::full(rep.lattice.size))
    throw internal_error("phi image fails to generate the lattice");
  return rep;
}

CheckReport check_rep_properties(const Representation& rep, const Limits& lim) {
  CheckReport out;
  const auto& points = rep.spectrum.ideal_labels;
  StoneSpec spec = stone_spec(rep.lattice, lim);

  // the inverse-image map from lattice prime ideals to spectrum points
  std::vector<int> inv(spec.points.size(), -1);
  bool all_points = true;
  std::string why;
  for (size_t qi = 0; qi < spec.points.size(); ++qi) {
    ElemSet pre;
    for (int x = 0; x < rep.algebra.size(); ++x)
      if (spec.points[qi].contains(rep.phi[x])) pre.add(x);
    auto it = std::lower_bound(points.begin(), points.end(), pre);
    if (it == points.end() || !(*it == pre)) {
      all_points = false;
      why = "prime ideal " + std::to_string(qi);
      break;
    }
    inv[qi] = static_cast<int>(it - points.begin());
  }
  out.add("inverse-image-points", all_points, why);
  if (!all_points) return out;

  std::vector<char> hit(points.size(), 0);
  bool bij = spec.points.size() == points.size();
  for (int v : inv) {
    if (v < 0 || hit[v]) bij = false;
    if (bij) hit[v] = 1;
  }
  out.add("inverse-image-bijective", bij, "");
  if (bij) {
    std::vector<int> psi = natural_psi(CoherentSpace{rep.spectrum.tplus}, lim);
    bool match = true;
    for (size_t x = 0; x < psi.size(); ++x)
      if (inv[psi[x]] != static_cast<int>(x)) match = false;
    out.add("inverse-of-psi", match, "");

    auto mapped_equal = [&](const FiniteTopology& src, const FiniteTopology& dst) {
      std::vector<std::uint64_t> mapped;
      for (std::uint64_t u : src.opens) {
        ElemSet img;
        for_each(ElemSet{u}, [&](int q) { img.add(inv[q]); });
        mapped.push_back(img.bits);
      }
      std::sort(mapped.begin(), mapped.end());
      return mapped == dst.opens;
    };
    BitopSpace stone_bitop = functor_G(spec.space);
    out.add("s-iso-plus", mapped_equal(stone_bitop.tplus, rep.spectrum.tplus), "");
    out.add("s-iso-minus", mapped_equal(stone_bitop.tminus, rep.spectrum.tminus), "");
  }

  bool injective = true;
  std::string inj_why;
  bool split_all = true;
  for (int a = 0; a < rep.algebra.size() && split_all; ++a)
    for (int b = a + 1; b < rep.algebra.size(); ++b) {
      bool split = false;
      for (ElemSet p : points)
        if (p.contains(a) != p.contains(b)) {
          split = true;
          break;
        }
      if (!split) {
        split_all = false;
        inj_why = "(" + rep.algebra.carrier.names[a] + "," +
                  rep.algebra.carrier.names[b] + ")";
        break;
      }
    }
  for (int a = 0; a < rep.algebra.size() && injective; ++a)
    for (int b = a + 1; b < rep.algebra.size(); ++b)
      if (rep.phi[a] == rep.phi[b]) {
        injective = false;
        break;
      }
  out.add("injectivity-criterion", injective == split_all,
          injective ? "phi injective" : "phi not injective at " + inj_why);
  return out;
}

LatticeHom universal_factor(const Representation& rep, const FiniteDistLattice& lp,
                            std::span<const int> theta, const Limits& lim) {
  lp.validate();
  if (static_cast<int>(theta.size()) != rep.algebra.size())
    throw input_error("theta size does not match the carrier");
  for (int v : theta)
    if (v < 0 || v >= lp.size) throw input_error("theta value out of range");

  const auto& points = rep.spectrum.ideal_labels;
  StoneSpec target_spec = stone_spec(lp, lim);

  // theta must pull every prime ideal of the target back to a spectrum point
  std::vector<int> big_theta(target_spec.points.size());
  for (size_t qi = 0; qi < target_spec.points.size(); ++qi) {
    ElemSet pre;
    for (int x = 0; x < rep.algebra.size(); ++x)
      if (target_spec.points[qi].contains(theta[x])) pre.add(x);
    auto it = std::lower_bound(points.begin(), points.end(), pre);
    if (it == points.end() || !(*it == pre))
      throw input_error("theta preimage of a prime ideal is not a spectrum point");
    big_theta[qi] = static_cast<int>(it - points.begin());
  }

  // and the induced point map must be continuous in both topologies
  BitopSpace target_bitop = functor_G(target_spec.space);
  auto continuous = [&](const FiniteTopology& dst, const FiniteTopology& src) {
    for (std::uint64_t u : dst.opens) {
      ElemSet pre;
      for (size_t qi = 0; qi < big_theta.size(); ++qi)
        if (ElemSet{u}.contains(big_theta[qi])) pre.add(static_cast<int>(qi));
      if (!src.is_open(pre)) return false;
    }
    return true;
  };
  if (!continuous(rep.spectrum.tplus, target_bitop.tplus) ||
      !continuous(rep.spectrum.tminus, target_bitop.tminus))
    throw input_error("theta does not induce a continuous spectrum map");

  // l(U) is the unique element of the target whose principal open matches
  // the preimage of U under the induced point map
  std::vector<int> lmap(rep.lattice.size, -1);
  for (int ui = 0; ui < rep.lattice.size; ++ui) {
    ElemSet u{rep.spectrum.tplus.opens[ui]};
    ElemSet want;
    for (size_t qi = 0; qi < big_theta.size(); ++qi)
      if (u.contains(big_theta[qi])) want.add(static_cast<int>(qi));
    int found = -1;
    for (int up = 0; up < lp.size; ++up) {
      ElemSet open_up;
      for (size_t qi = 0; qi < target_spec.points.size(); ++qi)
        if (!target_spec.points[qi].contains(up)) open_up.add(static_cast<int>(qi));
      if (open_up == want) {
        if (found >= 0) throw internal_error("factor image is not unique");
        found = up;
      }
    }
    if (found < 0) throw internal_error("no lattice element matches the factor image");
    lmap[ui] = found;
  }

  LatticeHom l = make_hom(rep.lattice, lp, std::move(lmap));
  for (int x = 0; x < rep.algebra.size(); ++x)
    if (l.map[rep.phi[x]] != theta[x])
      throw internal_error("factor does not extend theta through phi");

  // uniqueness: phi's image plus the bounds generates the source, so any
  // agreeing homomorphism coincides with l
  ElemSet gen;
  gen.add(rep.lattice.bottom);
  gen.add(rep.lattice.top);
  for (int v : rep.phi) gen.add(v);
  if (join_meet_closure(rep.lattice, gen) != ElemSet::full(rep.lattice.size))
    throw internal_error("phi image fails to generate the lattice");

  // when the induced point map is an S-isomorphism, the factor must be a
  // lattice isomorphism: bijective on points and carrying the plus-opens of
  // the target spectrum exactly onto those of the representation spectrum
  bool theta_bijective = big_theta.size() == points.size();
  if (theta_bijective) {
    std::vector<char> hit(points.size(), 0);
    for (int v : big_theta) {
      if (hit[v]) theta_bijective = false;
      hit[v] = 1;
    }
  }
  if (theta_bijective) {
    std::vector<std::uint64_t> mapped;
    for (std::uint64_t u : target_bitop.tplus.opens) {
      ElemSet img;
      for (size_t qi = 0; qi < big_theta.size(); ++qi)
        if (ElemSet{u}.contains(static_cast<int>(qi))) img.add(big_theta[qi]);
      mapped.push_back(img.bits);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == rep.spectrum.tplus.opens && !l.bijective())
      throw internal_error("an S-isomorphism must induce a lattice isomorphism");
  }
  return l;
}

CheckReport check_op_bounds(const Representation& rep) {
  CheckReport out;
  const Algebra& alg = rep.algebra;
  const FiniteDistLattice& l = rep.lattice;
  auto below_join = [&](int a, int b) {
    ElemSet s;
    int j = l.join(rep.phi[a], rep.phi[b]);
    for (int x = 0; x < alg.size(); ++x)
      if (l.leq(rep.phi[x], j)) s.add(x);
    return s;
  };
  auto above_meet = [&](int a, int b) {
    ElemSet s;
    int m = l.meet(rep.phi[a], rep.phi[b]);
    for (int x = 0; x < alg.size(); ++x)
      if (l.leq(m, rep.phi[x])) s.add(x);
    return s;
  };
  if (multivalued(rep.variant)) {
    bool sums = true, prods = true;
    std::string sw, pw;
    for (int a = 0; a < alg.size(); ++a)
      for (int b = 0; b < alg.size(); ++b) {
        if (sums && !alg.plus.at(a, b).subset_of(below_join(a, b))) {
          sums = false;
          sw = "(" + alg.carrier.names[a] + "," + alg.carrier.names[b] + ")";
        }
        if (prods && !alg.times.at(a, b).subset_of(above_meet(a, b))) {
          prods = false;
          pw = "(" + alg.carrier.names[a] + "," + alg.carrier.names[b] + ")";
        }
      }
    out.add("sum-join", sums, sw);
    out.add("product-meet", prods, pw);
  } else {
    bool sums = true, prods = true;
    std::string sw, pw;
    for (int a = 0; a < alg.size(); ++a)
      for (int b = 0; b < alg.size(); ++b) {
        if (sums && rep.phi[alg.plus.at(a, b).first()] != l.join(rep.phi[a], rep.phi[b])) {
          sums = false;
          sw = "(" + alg.carrier.names[a] + "," + alg.carrier.names[b] + ")";
        }
        if (prods &&
            rep.phi[alg.times.at(a, b).first()] != l.meet(rep.phi[a], rep.phi[b])) {
          prods = false;
          pw = "(" + alg.carrier.names[a] + "," + alg.carrier.names[b] + ")";
        }
      }
    out.add("sum-join-equal", sums, sw);
    out.add("product-meet-equal", prods, pw);
  }
  return out;
}

Algebra convex_ops(const Algebra& alg, const Limits& lim) {
  require_separative(alg, "convex_ops");
  Algebra out;
  out.carrier = alg.carrier;
  out.times = MultiOp(alg.size());
  out.plus = MultiOp(alg.size());
  for (int a = 0; a < alg.size(); ++a)
    for (int b = 0; b < alg.size(); ++b) {
      ElemSet pair = ElemSet::single(a).with(b);
      out.times.set(a, b, mu(alg, pair));
      out.plus.set(a, b, alpha(alg, pair));
    }
  AxiomReport ax = check_preseparative(out);
  if (!ax.pass) throw internal_error("convex operations break axiom " + ax.violation->axiom);
  if (!check_sep0(ClosureCache(out)).pass)
    throw internal_error("convex operations break the preorder transitivity");
  if (enumerate_filters(alg, lim) != enumerate_filters(out, lim) ||
      enumerate_ideals(alg, lim) != enumerate_ideals(out, lim))
    throw internal_error("convex operations change the filters or ideals");
  return out;
}

ElemSet radical_closure(const ClosureCache& cache, ElemSet a, SetKind kind,
                        const Limits& lim) {
  const Algebra& alg = cache.algebra();
  ElemSet acc = alg.universe();
  for (const PrimePair& p : enumerate_prime_pairs(alg, lim)) {
    ElemSet member = kind == SetKind::filter ? p.filter : p.ideal;
    if (a.subset_of(member)) acc &= member;
  }
  // on separative input a closed argument reproduces the one-step formula
  ElemSet formula;
  bool applicable = kind == SetKind::filter ? is_filter(alg, a) : is_ideal(alg, a);
  if (applicable) {
    for (int x = 0; x < alg.size(); ++x) {
      ElemSet cl = kind == SetKind::filter ? cache.alpha_single(x) : cache.mu_single(x);
      if (cl.intersects(a)) formula.add(x);
    }
    if (acc != formula && is_preseparative(alg) && check_sep0(cache).pass)
      throw internal_error("radical closure disagrees with its direct formula");
  }
  return acc;
}

Algebra radical_ops(const Algebra& alg, const Limits& lim) {
  require_separative(alg, "radical_ops");
  ClosureCache cache(alg);
  Algebra out;
  out.carrier = alg.carrier;
  out.times = MultiOp(alg.size());
  out.plus = MultiOp(alg.size());
  for (int a = 0; a < alg.size(); ++a)
    for (int b = 0; b < alg.size(); ++b) {
      ElemSet pair = ElemSet::single(a).with(b);
      out.times.set(a, b, radical_closure(cache, pair, SetKind::filter, lim));
      out.plus.set(a, b, radical_closure(cache, pair, SetKind::ideal, lim));
    }
  AxiomReport ax = check_preseparative(out);
  if (!ax.pass)
    throw internal_error("radical operations break axiom " + ax.violation->axiom);
  ClosureCache out_cache(out);
  if (!check_sep0(out_cache).pass)
    throw internal_error("radical operations break the preorder transitivity");
  for (int x = 0; x < alg.size(); ++x)
    if (cache.above(x) != out_cache.above(x))
      throw internal_error("radical operations change the carrier preorder");

  auto radical_only = [&](std::vector<ElemSet> sets, SetKind kind) {
    std::vector<ElemSet> keep;
    for (ElemSet s : sets)
      if (radical_closure(cache, s, kind, lim) == s) keep.push_back(s);
    return keep;
  };
  if (enumerate_filters(out, lim) != radical_only(enumerate_filters(alg, lim), SetKind::filter) ||
      enumerate_ideals(out, lim) != radical_only(enumerate_ideals(alg, lim), SetKind::ideal))
    throw internal_error("radical operations change the radical filters or ideals");
  return out;
}

CheckReport order_embedding_check(const Representation& rep) {
  CheckReport out;
  ClosureCache cache(rep.algebra);
  const FiniteDistLattice& l = rep.lattice;
  bool order = true;
  std::string ow;
  for (int a = 0; a < rep.algebra.size() && order; ++a)
    for (int b = 0; b < rep.algebra.size(); ++b)
      if (cache.leq(a, b) != l.leq(rep.phi[a], rep.phi[b])) {
        order = false;
        ow = "(" + rep.algebra.carrier.names[a] + "," + rep.algebra.carrier.names[b] + ")";
        break;
      }
  out.add("order-matches-phi", order, ow);

  Limits lim;
  lim.enum_cap = std::max(lim.enum_cap, rep.algebra.size());
  bool radical_eq = true;
  std::string rw;
  for (int a = 0; a < rep.algebra.size() && radical_eq; ++a)
    for (int b = 0; b < rep.algebra.size(); ++b) {
      bool same_phi = rep.phi[a] == rep.phi[b];
      bool same_radical =
          radical_closure(cache, ElemSet::single(a), SetKind::ideal, lim) ==
          radical_closure(cache, ElemSet::single(b), SetKind::ideal, lim);
      if (same_phi != same_radical) {
        radical_eq = false;
        rw = "(" + rep.algebra.carrier.names[a] + "," + rep.algebra.carrier.names[b] + ")";
        break;
      }
    }
  out.add("phi-equality-is-radical-equality", radical_eq, rw);

  bool antisym = true;
  for (int a = 0; a < rep.algebra.size() && antisym; ++a)
    for (int b = 0; b < rep.algebra.size(); ++b)
      if (l.leq(rep.phi[a], rep.phi[b]) && l.leq(rep.phi[b], rep.phi[a]) &&
          rep.phi[a] != rep.phi[b]) {
        antisym = false;
        break;
      }
  out.add("quotient-embedding", antisym, "");
  return out;
}

}  // namespace abspec
