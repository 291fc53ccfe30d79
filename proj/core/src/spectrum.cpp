#include "abspec/spectrum.hpp"

#include <algorithm>

#include "abspec/errors.hpp"
#include "subset_search.hpp"

namespace abspec {

namespace {

bool spectrum_point(const Algebra& alg, ElemSet p) {
  const int n = alg.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (p.contains(x) && p.contains(y) && !alg.plus.at(x, y).subset_of(p))
        return false;
      if (alg.times.at(x, y).intersects(p) && !p.contains(x) && !p.contains(y))
        return false;
    }
  return true;
}

bool lspectrum_point(const Algebra& alg, ElemSet p) {
  const int n = alg.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool px = p.contains(x), py = p.contains(y);
      if (p.contains(alg.plus.at(x, y).first()) != (px && py)) return false;
      if (p.contains(alg.times.at(x, y).first()) != (px || py)) return false;
    }
  return true;
}

BitopSpace space_from_points(const Algebra& alg, std::vector<ElemSet> points) {
  std::sort(points.begin(), points.end());
  const int count = static_cast<int>(points.size());
  BitopSpace s;
  s.ideal_labels = points;
  for (ElemSet p : points) {
    std::string name = "{";
    bool first = true;
    for_each(p, [&](int x) {
      if (!first) name += ",";
      name += alg.carrier.names[x];
      first = false;
    });
    s.point_names.push_back(name + "}");
  }
  std::vector<ElemSet> subbase;
  subbase.reserve(alg.size());
  for (int x = 0; x < alg.size(); ++x) {
    ElemSet u;  // {p : x not in p}
    for (int i = 0; i < count; ++i)
      if (!points[i].contains(x)) u.add(i);
    subbase.push_back(u);
  }
  s.tplus = generate_topology(count, subbase);
  for (ElemSet& u : subbase) u = u.complement(count);
  s.tminus = generate_topology(count, subbase);
  return s;
}

void check_spectrum_caps(const Algebra& alg, bool proper, const Limits& lim) {
  alg.validate();
  if (alg.size() > lim.carrier_cap)
    throw capacity_error("spectrum over " + std::to_string(alg.size()) +
                         " elements exceeds the cap of " + std::to_string(lim.carrier_cap));
  if (proper && (!alg.carrier.xi0 || !alg.carrier.xi1))
    throw input_error("proper spectrum needs both designated points");
}

}  // namespace

BitopSpace build_spectrum(const Algebra& alg, bool proper, const Limits& lim) {
  check_spectrum_caps(alg, proper, lim);
  const int n = alg.size();
  ElemSet seed_in, seed_out;
  if (proper) {
    seed_in.add(*alg.carrier.xi0);
    seed_out.add(*alg.carrier.xi1);
  }
  std::vector<ElemSet> points;
  detail::search_subsets(n, [&](ElemSet& in, ElemSet& out) {
    in |= seed_in;
    out |= seed_out;
    for (;;) {
      if (in.intersects(out)) return false;
      ElemSet grow_in, grow_out;
      for_each(in, [&](int x) {
        for_each(in, [&](int y) { grow_in |= alg.plus.at(x, y); });
        // x+y already forced inside: y outside would break the sum rule
        for (int y = 0; y < n; ++y)
          if (alg.plus.at(x, y).intersects(out)) grow_out.add(y);
      });
      for_each(out, [&](int x) {
        for_each(out, [&](int y) { grow_out |= alg.times.at(x, y); });
        // a product meeting the point needs a factor inside
        for (int y = 0; y < n; ++y)
          if (alg.times.at(x, y).intersects(in)) grow_in.add(y);
      });
      if (grow_in.subset_of(in) && grow_out.subset_of(out)) break;
      in |= grow_in;
      out |= grow_out;
    }
    if ((in | out) == ElemSet::full(n)) return spectrum_point(alg, in);
    return true;
  }, points);
  BitopSpace s = space_from_points(alg, std::move(points));
  if (s.point_count() > lim.point_cap)
    throw capacity_error("spectrum has " + std::to_string(s.point_count()) +
                         " points, cap is " + std::to_string(lim.point_cap));
  return s;
}

BitopSpace build_lspectrum(const Algebra& alg, bool proper, const Limits& lim) {
  check_spectrum_caps(alg, proper, lim);
  if (!alg.times.single_valued() || !alg.plus.single_valued())
    throw input_error("l-spectrum needs single-valued operations");
  const int n = alg.size();
  ElemSet seed_in, seed_out;
  if (proper) {
    seed_in.add(*alg.carrier.xi0);
    seed_out.add(*alg.carrier.xi1);
  }
  std::vector<ElemSet> points;
  detail::search_subsets(n, [&](ElemSet& in, ElemSet& out) {
    in |= seed_in;
    out |= seed_out;
    for (;;) {
      if (in.intersects(out)) return false;
      ElemSet grow_in = in, grow_out = out;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          int sum = alg.plus.at(x, y).first();
          int prod = alg.times.at(x, y).first();
          if (in.contains(x) && in.contains(y)) grow_in.add(sum);
          if (out.contains(x) || out.contains(y)) grow_out.add(sum);
          if (in.contains(x) || in.contains(y)) grow_in.add(prod);
          if (out.contains(x) && out.contains(y)) grow_out.add(prod);
          if (in.contains(sum)) {
            grow_in.add(x);
            grow_in.add(y);
          }
          if (out.contains(prod)) {
            grow_out.add(x);
            grow_out.add(y);
          }
          if (in.contains(prod) && out.contains(x)) grow_in.add(y);
          if (in.contains(prod) && out.contains(y)) grow_in.add(x);
          if (out.contains(sum) && in.contains(x)) grow_out.add(y);
          if (out.contains(sum) && in.contains(y)) grow_out.add(x);
        }
      if (grow_in == in && grow_out == out) break;
      in = grow_in;
      out = grow_out;
    }
    if ((in | out) == ElemSet::full(n)) return lspectrum_point(alg, in);
    return true;
  }, points);
  BitopSpace s = space_from_points(alg, std::move(points));
  if (s.point_count() > lim.point_cap)
    throw capacity_error("l-spectrum has " + std::to_string(s.point_count()) +
                         " points, cap is " + std::to_string(lim.point_cap));
  return s;
}

namespace {

std::vector<ElemSet> complemented_opens(const FiniteTopology& own,
                                        const FiniteTopology& other) {
  std::vector<ElemSet> out;
  for (std::uint64_t u : own.opens)
    if (other.is_open(ElemSet{u}.complement(own.point_count))) out.push_back(ElemSet{u});
  return out;
}

bool base_for(const std::vector<ElemSet>& base, const FiniteTopology& t) {
  for (std::uint64_t u : t.opens) {
    ElemSet acc;
    for (ElemSet b : base)
      if (b.subset_of(ElemSet{u})) acc |= b;
    if (acc != ElemSet{u}) return false;
  }
  return true;
}

}  // namespace

CheckReport check_spectrum_axioms(const BitopSpace& space) {
  CheckReport rep;
  const int count = space.point_count();
  if (space.tminus.point_count != count) {
    rep.add("shape", false, "topologies disagree on the point count");
    return rep;
  }
  auto lplus = complemented_opens(space.tplus, space.tminus);
  auto lminus = complemented_opens(space.tminus, space.tplus);

  rep.add("base-plus", base_for(lplus, space.tplus),
          "every plus-open is a union of complemented opens");
  rep.add("base-minus", base_for(lminus, space.tminus),
          "every minus-open is a union of complemented opens");
  rep.add("compactness", true, "finite space: every subset is compact");
  rep.add("one-t0", space.tplus.t0() || space.tminus.t0(),
          "at least one topology distinguishes points");
  rep.add("tplus-t0", space.tplus.t0(), "");
  rep.add("tminus-t0", space.tminus.t0(), "");

  std::vector<ElemSet> lminus_co;
  for (ElemSet u : lminus) lminus_co.push_back(u.complement(count));
  std::sort(lminus_co.begin(), lminus_co.end());
  rep.add("l-complements", lplus == lminus_co,
          "complemented plus-opens are the complements of the minus ones");

  bool lp_all = lplus.size() == space.tplus.opens.size();
  bool lm_all = lminus.size() == space.tminus.opens.size();
  rep.add("l-equals-opens", lp_all && lm_all,
          "finite compactness makes every open complemented");
  FiniteTopology co;
  co.point_count = count;
  for (std::uint64_t u : space.tplus.opens)
    co.opens.push_back(ElemSet{u}.complement(count).bits);
  std::sort(co.opens.begin(), co.opens.end());
  rep.add("complement-topology", co == space.tminus,
          "minus-opens are exactly the complements of plus-opens");
  return rep;
}

JoinStone join_and_stone(const BitopSpace& space) {
  std::vector<ElemSet> subbase;
  for (std::uint64_t u : space.tplus.opens) subbase.push_back(ElemSet{u});
  for (std::uint64_t u : space.tminus.opens) subbase.push_back(ElemSet{u});
  JoinStone js;
  js.join = generate_topology(space.point_count(), subbase);
  js.stone_space = js.join.discrete();
  js.stone_spectrum = space.tplus == space.tminus;
  bool both_t1 = space.tplus.t1() && space.tminus.t1();
  if (js.stone_spectrum != both_t1)
    throw internal_error("stone spectrum criterion disagrees with the T1 test");
  return js;
}

Specialization specialization_and_extremes(const BitopSpace& space) {
  const int count = space.point_count();
  std::vector<ElemSet> clp(count), clm(count);
  for (int a = 0; a < count; ++a) {
    clp[a] = space.tplus.closure(ElemSet::single(a));
    clm[a] = space.tminus.closure(ElemSet::single(a));
  }
  Specialization sp;
  sp.order_rows.resize(count);
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b) {
      bool le = clm[b].contains(a);
      bool f1 = clm[a].subset_of(clm[b]);
      bool f2 = clp[a].contains(b);
      bool f3 = clp[b].subset_of(clp[a]);
      if (le != f1 || le != f2 || le != f3)
        throw internal_error("specialization formulations disagree");
      if (space.labeled() &&
          le != space.ideal_labels[a].subset_of(space.ideal_labels[b]))
        throw internal_error("specialization differs from label inclusion");
      if (le) sp.order_rows[a].add(b);
    }
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b)
      if (a != b && sp.order_rows[a].contains(b) && sp.order_rows[b].contains(a))
        throw internal_error("specialization is not antisymmetric");

  for (int a = 0; a < count; ++a) {
    if (sp.order_rows[a] == ElemSet::single(a)) sp.max_points.add(a);
    bool minimal = true;
    for (int b = 0; b < count && minimal; ++b)
      if (b != a && sp.order_rows[b].contains(a)) minimal = false;
    if (minimal) sp.min_points.add(a);
  }
  if (count > 0) {
    if (space.tplus.closure(sp.min_points) != space.tplus.universe())
      throw internal_error("minimal points fail to be dense in the plus topology");
    if (space.tminus.closure(sp.max_points) != space.tminus.universe())
      throw internal_error("maximal points fail to be dense in the minus topology");
  }

  // Closed-subspace sanity pass, sampled: restricting both topologies to any
  // join-closed set must again give a spectrum. Bounded to small spaces since
  // the join of a valid spectrum is discrete and the check walks all subsets.
  if (count <= 8) {
    FiniteTopology join = join_and_stone(space).join;
    for (std::uint64_t closed = 0; closed < (std::uint64_t{1} << count); ++closed) {
      ElemSet c{closed};
      if (!join.is_closed(c)) continue;
      auto restrict_top = [&](const FiniteTopology& t) {
        std::vector<ElemSet> sub;
        auto mem = c.members();
        for (std::uint64_t u : t.opens) {
          ElemSet r;
          for (int i = 0; i < static_cast<int>(mem.size()); ++i)
            if (ElemSet{u}.contains(mem[i])) r.add(i);
          sub.push_back(r);
        }
        return generate_topology(static_cast<int>(mem.size()), sub);
      };
      BitopSpace restricted;
      restricted.point_names.resize(c.count());
      restricted.tplus = restrict_top(space.tplus);
      restricted.tminus = restrict_top(space.tminus);
      if (!check_spectrum_axioms(restricted).pass())
        throw internal_error("a join-closed subspace fails the spectrum axioms");
    }
  }
  return sp;
}

}  // namespace abspec
