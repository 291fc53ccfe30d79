#include "abspec/lattice.hpp"

#include <algorithm>
#include <string>

namespace abspec {

namespace {

std::string tuple2(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string tuple3(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

CheckReport FiniteDistLattice::check() const {
  CheckReport rep;
  const int n = size;
  if (n < 1 || join_table.size() != static_cast<size_t>(n) * n ||
      meet_table.size() != static_cast<size_t>(n) * n || bottom < 0 || bottom >= n ||
      top < 0 || top >= n) {
    rep.add("shape", false, "table sizes or bound indices are off");
    return rep;
  }
  for (int v : join_table)
    if (v < 0 || v >= n) {
      rep.add("shape", false, "join entry out of range");
      return rep;
    }
  for (int v : meet_table)
    if (v < 0 || v >= n) {
      rep.add("shape", false, "meet entry out of range");
      return rep;
    }
  rep.add("shape", true, "");

  auto law2 = [&](const char* name, auto&& pred) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (!pred(a, b)) {
          rep.add(name, false, tuple2(a, b));
          return;
        }
    rep.add(name, true, "");
  };
  auto law3 = [&](const char* name, auto&& pred) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!pred(a, b, c)) {
            rep.add(name, false, tuple3(a, b, c));
            return;
          }
    rep.add(name, true, "");
  };

  law2("commutative", [&](int a, int b) {
    return join(a, b) == join(b, a) && meet(a, b) == meet(b, a);
  });
  law3("associative", [&](int a, int b, int c) {
    return join(a, join(b, c)) == join(join(a, b), c) &&
           meet(a, meet(b, c)) == meet(meet(a, b), c);
  });
  law2("idempotent-absorptive", [&](int a, int b) {
    return join(a, a) == a && meet(a, a) == a && join(a, meet(a, b)) == a &&
           meet(a, join(a, b)) == a;
  });
  law3("distributive", [&](int a, int b, int c) {
    return meet(a, join(b, c)) == join(meet(a, b), meet(a, c));
  });
  law2("bounds", [&](int a, int) {
    return join(a, bottom) == a && meet(a, top) == a;
  });
  return rep;
}

void FiniteDistLattice::validate() const {
  CheckReport rep = check();
  if (const CheckItem* f = rep.first_failure())
    throw input_error("lattice law " + f->name + " fails at " + f->detail);
}

std::vector<int> join_irreducibles(const FiniteDistLattice& l) {
  std::vector<int> out;
  for (int j = 0; j < l.size; ++j) {
    if (j == l.bottom) continue;
    bool irreducible = true;
    for (int a = 0; a < l.size && irreducible; ++a)
      for (int b = 0; b < l.size && irreducible; ++b)
        if (l.join(a, b) == j && a != j && b != j) irreducible = false;
    if (irreducible) out.push_back(j);
  }
  return out;
}

std::vector<ElemSet> lattice_prime_ideals(const FiniteDistLattice& l, const Limits& lim) {
  if (l.size > lim.lattice_cap)
    throw capacity_error("lattice with " + std::to_string(l.size) +
                         " elements exceeds the cap of " + std::to_string(lim.lattice_cap));
  // p_j = {x : j not below x}, one per join-irreducible j; every prime ideal
  // of a finite distributive lattice arises this way (its complement is a
  // principal filter generated by an irreducible).
  std::vector<ElemSet> out;
  for (int j : join_irreducibles(l)) {
    ElemSet p;
    for (int x = 0; x < l.size; ++x)
      if (!l.leq(j, x)) p.add(x);
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool LatticeHom::bijective() const {
  if (source.size != target.size) return false;
  std::vector<char> hit(target.size, 0);
  for (int v : map) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c == 1; });
}

LatticeHom make_hom(FiniteDistLattice source, FiniteDistLattice target,
                    std::vector<int> map) {
  if (static_cast<int>(map.size()) != source.size)
    throw input_error("homomorphism map size does not match the source");
  for (int v : map)
    if (v < 0 || v >= target.size) throw input_error("homomorphism value out of range");
  if (map[source.bottom] != target.bottom || map[source.top] != target.top)
    throw input_error("homomorphism does not preserve the bounds");
  for (int a = 0; a < source.size; ++a)
    for (int b = 0; b < source.size; ++b) {
      if (map[source.join(a, b)] != target.join(map[a], map[b]))
        throw input_error("homomorphism breaks join at " + tuple2(a, b));
      if (map[source.meet(a, b)] != target.meet(map[a], map[b]))
        throw input_error("homomorphism breaks meet at " + tuple2(a, b));
    }
  LatticeHom h;
  h.source = std::move(source);
  h.target = std::move(target);
  h.map = std::move(map);
  return h;
}

LatticeHom compose(const LatticeHom& f, const LatticeHom& g) {
  if (!(f.target == g.source))
    throw input_error("composition needs matching middle lattices");
  std::vector<int> m(f.map.size());
  for (size_t i = 0; i < f.map.size(); ++i) m[i] = g.map[f.map[i]];
  return make_hom(f.source, g.target, std::move(m));
}

std::vector<std::vector<int>> enumerate_homs(const FiniteDistLattice& source,
                                             const FiniteDistLattice& target,
                                             const Limits& lim) {
  if (source.size > lim.enum_cap)
    throw capacity_error("homomorphism enumeration from " + std::to_string(source.size) +
                         " elements exceeds the cap of " + std::to_string(lim.enum_cap));
  std::vector<std::vector<int>> out;
  std::vector<int> map(source.size, -1);
  map[source.bottom] = target.bottom;
  map[source.top] = target.top;

  // assign elements in index order; each join/meet constraint is verified as
  // soon as its last participant receives a value, with just_set either an
  // operand or the result
  auto consistent = [&](int just_set) {
    for (int a = 0; a < source.size; ++a) {
      if (map[a] < 0) continue;
      int j = source.join(just_set, a), m = source.meet(just_set, a);
      if (map[j] >= 0 && target.join(map[just_set], map[a]) != map[j]) return false;
      if (map[m] >= 0 && target.meet(map[just_set], map[a]) != map[m]) return false;
      for (int b = 0; b <= a; ++b) {
        if (map[b] < 0) continue;
        if (source.join(a, b) == just_set &&
            target.join(map[a], map[b]) != map[just_set])
          return false;
        if (source.meet(a, b) == just_set &&
            target.meet(map[a], map[b]) != map[just_set])
          return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, int next) -> void {
    while (next < source.size && map[next] >= 0) {
      ++next;
    }
    if (next == source.size) {
      out.push_back(map);
      return;
    }
    for (int v = 0; v < target.size; ++v) {
      map[next] = v;
      if (consistent(next)) self(self, next + 1);
      map[next] = -1;
    }
  };
  // bounds may have been the same element; recheck them before recursing
  if (map[source.bottom] == target.bottom && map[source.top] == target.top &&
      consistent(source.bottom) && consistent(source.top))
    rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace abspec
