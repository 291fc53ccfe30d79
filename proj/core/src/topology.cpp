#include "abspec/topology.hpp"

#include <algorithm>
#include <set>

#include "abspec/errors.hpp"

namespace abspec {

bool FiniteTopology::is_open(ElemSet u) const {
  return std::binary_search(opens.begin(), opens.end(), u.bits);
}

ElemSet FiniteTopology::closure(ElemSet a) const {
  ElemSet out = universe();
  for (std::uint64_t u : opens) {
    ElemSet closed = ElemSet{u}.complement(point_count);
    if (a.subset_of(closed)) out &= closed;
  }
  return out;
}

ElemSet FiniteTopology::interior(ElemSet a) const {
  ElemSet out;
  for (std::uint64_t u : opens)
    if (ElemSet{u}.subset_of(a)) out |= ElemSet{u};
  return out;
}

bool FiniteTopology::t0() const {
  for (int a = 0; a < point_count; ++a)
    for (int b = a + 1; b < point_count; ++b) {
      bool split = false;
      for (std::uint64_t u : opens)
        if (ElemSet{u}.contains(a) != ElemSet{u}.contains(b)) {
          split = true;
          break;
        }
      if (!split) return false;
    }
  return true;
}

bool FiniteTopology::t1() const {
  for (int a = 0; a < point_count; ++a)
    if (closure(ElemSet::single(a)) != ElemSet::single(a)) return false;
  return true;
}

bool FiniteTopology::discrete() const {
  return opens.size() == (std::uint64_t{1} << point_count);
}

FiniteTopology generate_topology(int point_count, std::span<const ElemSet> subbase) {
  ElemSet full = ElemSet::full(point_count);
  std::set<std::uint64_t> fam{0, full.bits};
  for (ElemSet s : subbase) {
    if (!s.subset_of(full)) throw input_error("subbase set leaves the point range");
    fam.insert(s.bits);
  }
  // finite base: all intersections of subbase members, then all unions
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::uint64_t> cur(fam.begin(), fam.end());
    for (std::uint64_t a : cur)
      for (std::uint64_t b : cur)
        if (fam.insert(a & b).second) grew = true;
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::uint64_t> cur(fam.begin(), fam.end());
    for (std::uint64_t a : cur)
      for (std::uint64_t b : cur)
        if (fam.insert(a | b).second) grew = true;
  }
  FiniteTopology t;
  t.point_count = point_count;
  t.opens.assign(fam.begin(), fam.end());
  return t;
}

FiniteTopology discrete_topology(int point_count) {
  FiniteTopology t;
  t.point_count = point_count;
  t.opens.resize(std::uint64_t{1} << point_count);
  for (std::uint64_t m = 0; m < t.opens.size(); ++m) t.opens[m] = m;
  return t;
}

FiniteTopology indiscrete_topology(int point_count) {
  FiniteTopology t;
  t.point_count = point_count;
  t.opens.push_back(0);
  if (point_count > 0) t.opens.push_back(ElemSet::full(point_count).bits);
  return t;
}

}  // namespace abspec
