#pragma once

#include <vector>

#include "abspec/elem_set.hpp"

namespace abspec::detail {

/// Enumerate the subsets of {0..n-1} satisfying a constraint given by a
/// propagator. The propagator sees partial assignments as (in, out) masks,
/// grows either side to its forced consequences, and returns false on
/// contradiction. Branching always picks the smallest undecided element, so
/// each solution is reached exactly once; results come out in no particular
/// order and are sorted by the callers that need it.
///
/// Equivalent to filtering all 2^n subsets with the full predicate, which is
/// how the tests cross-check it on small carriers.
template <class Propagate>
void search_subsets(int n, Propagate&& prop, std::vector<ElemSet>& results) {
  ElemSet full = ElemSet::full(n);
  auto rec = [&](auto&& self, ElemSet in, ElemSet out) -> void {
    if (!prop(in, out)) return;
    ElemSet undecided = full.minus(in | out);
    if (undecided.is_empty()) {
      results.push_back(in);
      return;
    }
    int x = undecided.first();
    self(self, in.with(x), out);
    self(self, in, out.with(x));
  };
  rec(rec, ElemSet{}, ElemSet{});
}

}  // namespace abspec::detail
