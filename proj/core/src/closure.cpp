#include "abspec/closure.hpp"

#include <algorithm>

#include "subset_search.hpp"

namespace abspec {

bool is_filter(const Algebra& alg, ElemSet a) {
  return op_extend(alg.times, a, a).subset_of(a);
}

bool is_ideal(const Algebra& alg, ElemSet a) {
  return op_extend(alg.plus, a, a).subset_of(a);
}

bool is_prime(const Algebra& alg, ElemSet a, SetKind kind) {
  ElemSet co = a.complement(alg.size());
  if (kind == SetKind::filter) return is_filter(alg, a) && is_ideal(alg, co);
  return is_ideal(alg, a) && is_filter(alg, co);
}

namespace {

// Least S >= a with op_extend(op, S, S) inside S. Each round replaces S by
// S u S.S; by induction round k holds the union of all k'-fold extension
// products of a with k' <= 2^k, which is the union of the powers a^i, so the
// fixpoint is the least closed superset reached in at most log2(n)+1 growth
// rounds.
ElemSet close_under(const MultiOp& op, ElemSet a) {
  ElemSet s = a;
  for (;;) {
    ElemSet next = s | op_extend(op, s, s);
    if (next == s) return s;
    s = next;
  }
}

}  // namespace

ElemSet mu(const Algebra& alg, ElemSet a) { return close_under(alg.times, a); }

ElemSet alpha(const Algebra& alg, ElemSet a) { return close_under(alg.plus, a); }

ElemSet closure(const Algebra& alg, ElemSet a, SetKind kind) {
  return kind == SetKind::filter ? mu(alg, a) : alpha(alg, a);
}

Residuals residuals(const Algebra& alg, ElemSet f, ElemSet i) {
  if (!is_filter(alg, f)) throw input_error("residuals: first argument is not a filter");
  if (!is_ideal(alg, i)) throw input_error("residuals: second argument is not an ideal");
  Residuals r;
  r.f_minus_i = subtract(alg, f, i);
  r.i_over_f = divide(alg, i, f);
  if (!is_filter(alg, r.f_minus_i))
    throw internal_error("residual F-I failed to be a filter");
  if (!is_ideal(alg, r.i_over_f))
    throw internal_error("residual I/F failed to be an ideal");
  return r;
}

ClosureCache::ClosureCache(Algebra alg) : alg_(std::move(alg)) {
  alg_.validate();
  const int n = alg_.size();
  mu_.resize(n);
  alpha_.resize(n);
  leq_rows_.resize(n);
  for (int x = 0; x < n; ++x) {
    mu_[x] = mu(alg_, ElemSet::single(x));
    alpha_[x] = alpha(alg_, ElemSet::single(x));
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (mu_[x].intersects(alpha_[y])) leq_rows_[x].add(y);
}

Sep0Result check_sep0(const ClosureCache& cache) {
  const int n = cache.algebra().size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!cache.leq(a, b)) continue;
      ElemSet gap = cache.above(b).minus(cache.above(a));
      if (!gap.is_empty()) return {false, a, b, gap.first()};
    }
  return {};
}

namespace {

std::vector<ElemSet> enumerate_closed(const Algebra& alg, const MultiOp& op,
                                      const Limits& lim) {
  if (alg.size() > lim.enum_cap)
    throw capacity_error("subset enumeration over " + std::to_string(alg.size()) +
                         " elements exceeds the cap of " + std::to_string(lim.enum_cap));
  std::vector<ElemSet> out;
  detail::search_subsets(alg.size(), [&](ElemSet& in, ElemSet& out_mask) {
    for (;;) {
      ElemSet req = op_extend(op, in, in);
      if (req.intersects(out_mask)) return false;
      if (req.subset_of(in)) return true;
      in |= req;
    }
  }, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<ElemSet> enumerate_filters(const Algebra& alg, const Limits& lim) {
  return enumerate_closed(alg, alg.times, lim);
}

std::vector<ElemSet> enumerate_ideals(const Algebra& alg, const Limits& lim) {
  return enumerate_closed(alg, alg.plus, lim);
}

}  // namespace abspec
