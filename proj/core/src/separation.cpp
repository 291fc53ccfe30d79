#include "abspec/separation.hpp"

#include <algorithm>

#include "subset_search.hpp"

namespace abspec {

std::vector<PrimePair> enumerate_prime_pairs(const Algebra& alg, const Limits& lim) {
  if (alg.size() > lim.enum_cap)
    throw capacity_error("prime pair enumeration over " + std::to_string(alg.size()) +
                         " elements exceeds the cap of " + std::to_string(lim.enum_cap));
  const int n = alg.size();
  std::vector<ElemSet> filters;
  detail::search_subsets(n, [&](ElemSet& in, ElemSet& out) {
    // in must absorb products, the complement must absorb sums
    for (;;) {
      ElemSet req_in = op_extend(alg.times, in, in);
      ElemSet req_out = op_extend(alg.plus, out, out);
      if (req_in.intersects(out) || req_out.intersects(in)) return false;
      if (req_in.subset_of(in) && req_out.subset_of(out)) return true;
      in |= req_in;
      out |= req_out;
    }
  }, filters);
  std::sort(filters.begin(), filters.end());
  std::vector<PrimePair> out;
  out.reserve(filters.size());
  for (ElemSet f : filters) out.push_back({f, f.complement(n)});
  return out;
}

SeparateResult separate(const ClosureCache& cache, ElemSet f0, ElemSet i0) {
  const Algebra& alg = cache.algebra();
  if (!is_filter(alg, f0)) throw input_error("separate: F0 is not a filter");
  if (!is_ideal(alg, i0)) throw input_error("separate: I0 is not an ideal");
  if (f0.intersects(i0)) throw input_error("separate: F0 and I0 intersect");
  ElemSet f = f0, i = i0;
  for (int x = 0; x < alg.size(); ++x) {
    ElemSet fx = mu(alg, f.with(x));
    if (!fx.intersects(i)) {
      f = fx;
      continue;
    }
    ElemSet ix = alpha(alg, i.with(x));
    if (!f.intersects(ix)) {
      i = ix;
      continue;
    }
    SeparateResult r;
    r.stuck = x;
    return r;
  }
  if ((f | i) != alg.universe() || !is_prime(alg, f, SetKind::filter))
    throw internal_error("separate produced a non-prime cover");
  SeparateResult r;
  r.ok = true;
  r.pair = {f, i};
  return r;
}

namespace {

bool extends(const PrimePair& p, ElemSet f0, ElemSet i0) {
  return f0.subset_of(p.filter) && i0.subset_of(p.ideal);
}

}  // namespace

SepResult check_sep(const Algebra& alg, const Limits& lim) {
  if (alg.size() > lim.sep_cap)
    throw capacity_error("separation check over " + std::to_string(alg.size()) +
                         " elements exceeds the cap of " + std::to_string(lim.sep_cap));
  auto filters = enumerate_filters(alg, lim);
  auto ideals = enumerate_ideals(alg, lim);
  auto pairs = enumerate_prime_pairs(alg, lim);
  for (ElemSet f0 : filters)
    for (ElemSet i0 : ideals) {
      if (f0.intersects(i0)) continue;
      bool found = false;
      for (const PrimePair& p : pairs)
        if (extends(p, f0, i0)) {
          found = true;
          break;
        }
      if (!found) return {false, f0, i0};
    }
  return {};
}

std::pair<ElemSet, ElemSet> sep0_failure_to_sep_failure(const ClosureCache& cache,
                                                        int a, int b, int c,
                                                        const Limits& lim) {
  const Algebra& alg = cache.algebra();
  auto in_range = [&](int x) { return x >= 0 && x < alg.size(); };
  if (!in_range(a) || !in_range(b) || !in_range(c) || !cache.leq(a, b) ||
      !cache.leq(b, c) || cache.leq(a, c))
    throw input_error("not a transitivity failure witness");
  ElemSet f0 = cache.mu_single(a);
  ElemSet i0 = cache.alpha_single(c);
  if (f0.intersects(i0))
    throw internal_error("witness closures intersect despite a /<= c");
  for (const PrimePair& p : enumerate_prime_pairs(alg, lim))
    if (extends(p, f0, i0))
      throw internal_error("witness pair is separable after all");
  return {f0, i0};
}

std::vector<int> wallman(const ClosureCache& cache, ElemSet m,
                         const std::map<std::uint64_t, int>& choice,
                         const Limits& lim) {
  const Algebra& alg = cache.algebra();
  if (!is_filter(alg, m)) throw input_error("wallman: M is not a filter");
  std::vector<int> chosen;
  for (const PrimePair& p : enumerate_prime_pairs(alg, lim)) {
    if (!m.subset_of(p.filter)) continue;
    auto it = choice.find(p.filter.bits);
    if (it == choice.end())
      throw input_error("wallman: no choice for a prime filter containing M");
    if (it->second < 0 || it->second >= alg.size() || !p.filter.contains(it->second))
      throw input_error("wallman: chosen element lies outside its prime filter");
    if (std::find(chosen.begin(), chosen.end(), it->second) == chosen.end())
      chosen.push_back(it->second);
  }
  auto meets = [&](const std::vector<int>& xs) {
    ElemSet s;
    for (int x : xs) s.add(x);
    return m.intersects(alpha(alg, s));
  };
  if (!meets(chosen))
    throw internal_error("wallman: full choice set fails, algebra is not separative");
  for (size_t k = 0; k < chosen.size();) {
    std::vector<int> trial = chosen;
    trial.erase(trial.begin() + k);
    if (meets(trial))
      chosen = std::move(trial);
    else
      ++k;
  }
  return chosen;
}

}  // namespace abspec
