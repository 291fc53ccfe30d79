#pragma once

// Brute-force oracles and fixture helpers shared by the test binaries.
// The oracles scan all 2^n subsets with the defining predicates written out
// directly, so the pruned searches in the library are checked against an
// independent implementation.

#include <cstdint>
#include <string>
#include <vector>

#include "abspec/algebra.hpp"
#include "abspec/algfile.hpp"
#include "abspec/lattice.hpp"

namespace abspec::testing {

inline ElemSet es(std::initializer_list<int> xs) {
  ElemSet s;
  for (int x : xs) s.add(x);
  return s;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(ABSPEC_FIXTURE_DIR) + "/" + name;
}

inline Algebra fixture(const std::string& name) {
  return load_algebra_file(fixture_path(name));
}

inline std::vector<ElemSet> brute_filters(const Algebra& alg) {
  std::vector<ElemSet> out;
  for (std::uint64_t m = 0; m < (1ull << alg.size()); ++m) {
    ElemSet s{m};
    if (op_extend(alg.times, s, s).subset_of(s)) out.push_back(s);
  }
  return out;
}

inline std::vector<ElemSet> brute_ideals(const Algebra& alg) {
  std::vector<ElemSet> out;
  for (std::uint64_t m = 0; m < (1ull << alg.size()); ++m) {
    ElemSet s{m};
    if (op_extend(alg.plus, s, s).subset_of(s)) out.push_back(s);
  }
  return out;
}

// prime filters: filter whose complement is an ideal
inline std::vector<ElemSet> brute_prime_filters(const Algebra& alg) {
  std::vector<ElemSet> out;
  for (std::uint64_t m = 0; m < (1ull << alg.size()); ++m) {
    ElemSet s{m};
    ElemSet co = s.complement(alg.size());
    if (op_extend(alg.times, s, s).subset_of(s) &&
        op_extend(alg.plus, co, co).subset_of(co))
      out.push_back(s);
  }
  return out;
}

// x, y in p  =>  x + y subset of p;  (xy) meets p  =>  x in p or y in p
inline bool brute_is_point(const Algebra& alg, ElemSet p) {
  const int n = alg.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (p.contains(x) && p.contains(y) && !alg.plus.at(x, y).subset_of(p)) return false;
      if (alg.times.at(x, y).intersects(p) && !p.contains(x) && !p.contains(y)) return false;
    }
  return true;
}

// x + y in p  iff  x, y in p;  xy in p  iff  x in p or y in p
inline bool brute_is_lpoint(const Algebra& alg, ElemSet p) {
  const int n = alg.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool px = p.contains(x), py = p.contains(y);
      if (p.intersects(alg.plus.at(x, y)) != (px && py)) return false;
      if (p.intersects(alg.times.at(x, y)) != (px || py)) return false;
    }
  return true;
}

inline std::vector<ElemSet> brute_points(const Algebra& alg, bool proper) {
  std::vector<ElemSet> out;
  for (std::uint64_t m = 0; m < (1ull << alg.size()); ++m) {
    ElemSet p{m};
    if (proper && (!p.contains(*alg.carrier.xi0) || p.contains(*alg.carrier.xi1))) continue;
    if (brute_is_point(alg, p)) out.push_back(p);
  }
  return out;
}

inline std::vector<ElemSet> brute_lpoints(const Algebra& alg, bool proper) {
  std::vector<ElemSet> out;
  for (std::uint64_t m = 0; m < (1ull << alg.size()); ++m) {
    ElemSet p{m};
    if (proper && (!p.contains(*alg.carrier.xi0) || p.contains(*alg.carrier.xi1))) continue;
    if (brute_is_lpoint(alg, p)) out.push_back(p);
  }
  return out;
}

// nonempty, down-closed, join-closed, missing the top, meet-prime
inline std::vector<ElemSet> brute_lattice_prime_ideals(const FiniteDistLattice& l) {
  std::vector<ElemSet> out;
  for (std::uint64_t m = 1; m < (1ull << l.size); ++m) {
    ElemSet p{m};
    if (p.contains(l.top)) continue;
    bool ok = true;
    for (int a = 0; ok && a < l.size; ++a)
      for (int b = 0; ok && b < l.size; ++b) {
        if (p.contains(a) && l.leq(b, a) && !p.contains(b)) ok = false;
        if (p.contains(a) && p.contains(b) && !p.contains(l.join(a, b))) ok = false;
        if (p.contains(l.meet(a, b)) && !p.contains(a) && !p.contains(b)) ok = false;
      }
    if (ok) out.push_back(p);
  }
  return out;
}

}  // namespace abspec::testing
