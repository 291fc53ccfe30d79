#pragma once

#include <cstdint>
#include <vector>

#include "abspec/algebra.hpp"
#include "abspec/errors.hpp"

namespace abspec {

enum class SetKind { filter, ideal };

/// F.F subset of F.
bool is_filter(const Algebra& alg, ElemSet a);

/// I+I subset of I.
bool is_ideal(const Algebra& alg, ElemSet a);

/// Filter (ideal) whose complement is an ideal (filter).
bool is_prime(const Algebra& alg, ElemSet a, SetKind kind);

/// Least filter containing A. Fixpoint of S <- S u S.S; after k rounds S holds
/// exactly the powers A^1 u ... u A^(2^k), since products of powers compose
/// additively under the extension, so the limit is the union of all powers.
ElemSet mu(const Algebra& alg, ElemSet a);

/// Least ideal containing A, dually.
ElemSet alpha(const Algebra& alg, ElemSet a);

ElemSet closure(const Algebra& alg, ElemSet a, SetKind kind);

struct Residuals {
  ElemSet f_minus_i;
  ElemSet i_over_f;
};

/// F-I and I/F for a filter F and ideal I. The outputs are a filter and an
/// ideal again; that is re-verified and a failure raises internal_error.
Residuals residuals(const Algebra& alg, ElemSet f, ElemSet i);

/// Precomputed singleton closures and the carrier preorder
///   x <= y  iff  mu(x) meets alpha(y).
class ClosureCache {
 public:
  explicit ClosureCache(Algebra alg);

  const Algebra& algebra() const { return alg_; }
  ElemSet mu_single(int x) const { return mu_[x]; }
  ElemSet alpha_single(int x) const { return alpha_[x]; }
  bool leq(int x, int y) const { return leq_rows_[x].contains(y); }
  ElemSet above(int x) const { return leq_rows_[x]; }  // {y : x <= y}

 private:
  Algebra alg_;
  std::vector<ElemSet> mu_;
  std::vector<ElemSet> alpha_;
  std::vector<ElemSet> leq_rows_;
};

struct Sep0Result {
  bool pass = true;
  int a = -1, b = -1, c = -1;  // a<=b, b<=c, not a<=c when pass is false
};

/// Transitivity of the carrier preorder.
Sep0Result check_sep0(const ClosureCache& cache);

/// All filters (ideals) of the algebra, ascending by bitmask. Enumerated by a
/// pruned in/out search, which agrees with the full 2^n subset scan.
std::vector<ElemSet> enumerate_filters(const Algebra& alg, const Limits& lim = {});
std::vector<ElemSet> enumerate_ideals(const Algebra& alg, const Limits& lim = {});

}  // namespace abspec
