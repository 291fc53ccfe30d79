#include "abspec/random_gen.hpp"

#include <algorithm>

#include "abspec/axioms.hpp"
#include "abspec/errors.hpp"

namespace abspec {

MultiOp random_op(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 99);
  std::uniform_int_distribution<int> elem(0, n - 1);
  MultiOp op(n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      int k = kind(rng);
      ElemSet v;
      if (k >= 40) v.add(elem(rng));   // 60%: at least one element
      if (k >= 85) v.add(elem(rng));   // 15%: try for a second
      op.set(a, b, v);
      op.set(b, a, v);
    }
  return op;
}

Algebra random_algebra(int n, std::mt19937_64& rng) {
  if (n < 1 || n > 24) throw input_error("random algebras support 1 to 24 elements");
  Algebra alg;
  alg.carrier = make_carrier(n);
  alg.times = random_op(n, rng);
  alg.plus = random_op(n, rng);
  return alg;
}

namespace {

bool associative(const MultiOp& op, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        ElemSet lhs, rhs;
        for_each(op.at(b, c), [&](int y) { lhs |= op.at(a, y); });
        for_each(op.at(a, b), [&](int x) { rhs |= op.at(x, c); });
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace

Algebra random_preseparative(int n, std::mt19937_64& rng) {
  if (n < 1 || n > 4)
    throw input_error("rejection sampling is practical for 1 to 4 elements only");
  Algebra alg;
  alg.carrier = make_carrier(n);
  for (;;) {
    do {
      alg.times = random_op(n, rng);
    } while (!associative(alg.times, n));
    do {
      alg.plus = random_op(n, rng);
    } while (!associative(alg.plus, n));
    if (is_preseparative(alg)) return alg;
  }
}

FiniteTopology random_t0_topology(int max_points, std::mt19937_64& rng) {
  if (max_points < 1 || max_points > 16)
    throw input_error("random topologies support 1 to 16 points");
  std::uniform_int_distribution<std::uint64_t> mask(
      0, ElemSet::full(max_points).bits);
  std::uniform_int_distribution<int> count(2, 4);
  std::vector<ElemSet> subbase;
  for (int i = count(rng); i > 0; --i) subbase.push_back(ElemSet{mask(rng)});
  FiniteTopology t = generate_topology(max_points, subbase);

  // quotient topologically indistinguishable points, keeping the smallest
  // representative of each class
  std::vector<int> repr(max_points, -1);
  std::vector<int> keep;
  for (int a = 0; a < max_points; ++a) {
    for (int b : keep) {
      bool same = true;
      for (std::uint64_t u : t.opens)
        if (ElemSet{u}.contains(a) != ElemSet{u}.contains(b)) {
          same = false;
          break;
        }
      if (same) {
        repr[a] = b;
        break;
      }
    }
    if (repr[a] < 0) {
      repr[a] = a;
      keep.push_back(a);
    }
  }
  std::vector<int> index(max_points, -1);
  for (size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  FiniteTopology out;
  out.point_count = static_cast<int>(keep.size());
  for (std::uint64_t u : t.opens) {
    ElemSet v;
    for (int a : keep)
      if (ElemSet{u}.contains(a)) v.add(index[a]);
    out.opens.push_back(v.bits);
  }
  std::sort(out.opens.begin(), out.opens.end());
  out.opens.erase(std::unique(out.opens.begin(), out.opens.end()), out.opens.end());
  return out;
}

}  // namespace abspec
