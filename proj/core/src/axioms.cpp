#include "abspec/axioms.hpp"

#include <array>
#include <random>

namespace abspec {

namespace {

AxiomReport fail(std::string axiom, std::vector<int> elems) {
  AxiomReport r;
  r.pass = false;
  r.violation = AxiomWitness{std::move(axiom), std::move(elems)};
  return r;
}

}  // namespace

AxiomReport check_preseparative(const Algebra& alg) {
  const int n = alg.size();
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      if (alg.times.at(a, b) != alg.times.at(b, a)) return fail("i", {a, b});
      if (alg.plus.at(a, b) != alg.plus.at(b, a)) return fail("i'", {a, b});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        ElemSet sa = ElemSet::single(a), sc = ElemSet::single(c);
        if (op_extend(alg.times, sa, alg.times.at(b, c)) !=
            op_extend(alg.times, alg.times.at(a, b), sc))
          return fail("ii", {a, b, c});
        if (op_extend(alg.plus, sa, alg.plus.at(b, c)) !=
            op_extend(alg.plus, alg.plus.at(a, b), sc))
          return fail("ii'", {a, b, c});
      }
  for (int b = 0; b < n; ++b)
    for (int x = 0; x < n; ++x)
      for (int d = 0; d < n; ++d) {
        ElemSet lhs = alg.plus.at(b, x);
        ElemSet rhs = alg.times.at(d, x);
        bool bad = false;
        int wa = -1, wc = -1;
        for_each(lhs, [&](int a) {
          if (bad) return;
          for_each(rhs, [&](int c) {
            if (bad) return;
            if (!alg.times.at(a, d).intersects(alg.plus.at(b, c))) {
              bad = true;
              wa = a;
              wc = c;
            }
          });
        });
        if (bad) return fail("iii", {wa, b, wc, d, x});
      }
  return {};
}

bool is_preseparative(const Algebra& alg) { return check_preseparative(alg).pass; }

namespace {

struct Quad {
  ElemSet a, b, c, d;
};

std::string fmt(const Algebra& alg, ElemSet s) {
  std::string out = "{";
  bool first = true;
  for_each(s, [&](int x) {
    if (!first) out += ",";
    out += alg.carrier.names[x];
    first = false;
  });
  return out + "}";
}

std::string fmt_quad(const Algebra& alg, const Quad& q, int arity) {
  std::string out = "A=" + fmt(alg, q.a) + " B=" + fmt(alg, q.b) + " C=" + fmt(alg, q.c);
  if (arity == 4) out += " D=" + fmt(alg, q.d);
  return out;
}

}  // namespace

CheckReport check_calculus(const Algebra& alg, std::uint64_t seed, int samples) {
  const int n = alg.size();
  std::vector<Quad> tuples;

  if (n <= 4) {
    const std::uint64_t lim = 1ull << n;
    for (std::uint64_t a = 0; a < lim; ++a)
      for (std::uint64_t b = 0; b < lim; ++b)
        for (std::uint64_t c = 0; c < lim; ++c)
          for (std::uint64_t d = 0; d < lim; ++d)
            tuples.push_back({ElemSet{a}, ElemSet{b}, ElemSet{c}, ElemSet{d}});
  } else {
    std::mt19937_64 rng(seed);
    if (static_cast<long long>(n) * n * n * n <= 65536) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d)
              tuples.push_back({ElemSet::single(a), ElemSet::single(b),
                                ElemSet::single(c), ElemSet::single(d)});
    } else {
      std::uniform_int_distribution<int> el(0, n - 1);
      for (int i = 0; i < samples; ++i)
        tuples.push_back({ElemSet::single(el(rng)), ElemSet::single(el(rng)),
                          ElemSet::single(el(rng)), ElemSet::single(el(rng))});
    }
    ElemSet full = alg.universe();
    tuples.push_back({ElemSet{}, ElemSet{}, ElemSet{}, ElemSet{}});
    tuples.push_back({full, full, full, full});
    std::uniform_int_distribution<std::uint64_t> mask(0, full.bits);
    for (int i = 0; i < samples; ++i)
      tuples.push_back({ElemSet{mask(rng)}, ElemSet{mask(rng)}, ElemSet{mask(rng)},
                        ElemSet{mask(rng)}});
  }

  CheckReport rep;
  auto run = [&](const char* name, int arity, auto&& law) {
    for (const Quad& q : tuples) {
      std::string why = law(q);
      if (!why.empty()) {
        rep.add(name, false, fmt_quad(alg, q, arity) + " " + why);
        return;
      }
    }
    rep.add(name, true, "");
  };

  auto times = [&](ElemSet a, ElemSet b) { return op_extend(alg.times, a, b); };
  auto plus = [&](ElemSet a, ElemSet b) { return op_extend(alg.plus, a, b); };
  auto over = [&](ElemSet a, ElemSet b) { return divide(alg, a, b); };
  auto minus = [&](ElemSet a, ElemSet b) { return subtract(alg, a, b); };
  auto expect_subset = [&](ElemSet lhs, ElemSet rhs) -> std::string {
    if (lhs.subset_of(rhs)) return "";
    return "lhs=" + fmt(alg, lhs) + " rhs=" + fmt(alg, rhs);
  };
  auto expect_equal = [&](ElemSet lhs, ElemSet rhs) -> std::string {
    if (lhs == rhs) return "";
    return "lhs=" + fmt(alg, lhs) + " rhs=" + fmt(alg, rhs);
  };

  // Definitional: hold for every table, no axioms needed.
  run("residuation-quotient", 3, [&](const Quad& q) -> std::string {
    bool lhs = over(q.a, q.b).intersects(q.c);
    bool rhs = q.a.intersects(times(q.b, q.c));
    return lhs == rhs ? "" : std::string(lhs ? "lhs only" : "rhs only");
  });
  run("residuation-difference", 3, [&](const Quad& q) -> std::string {
    bool lhs = minus(q.a, q.b).intersects(q.c);
    bool rhs = q.a.intersects(plus(q.b, q.c));
    return lhs == rhs ? "" : std::string(lhs ? "lhs only" : "rhs only");
  });

  // Need associativity of the corresponding operation.
  run("iterated-quotient", 3, [&](const Quad& q) {
    return expect_equal(over(over(q.a, q.b), q.c), over(q.a, times(q.b, q.c)));
  });
  run("iterated-difference", 3, [&](const Quad& q) {
    return expect_equal(minus(minus(q.a, q.b), q.c), minus(q.a, plus(q.b, q.c)));
  });

  // Each of the following is equivalent to the compatibility axiom, so they
  // hold exactly on preseparative tables.
  run("sum-over-quotient", 3, [&](const Quad& q) -> std::string {
    if (q.a.count() != 1 || q.b.count() != 1 || q.c.count() != 1) return "";
    return expect_subset(plus(q.a, over(q.b, q.c)), over(plus(q.a, q.b), q.c));
  });
  run("product-over-difference", 3, [&](const Quad& q) -> std::string {
    if (q.a.count() != 1 || q.b.count() != 1 || q.c.count() != 1) return "";
    return expect_subset(times(q.a, minus(q.b, q.c)), minus(times(q.a, q.b), q.c));
  });
  run("sum-over-quotient-sets", 3, [&](const Quad& q) {
    return expect_subset(plus(q.a, over(q.b, q.c)), over(plus(q.a, q.b), q.c));
  });
  run("product-over-difference-sets", 3, [&](const Quad& q) {
    return expect_subset(times(q.a, minus(q.b, q.c)), minus(times(q.a, q.b), q.c));
  });
  run("quotient-sum", 4, [&](const Quad& q) {
    return expect_subset(plus(over(q.a, q.b), over(q.c, q.d)),
                         over(plus(q.a, q.c), times(q.b, q.d)));
  });
  run("difference-product", 4, [&](const Quad& q) {
    return expect_subset(times(minus(q.a, q.b), minus(q.c, q.d)),
                         minus(times(q.a, q.c), plus(q.b, q.d)));
  });
  return rep;
}

}  // namespace abspec
