#include "abspec/builders.hpp"

#include <numeric>

namespace abspec {

Algebra ring_algebra(int n) {
  if (n < 2) throw input_error("ring needs a modulus of at least 2");
  if (n > 64) throw capacity_error("ring modulus exceeds 64");
  Algebra alg;
  alg.carrier = make_carrier(n);
  alg.carrier.xi0 = 0;
  alg.carrier.xi1 = 1;
  alg.times = MultiOp(n);
  alg.plus = MultiOp(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      alg.times.set(a, b, ElemSet::single(a * b % n));
      int g = std::gcd(std::gcd(a, b), n);  // ideal generated by a and b
      ElemSet ideal;
      for (int x = 0; x < n; ++x)
        if (x % g == 0) ideal.add(x);
      alg.plus.set(a, b, ideal);
    }
  return alg;
}

namespace {

FiniteDistLattice lattice_from_leq(int n, const std::vector<ElemSet>& up) {
  // up[x] = {y : x <= y}; join/meet resolved as least upper / greatest lower
  FiniteDistLattice l;
  l.size = n;
  l.join_table.assign(static_cast<size_t>(n) * n, -1);
  l.meet_table.assign(static_cast<size_t>(n) * n, -1);
  auto leq = [&](int a, int b) { return up[a].contains(b); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int j = -1, m = -1;
      for (int c = 0; c < n; ++c) {
        if (leq(a, c) && leq(b, c) && (j < 0 || leq(c, j))) j = c;
        if (leq(c, a) && leq(c, b) && (m < 0 || leq(m, c))) m = c;
      }
      if (j < 0 || m < 0) throw input_error("order is not a lattice");
      l.join_table[static_cast<size_t>(a) * n + b] = j;
      l.meet_table[static_cast<size_t>(a) * n + b] = m;
    }
  for (int c = 0; c < n; ++c) {
    if (up[c] == ElemSet::full(n)) l.bottom = c;
    bool top = true;
    for (int a = 0; a < n && top; ++a) top = leq(a, c);
    if (top) l.top = c;
  }
  l.validate();
  return l;
}

}  // namespace

FiniteDistLattice chain_lattice(int k) {
  if (k < 1) throw input_error("chain needs at least one element");
  if (k > 64) throw capacity_error("chain length exceeds 64");
  std::vector<ElemSet> up(k);
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) up[a].add(b);
  return lattice_from_leq(k, up);
}

FiniteDistLattice powerset_lattice(int atoms) {
  if (atoms < 0 || atoms > 4) throw input_error("powerset supports 0 to 4 atoms");
  const int n = 1 << atoms;
  std::vector<ElemSet> up(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((a & b) == a) up[a].add(b);
  return lattice_from_leq(n, up);
}

FiniteDistLattice divisor_lattice(int n) {
  if (n < 1 || n > 60) throw input_error("divisor lattice supports 1 to 60");
  std::vector<int> divs;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  const int k = static_cast<int>(divs.size());
  std::vector<ElemSet> up(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (divs[b] % divs[a] == 0) up[a].add(b);
  return lattice_from_leq(k, up);
}

Algebra lattice_algebra(const FiniteDistLattice& l, bool single_valued) {
  l.validate();
  Algebra alg;
  alg.carrier = make_carrier(l.size);
  if (l.bottom != l.top) {
    alg.carrier.xi0 = l.bottom;
    alg.carrier.xi1 = l.top;
  }
  alg.times = MultiOp(l.size);
  alg.plus = MultiOp(l.size);
  for (int a = 0; a < l.size; ++a)
    for (int b = 0; b < l.size; ++b) {
      int m = l.meet(a, b), j = l.join(a, b);
      if (single_valued) {
        alg.times.set(a, b, ElemSet::single(m));
        alg.plus.set(a, b, ElemSet::single(j));
      } else {
        ElemSet upm, downj;
        for (int z = 0; z < l.size; ++z) {
          if (l.leq(m, z)) upm.add(z);
          if (l.leq(z, j)) downj.add(z);
        }
        alg.times.set(a, b, upm);
        alg.plus.set(a, b, downj);
      }
    }
  return alg;
}

namespace {

std::string letters(int i) {
  // a, b, ..., z, aa, ab, ... for chain middles
  std::string out;
  for (i += 1; i > 0; i = (i - 1) / 26)
    out.insert(out.begin(), static_cast<char>('a' + (i - 1) % 26));
  return out;
}

}  // namespace

std::vector<std::string> chain_names(int k) {
  std::vector<std::string> out;
  if (k == 1) return {"0"};
  for (int i = 0; i < k; ++i) {
    if (i == 0)
      out.push_back("0");
    else if (i == k - 1)
      out.push_back("1");
    else
      out.push_back(letters(i - 1));
  }
  return out;
}

std::vector<std::string> powerset_names(int atoms) {
  const char* atom_names = "pqrs";
  const int n = 1 << atoms;
  std::vector<std::string> out;
  for (int mask = 0; mask < n; ++mask) {
    if (mask == 0) {
      out.push_back("0");
    } else if (mask == n - 1) {
      out.push_back("1");
    } else {
      std::string nm;
      for (int i = 0; i < atoms; ++i)
        if (mask & (1 << i)) nm += atom_names[i];
      out.push_back(nm);
    }
  }
  return out;
}

Algebra semigroup_algebra(const std::vector<std::vector<int>>& product) {
  const int n = static_cast<int>(product.size());
  if (n < 1) throw input_error("semigroup needs at least one element");
  if (n > 64) throw capacity_error("semigroup exceeds 64 elements");
  for (const auto& row : product) {
    if (static_cast<int>(row.size()) != n)
      throw input_error("semigroup table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw input_error("semigroup entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (product[a][b] != product[b][a])
        throw input_error("semigroup table is not commutative");
      for (int c = 0; c < n; ++c)
        if (product[a][product[b][c]] != product[product[a][b]][c])
          throw input_error("semigroup table is not associative");
    }
  Algebra alg;
  alg.carrier = make_carrier(n);
  alg.times = MultiOp(n);
  alg.plus = MultiOp(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      alg.times.set(a, b, ElemSet::single(product[a][b]));
      alg.plus.set(a, b, ElemSet::single(product[a][b]));
    }
  return alg;
}

}  // namespace abspec
