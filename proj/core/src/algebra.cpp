#include "abspec/algebra.hpp"

#include <set>

namespace abspec {

void Carrier::validate() const {
  if (size < 1) throw input_error("carrier must have at least one element");
  if (static_cast<int>(names.size()) != size)
    throw input_error("carrier has " + std::to_string(size) + " elements but " +
                      std::to_string(names.size()) + " names");
  std::set<std::string> seen;
  for (const auto& nm : names) {
    if (nm.empty()) throw input_error("element names must be nonempty");
    if (!seen.insert(nm).second) throw input_error("duplicate element name: " + nm);
  }
  auto in_range = [&](std::optional<int> p) { return !p || (*p >= 0 && *p < size); };
  if (!in_range(xi0) || !in_range(xi1))
    throw input_error("designated point out of range");
  if (xi0 && xi1 && *xi0 == *xi1)
    throw input_error("designated points must be distinct");
}

int Carrier::index_of(const std::string& name) const {
  for (int i = 0; i < size; ++i)
    if (names[i] == name) return i;
  return -1;
}

Carrier make_carrier(int size) {
  Carrier c;
  c.size = size;
  c.names.reserve(size);
  for (int i = 0; i < size; ++i) c.names.push_back(std::to_string(i));
  return c;
}

bool MultiOp::single_valued() const {
  for (const auto& s : table)
    if (s.count() != 1) return false;
  return true;
}

void Algebra::validate() const {
  carrier.validate();
  if (carrier.size > 64) throw capacity_error("carrier exceeds 64 elements");
  auto check_op = [&](const MultiOp& op, const char* which) {
    if (op.n != carrier.size ||
        op.table.size() != static_cast<size_t>(carrier.size) * carrier.size)
      throw input_error(std::string(which) + " table does not match the carrier");
    ElemSet u = universe();
    for (const auto& s : op.table)
      if (!s.subset_of(u))
        throw input_error(std::string(which) + " entry leaves the carrier");
  };
  check_op(times, "times");
  check_op(plus, "plus");
}

ElemSet op_extend(const MultiOp& op, ElemSet a, ElemSet b) {
  ElemSet out;
  for_each(a, [&](int x) {
    for_each(b, [&](int y) { out = out | op.at(x, y); });
  });
  return out;
}

ElemSet divide(const Algebra& alg, ElemSet a, ElemSet b) {
  ElemSet out;
  for (int x = 0; x < alg.size(); ++x) {
    bool hit = false;
    for_each(b, [&](int bb) {
      if (!hit && alg.times.at(bb, x).intersects(a)) hit = true;
    });
    if (hit) out.add(x);
  }
  return out;
}

ElemSet subtract(const Algebra& alg, ElemSet a, ElemSet b) {
  ElemSet out;
  for (int x = 0; x < alg.size(); ++x) {
    bool hit = false;
    for_each(b, [&](int bb) {
      if (!hit && alg.plus.at(bb, x).intersects(a)) hit = true;
    });
    if (hit) out.add(x);
  }
  return out;
}

ElemSet power_multiple(const Algebra& alg, ElemSet a, int k, OpKind kind) {
  if (k < 1) throw input_error("power requires k >= 1");
  const MultiOp& op = kind == OpKind::times ? alg.times : alg.plus;
  ElemSet acc = a;
  for (int i = 1; i < k; ++i) acc = op_extend(op, acc, a);
  return acc;
}

ElemSet apply_op(const Algebra& alg, DerivedOp op, ElemSet a, ElemSet b) {
  switch (op) {
    case DerivedOp::times: return op_extend(alg.times, a, b);
    case DerivedOp::plus: return op_extend(alg.plus, a, b);
    case DerivedOp::divide: return divide(alg, a, b);
    case DerivedOp::subtract: return subtract(alg, a, b);
  }
  throw internal_error("unknown derived op");
}

}  // namespace abspec
