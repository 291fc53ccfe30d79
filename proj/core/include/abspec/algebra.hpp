#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abspec/elem_set.hpp"
#include "abspec/errors.hpp"

namespace abspec {

/// The underlying set, element display names, and optional designated points.
struct Carrier {
  int size = 0;
  std::vector<std::string> names;
  std::optional<int> xi0;  // designated bottom-like point
  std::optional<int> xi1;  // designated top-like point

  /// Throws input_error unless size >= 1, names are distinct and match size,
  /// and xi0 != xi1 when both are present.
  void validate() const;

  int index_of(const std::string& name) const;  // -1 when absent
};

Carrier make_carrier(int size);  // names default to "0", "1", ...

/// One multivalued binary operation as a full n*n table of subsets.
struct MultiOp {
  int n = 0;
  std::vector<ElemSet> table;  // row-major, table[a*n+b]

  MultiOp() = default;
  explicit MultiOp(int size) : n(size), table(static_cast<size_t>(size) * size) {}

  ElemSet at(int a, int b) const { return table[static_cast<size_t>(a) * n + b]; }
  void set(int a, int b, ElemSet s) { table[static_cast<size_t>(a) * n + b] = s; }

  bool single_valued() const;  // every entry a singleton
};

struct Algebra {
  Carrier carrier;
  MultiOp times;
  MultiOp plus;

  int size() const { return carrier.size; }
  ElemSet universe() const { return ElemSet::full(carrier.size); }

  /// Structural validation: table shapes, entry ranges, carrier invariants.
  void validate() const;
};

enum class OpKind { times, plus };

/// Set extension A.B = union of op(a,b) over a in A, b in B.
ElemSet op_extend(const MultiOp& op, ElemSet a, ElemSet b);

/// A/B = {x : some a in A, b in B with a in b.x}.
ElemSet divide(const Algebra& alg, ElemSet a, ElemSet b);

/// A-B = {x : some a in A, b in B with a in b+x}.
ElemSet subtract(const Algebra& alg, ElemSet a, ElemSet b);

/// A^k (kind=times) or kA (kind=plus), k >= 1.
ElemSet power_multiple(const Algebra& alg, ElemSet a, int k, OpKind kind);

/// The four derived binary operations of the calculus.
enum class DerivedOp { times, plus, divide, subtract };

ElemSet apply_op(const Algebra& alg, DerivedOp op, ElemSet a, ElemSet b);

}  // namespace abspec
