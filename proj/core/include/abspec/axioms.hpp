#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abspec/algebra.hpp"
#include "abspec/report.hpp"

namespace abspec {

struct AxiomWitness {
  std::string axiom;        // "i", "i'", "ii", "ii'", "iii"
  std::vector<int> elems;   // offending element tuple
};

struct AxiomReport {
  bool pass = true;
  std::optional<AxiomWitness> violation;
};

/// Checks commutativity, associativity (element form with set extension) of
/// both operations, and the compatibility axiom
///   a in b+x and c in dx  imply  (ad) and (b+c) intersect,
/// reporting the first violation found in scan order.
AxiomReport check_preseparative(const Algebra& alg);

bool is_preseparative(const Algebra& alg);

/// Verifies the residuation laws and the derived-operation identities over all
/// singletons plus sampled (or, for carriers of at most 4 elements, all)
/// subset tuples. The two residuation laws and the iterated-quotient laws need
/// no axioms; the remaining identities hold exactly for preseparative tables.
CheckReport check_calculus(const Algebra& alg, std::uint64_t seed = 0, int samples = 200);

}  // namespace abspec
