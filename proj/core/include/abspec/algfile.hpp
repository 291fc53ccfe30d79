#pragma once

#include <string>

#include "abspec/algebra.hpp"

namespace abspec {

/// Parse the line-oriented algebra format.
///
///   carrier 3
///   names x y z          (optional)
///   xi0 x                (optional)
///   xi1 z                (optional)
///   times x y = { x z }
///   plus x x = { }
///   # comment
///
/// Unlisted entries are empty. Entries are stored exactly as written; the
/// format is not symmetrized, so both orders must be listed when they are
/// meant to agree (the axiom checker reports the mismatch otherwise). A file
/// may
/// instead hold a single builder directive: "ring 6", "lattice chain 4",
/// "lattice powerset 3", "lattice divisors 12", or "semigroup FILE" where
/// FILE holds the carrier size followed by the n*n table, row-major,
/// resolved relative to `dir`.
Algebra parse_algebra(const std::string& text, const std::string& dir = ".");

Algebra load_algebra_file(const std::string& path);

/// Canonical form: carrier, names, designated points, then every nonempty
/// times entry row-major, then plus. Parsing the output reproduces the
/// algebra exactly; builder directives are expanded.
std::string serialize_algebra(const Algebra& alg);

}  // namespace abspec
