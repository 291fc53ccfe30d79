#pragma once

#include <stdexcept>
#include <string>

namespace abspec {

/// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad indices, sets that fail a documented precondition.
struct input_error : error {
  using error::error;
};

/// Input file rejected; carries 1-based position when known.
struct parse_error : error {
  int line = 0;
  int column = 0;
  parse_error(const std::string& msg, int line_, int column_ = 0)
      : error(msg), line(line_), column(column_) {}
};

/// A computation would exceed a documented size cap.
struct capacity_error : error {
  using error::error;
};

/// A postcondition that should be unreachable failed; indicates a broken invariant.
struct internal_error : error {
  using error::error;
};

/// Size caps for the exhaustive searches. Override knowingly; the caps exist
/// because several operations enumerate up to 2^n subsets.
struct Limits {
  int carrier_cap = 24;  // subset search over carrier elements
  int point_cap = 16;    // spectrum point count
  int enum_cap = 20;     // filter/ideal enumeration
  int sep_cap = 10;      // check_sep pair loop
  int lattice_cap = 64;  // lattice element count for prime-ideal masks
};

}  // namespace abspec
