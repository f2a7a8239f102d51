#pragma once

#include <stdexcept>
#include <string>

namespace skewrank {

// Failure categories surfaced across the library boundary.  The C API and
// CLI map these to status codes by name, so values are append-only.
enum class errc {
  parse_error,
  not_decreasing,
  not_contained,
  not_monotone,
  collision_ab,
  collision_shifted,
  anti_diagonal_violation,
  insufficient_y_sequence,
  repeated_x,
  not_square,
  not_irreducible,
  has_zero_entries,
  search_bound_exceeded,
  reconstruction_invalid,
  unknown_suite,
  theorem_violation,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::not_decreasing: return "NotDecreasing";
    case errc::not_contained: return "NotContained";
    case errc::not_monotone: return "NotMonotone";
    case errc::collision_ab: return "CollisionAB";
    case errc::collision_shifted: return "CollisionShifted";
    case errc::anti_diagonal_violation: return "AntiDiagonalViolation";
    case errc::insufficient_y_sequence: return "InsufficientYSequence";
    case errc::repeated_x: return "RepeatedX";
    case errc::not_square: return "NotSquare";
    case errc::not_irreducible: return "NotIrreducible";
    case errc::has_zero_entries: return "HasZeroEntries";
    case errc::search_bound_exceeded: return "SearchBoundExceeded";
    case errc::reconstruction_invalid: return "ReconstructionInvalid";
    case errc::unknown_suite: return "UnknownSuite";
    case errc::theorem_violation: return "TheoremViolation";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace skewrank
