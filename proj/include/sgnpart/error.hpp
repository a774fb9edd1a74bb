#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sgnpart {

// Failure categories raised by validation, parsing, the number-theoretic
// operations and the balls-into-urns bijection.
enum class errc {
  // signed partition validation
  overlapping_blocks,
  missing_elements,
  illegal_zero_block,
  multiple_self_mirrored,
  empty_block,
  value_out_of_range,
  // growth strings / text formats
  malformed_rgs,
  syntax_error,
  // triangles
  out_of_range,
  // bijection
  even_urn_count,
  too_many_pairs,
  invalid_choice,
  no_free_urn,
  // harness
  guard_exceeded,
  internal_inconsistency,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::overlapping_blocks:     return "OverlappingBlocks";
    case errc::missing_elements:       return "MissingElements";
    case errc::illegal_zero_block:     return "IllegalZeroBlock";
    case errc::multiple_self_mirrored: return "MultipleSelfMirrored";
    case errc::empty_block:            return "EmptyBlock";
    case errc::value_out_of_range:     return "ValueOutOfRange";
    case errc::malformed_rgs:          return "MalformedRGS";
    case errc::syntax_error:           return "SyntaxError";
    case errc::out_of_range:           return "OutOfRange";
    case errc::even_urn_count:         return "EvenM";
    case errc::too_many_pairs:         return "TooManyPairs";
    case errc::invalid_choice:         return "InvalidChoice";
    case errc::no_free_urn:            return "NoFreeUrn";
    case errc::guard_exceeded:         return "GuardExceeded";
    case errc::internal_inconsistency: return "InternalInconsistency";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  error(errc code, const std::string& what, std::size_t position = npos)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        position_(position) {}

  errc code() const noexcept { return code_; }

  // Byte offset into the offending input for syntax errors, npos otherwise.
  std::size_t position() const noexcept { return position_; }

 private:
  errc code_;
  std::size_t position_;
};

[[noreturn]] inline void fail(errc code, const std::string& what,
                              std::size_t position = error::npos) {
  throw error(code, what, position);
}

}  // namespace sgnpart
