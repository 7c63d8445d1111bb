#pragma once

#include <stdexcept>
#include <string>

namespace gdkit {

enum class Errc {
  parts_mismatch,
  index_out_of_range,
  equal_indices,
  negative_result,
  too_large,
  precondition_violated,
  not_comparable,
  not_prime,
  infeasible,
  window_too_small,
  cache_corrupt,
  parse_error,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::parts_mismatch: return "PartsMismatch";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::equal_indices: return "EqualIndices";
    case Errc::negative_result: return "NegativeResult";
    case Errc::too_large: return "TooLarge";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::not_comparable: return "NotComparable";
    case Errc::not_prime: return "NotPrime";
    case Errc::infeasible: return "Infeasible";
    case Errc::window_too_small: return "WindowTooSmall";
    case Errc::cache_corrupt: return "CacheCorrupt";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gdkit
