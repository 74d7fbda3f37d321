#pragma once

#include <stdexcept>
#include <string>

namespace ore {

enum class Errc {
  parse_error,
  ring_mismatch,
  zero_input,
  not_in_set,
  unsupported,
  non_split,
  missing_witness,
  budget_exhausted,
  resource_limit,
  bad_descriptor,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// Three-valued answer for budgeted or undecidable queries.  `unknown` is a
/// first-class result and must never be collapsed into `no`.
enum class Tri { yes, no, unknown };

inline Tri tri_and(Tri a, Tri b) {
  if (a == Tri::no || b == Tri::no) return Tri::no;
  if (a == Tri::unknown || b == Tri::unknown) return Tri::unknown;
  return Tri::yes;
}

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "unknown";
  }
}

}  // namespace ore
