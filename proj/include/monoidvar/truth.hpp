#pragma once

#include <string_view>

namespace monoidvar {

enum class Truth { False, True, Unknown };

inline std::string_view to_string(Truth t) {
  switch (t) {
    case Truth::True: return "true";
    case Truth::False: return "false";
    case Truth::Unknown: return "unknown";
  }
  return "unknown";
}

inline Truth truth_of(bool b) { return b ? Truth::True : Truth::False; }

inline Truth operator!(Truth t) {
  if (t == Truth::Unknown) return t;
  return t == Truth::True ? Truth::False : Truth::True;
}

/// Three-valued conjunction: any False wins, then any Unknown.
inline Truth conj(Truth a, Truth b) {
  if (a == Truth::False || b == Truth::False) return Truth::False;
  if (a == Truth::Unknown || b == Truth::Unknown) return Truth::Unknown;
  return Truth::True;
}

}  // namespace monoidvar
