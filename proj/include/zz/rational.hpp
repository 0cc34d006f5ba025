#pragma once

#include <gmpxx.h>
#include <string>
#include <cstdint>

namespace zz {

// Exact rational scalar used everywhere. No floating point in this library.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

} // namespace zz
