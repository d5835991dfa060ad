#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace allot {

/// Exact rational number. GMP keeps every value in canonical reduced form.
using Rat = mpq_class;

/// Raised for malformed textual input (bad rationals, bad economy files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a value is outside the domain an operation accepts.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p/q" or an integer; decimal notation is rejected.
Rat parse_rat(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rat& value);

double to_double(const Rat& value);

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat abs_diff(const Rat& a, const Rat& b) { return a < b ? Rat(b - a) : Rat(a - b); }

}  // namespace allot
