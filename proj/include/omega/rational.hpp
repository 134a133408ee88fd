#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace omega {

// Exact rational scalar. mpq_class keeps values canonical: positive
// denominator, gcd(num, den) = 1, zero stored as 0/1.
using Rational = mpq_class;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct dimension_error : error {
  using error::error;
};

struct schema_error : error {
  using error::error;
};

struct singular_error : error {
  using error::error;
};

struct resource_error : error {
  using error::error;
};

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p" or "p/q" with optional sign; rejects anything else.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw schema_error("empty rational literal");
  for (char c : text) {
    if (c != '-' && c != '+' && c != '/' && (c < '0' || c > '9'))
      throw schema_error("bad rational literal: " + text);
  }
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw schema_error("bad rational literal: " + text);
  if (q.get_den() == 0) throw schema_error("zero denominator: " + text);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) {
  return q.get_str();
}

inline double to_double(const Rational& q) {
  return q.get_d();
}

}  // namespace omega
