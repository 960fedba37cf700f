#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gabor {

// Exact rational scalar. GMP keeps every Haar weight, volume, character
// phase and polygon coordinate free of rounding.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p/q", "p", and optional surrounding whitespace.
inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("unparseable rational: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("rational with zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline double rat_to_double(const Rat& q) { return q.get_d(); }

// Largest integer <= q.
inline long rat_floor(const Rat& q) {
  mpz_class z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z.get_si();
}

// Smallest integer >= q.
inline long rat_ceil(const Rat& q) {
  mpz_class z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return z.get_si();
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

}  // namespace gabor
