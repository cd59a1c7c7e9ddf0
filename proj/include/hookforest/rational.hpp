#ifndef HOOKFOREST_RATIONAL_HPP
#define HOOKFOREST_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hookforest {

// All arithmetic in this library is exact. Int/Rat are arbitrary-precision;
// Rat is kept canonical (lowest terms, positive denominator) by construction.
using Int = mpz_class;
using Rat = mpq_class;

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// gmpxx has no long long constructor; every width we use fits in long here.
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long long num, long long den = 1) {
  return make_rat(make_int(num), make_int(den));
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

// Requires an integral value; the few places that call this treat a
// non-integer as a broken internal invariant.
inline Int rat_to_int(const Rat& q) {
  if (!rat_is_integer(q)) throw error("expected integral rational, got " + q.get_str());
  return q.get_num();
}

inline std::string int_to_string(const Int& z) { return z.get_str(); }

// "p/q" with q omitted when 1; this is also the JSON coefficient format.
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

Int int_from_string(std::string_view text);
Rat rat_from_string(std::string_view text);

Int int_pow(const Int& base, unsigned long exp);

// exp may be negative (base must be nonzero then).
Rat rat_pow(const Rat& base, long exp);

}  // namespace hookforest

#endif
