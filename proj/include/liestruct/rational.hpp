#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace liestruct {

// Exact scalar of the library. mpq_class keeps values in canonical reduced
// form (gcd(num, den) = 1, den > 0) under arithmetic; constructors that take
// raw numerator/denominator go through rat_make which canonicalizes.
using Rat = mpq_class;

struct BadRational : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat rat_make(long num, long den = 1) {
  if (den == 0) throw BadRational("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p", "p/q". Whitespace is not accepted.
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw BadRational("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0) throw BadRational("bad rational literal: " + s);
  if (r.get_den() == 0) throw BadRational("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline double rat_to_double(const Rat& r) { return r.get_d(); }

inline bool rat_is_zero(const Rat& r) { return sgn(r) == 0; }

// Best rational approximation to x with denominator <= max_den, via the
// Stern-Brocot / continued-fraction walk (same result as the classical
// limit_denominator). Returns the closest of the final bounds.
inline Rat rat_limit_denominator(double x, unsigned long max_den) {
  if (!std::isfinite(x)) throw BadRational("non-finite value");
  if (max_den < 1) max_den = 1;
  bool neg = x < 0;
  double v = neg ? -x : x;
  // continued fraction expansion of v
  unsigned long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 9.2e18) break;
    unsigned long a = static_cast<unsigned long>(fl);
    if (q1 != 0 && a > (max_den - q0) / q1) {
      // take the largest admissible semiconvergent
      unsigned long k = (max_den - q0) / q1;
      unsigned long p2 = p0 + k * p1, q2 = q0 + k * q1;
      // choose between p1/q1 and the semiconvergent p2/q2
      double d1 = q1 ? std::fabs(v - double(p1) / double(q1)) : 1e300;
      double d2 = std::fabs(v - double(p2) / double(q2));
      unsigned long bp = (d2 <= d1) ? p2 : p1, bq = (d2 <= d1) ? q2 : q1;
      Rat r = rat_make(static_cast<long>(bp), static_cast<long>(bq));
      return neg ? Rat(-r) : r;
    }
    unsigned long p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-18) break;
    frac = 1.0 / rem;
  }
  Rat r = rat_make(static_cast<long>(p1), static_cast<long>(q1 ? q1 : 1));
  return neg ? Rat(-r) : r;
}

// Continued-fraction rationalization with an acceptance guard. Returns the
// best convergent p/q with q <= max_den provided |x - p/q| <= 1/(2 q^2 max_den);
// otherwise nothing. The guard is strict enough that approximations of
// irrational values (e.g. sqrt(2)/2 at max_den 100) are rejected while
// solver outputs accurate to ~1e-10 always pass for q <= max_den.
inline std::optional<Rat> rationalize(double x, unsigned long max_den = 1000) {
  if (!std::isfinite(x)) return std::nullopt;
  Rat cand = rat_limit_denominator(x, max_den);
  double q = cand.get_den().get_d();
  double err = std::fabs(x - cand.get_d());
  if (err <= 1.0 / (2.0 * q * q * double(max_den))) return cand;
  return std::nullopt;
}

// Lossless exact -> double conversion; throws if the value is not exactly
// representable (used where silent precision loss must not happen).
inline double rat_to_double_exact(const Rat& r) {
  double d = r.get_d();
  if (Rat(d) != r) throw BadRational("rational not exactly representable as double: " + rat_str(r));
  return d;
}

}  // namespace liestruct
