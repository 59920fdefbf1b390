#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbitcone {

/// Exact rational scalar. All convex-geometry kernels compute with these;
/// floating point only enters in explicitly documented numeric operations.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q", "p", or a plain decimal string ("-1.25") exactly.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational q(s);
    if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rational q(s);
    q.canonicalize();
    return q;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  std::size_t frac_len = s.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("parse_rational: malformed '" + s + "'");
  Rational num(digits);
  Rational den(1);
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  Rational q = num / den;
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) {
  return q.get_str();
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// Nearest rational with denominator <= max_den (continued fractions).
/// Used to lift numeric data into the exact kernels; callers state their
/// tolerance expectations at the call site.
inline Rational rationalize(double x, unsigned long max_den = 1u << 20) {
  if (!std::isfinite(x)) throw std::invalid_argument("rationalize: non-finite input");
  bool neg = x < 0;
  double a = neg ? -x : x;
  // continued fraction convergents p/q
  unsigned long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = a;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 9e18) break;
    auto ai = static_cast<unsigned long>(fl);
    if (q1 != 0 && ai > (max_den - q0) / q1) break;  // next q would overflow the bound
    unsigned long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  Rational q(static_cast<long>(p1), static_cast<long>(q1 == 0 ? 1 : q1));
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

}  // namespace orbitcone
