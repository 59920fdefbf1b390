#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <vector>

#include "orbitcone/rational.hpp"

namespace orbitcone {

/// Vector with exact rational coordinates. Doubles both as a point of E
/// and as a linear functional on E (coordinates against the fixed basis).
using QVec = std::vector<Rational>;

inline QVec qvec(std::initializer_list<long> xs) {
  QVec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline QVec zero_vec(std::size_t n) { return QVec(n, Rational(0)); }

inline QVec unit_vec(std::size_t n, std::size_t i) {
  QVec v = zero_vec(n);
  v[i] = 1;
  return v;
}

inline Rational dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec add(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  QVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline QVec sub(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  QVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline QVec scale(const Rational& t, const QVec& a) {
  QVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = t * a[i];
  return c;
}

inline QVec negate(const QVec& a) { return scale(Rational(-1), a); }

inline bool is_zero(const QVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

/// Canonical representative of the ray through v: integral, coprime entries,
/// first nonzero entry positive sign preserved. Identical rays compare equal.
inline QVec primitive(const QVec& v) {
  mpz_class lcm_den(1);
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<mpz_class> ints(v.size());
  mpz_class g(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  QVec out(v.size(), Rational(0));
  if (g == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g);
  return out;
}

/// Strict lexicographic order; usable as a std::set/map comparator.
inline bool lex_less(const QVec& a, const QVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

inline std::vector<double> to_doubles(const QVec& v) {
  std::vector<double> d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d[i] = to_double(v[i]);
  return d;
}

inline QVec rationalize_vec(const std::vector<double>& v, unsigned long max_den = 1u << 20) {
  QVec q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = rationalize(v[i], max_den);
  return q;
}

inline std::ostream& operator<<(std::ostream& os, const QVec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  return os << ')';
}

}  // namespace orbitcone
