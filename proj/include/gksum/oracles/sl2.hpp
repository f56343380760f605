#pragma once

// Rank-1 coset counts in SL2(F_q((pi))): K = SL2(O), U upper and U^- lower unipotent.

#include <map>
#include <stdexcept>
#include <vector>

#include "../rational.hpp"
#include "laurent_ff.hpp"

namespace gksum::oracles {

struct SL2Mat {
  LaurentFF a, b, c, d;

  LaurentFF det() const { return a * d - b * c; }
  bool is_integral() const { return a.is_integral() && b.is_integral() && c.is_integral() && d.is_integral(); }
  int prec() const { return std::min({a.prec(), b.prec(), c.prec(), d.prec()}); }

  friend SL2Mat operator*(const SL2Mat& x, const SL2Mat& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const SL2Mat& x, const SL2Mat& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

inline SL2Mat lower_unipotent(const LaurentFF& s) {
  const int q = s.q(), p = s.prec();
  return {LaurentFF::monomial(q, 0, 1, p), LaurentFF(q, p), s, LaurentFF::monomial(q, 0, 1, p)};
}

/// u^-(s) = k * pi^{mu} * x with k in K and x in U; mu = coeff * alpha^v.
struct IwasawaWitness {
  int coeff = 0;
  SL2Mat k, h, x;
};

inline IwasawaWitness sl2_iwasawa(const LaurentFF& s) {
  const int q = s.q(), p = s.prec();
  auto one = LaurentFF::monomial(q, 0, 1, p);
  auto zero = LaurentFF(q, p);
  if (s.is_zero() || s.is_integral()) return {0, lower_unipotent(s), {one, zero, zero, one}, {one, zero, zero, one}};
  const int n = -s.valuation();
  const auto eps = LaurentFF::monomial(q, n, 1, p + 2 * n) * s;
  const auto eps_inv = eps.inverse();
  SL2Mat k{LaurentFF::monomial(q, n, 1, p + 2 * n), -eps_inv, eps, LaurentFF(q, p + 2 * n)};
  SL2Mat h{LaurentFF::monomial(q, -n, 1, p + 2 * n), LaurentFF(q, p + 2 * n), LaurentFF(q, p + 2 * n),
           LaurentFF::monomial(q, n, 1, p + 2 * n)};
  SL2Mat x{LaurentFF::monomial(q, 0, 1, p + 2 * n), s.inverse(), LaurentFF(q, p + 2 * n),
           LaurentFF::monomial(q, 0, 1, p + 2 * n)};
  return {-n, k, h, x};
}

/// k is integral with det 1, and k h x reproduces u^-(s) at the precision the product carries.
inline bool verify_witness(const LaurentFF& s, const IwasawaWitness& w) {
  if (!w.k.is_integral()) return false;
  const auto one = LaurentFF::monomial(s.q(), 0, 1, w.k.prec());
  if (!(w.k.det() == one) || w.k.det().prec() <= 0) return false;
  const SL2Mat prod = w.k * w.h * w.x;
  return prod.prec() > 0 && prod == lower_unipotent(s);
}

struct SL2CosetCount {
  long long count = 0;
  Rational normalized;
  /// coefficient of alpha^v in mu -> number of representatives.
  std::map<int, long long> histogram;
  bool witnesses_ok = true;
};

/**
 * Enumerates s in pi^{-n} O / O, records the coweight of u^-(s) for each class and
 * counts those landing in K pi^{-n alpha^v} U.
 */
inline SL2CosetCount sl2_gk_coefficient(int q, int n, int prec = -1) {
  if (!is_prime(q)) throw std::invalid_argument("sl2_gk_coefficient: q must be prime");
  if (n < 1) throw std::invalid_argument("sl2_gk_coefficient: n must be positive");
  if (prec < 0) prec = n + 4;
  if (prec <= n) throw std::invalid_argument("sl2_gk_coefficient: precision must exceed n");
  SL2CosetCount out;
  std::vector<int> digits(n, 0);
  for (;;) {
    const auto s = LaurentFF::from_digits(q, -n, digits, prec);
    const auto w = sl2_iwasawa(s);
    if (!verify_witness(s, w)) out.witnesses_ok = false;
    ++out.histogram[w.coeff];
    if (w.coeff == -n) ++out.count;
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  out.normalized = Rational(static_cast<long>(out.count)) / rational_power(Rational(q), n);
  return out;
}

}  // namespace gksum::oracles
