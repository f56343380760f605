#pragma once

// Weight multiplicities of the irreducible representation of the dual group with
// highest weight lambda^v, by Freudenthal's recursion. Roots of the dual side are the
// coroots here, so weights are written as lambda^v - gamma with gamma in the coroot cone.

#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "../coroot.hpp"
#include "../linalg.hpp"
#include "../rational.hpp"
#include "../root_system.hpp"

namespace gksum::oracles {

struct WeightMultiplicityTable {
  DominantCoweight highest;
  // gamma -> multiplicity of lambda^v - gamma; zero multiplicities are not stored.
  std::map<CorootVector, long long, GradedLex> multiplicities;

  long long multiplicity(const CorootVector& gamma) const {
    auto it = multiplicities.find(gamma);
    return it == multiplicities.end() ? 0 : it->second;
  }
  long long dimension() const {
    long long d = 0;
    for (const auto& [g, m] : multiplicities) d += m;
    return d;
  }
};

namespace detail {

// d_i with d_i C_ij = d_j C_ji, C = cartan; connected diagrams only.
inline std::vector<Rational> symmetrizer(const IntMatrix& c) {
  const std::size_t n = c.size();
  std::vector<Rational> d(n, 0);
  if (n == 0) return d;
  d[0] = 1;
  std::queue<std::size_t> todo;
  todo.push(0);
  while (!todo.empty()) {
    const std::size_t i = todo.front();
    todo.pop();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && c(i, j) != 0 && d[j] == 0) {
        d[j] = d[i] * Rational(static_cast<long>(c(i, j))) / Rational(static_cast<long>(c(j, i)));
        todo.push(j);
      }
  }
  for (const auto& x : d)
    if (x == 0) throw std::invalid_argument("symmetrizer: Dynkin diagram is not connected");
  return d;
}

}  // namespace detail

/// Freudenthal recursion over weights ordered by depth below lambda^v.
inline WeightMultiplicityTable freudenthal(const RootSystem& rs, const DominantCoweight& lam) {
  if (rs.is_affine()) throw std::invalid_argument("freudenthal: finite root systems only");
  if (lam.dim() != rs.dim) throw std::invalid_argument("freudenthal: label count mismatch");
  const std::size_t n = rs.dim;
  const IntMatrix& c = rs.cartan;
  const auto d = detail::symmetrizer(c);

  auto form = [&](const CorootVector& x, const CorootVector& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (x[i] && y[j]) s += d[i] * Rational(static_cast<long>(c(i, j))) * x[i] * y[j];
    return s;
  };
  // (lambda, beta_j) = d_j label_j and (rho, beta_j) = d_j.
  auto lam_pair = [&](const CorootVector& x) {
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) s += d[j] * lam[j] * x[j];
    return s;
  };
  auto rho_pair = [&](const CorootVector& x) {
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) s += d[j] * x[j];
    return s;
  };
  // lambda - gamma is a weight iff its dominant conjugate lambda - g satisfies g >= 0.
  auto is_weight = [&](CorootVector g) {
    for (bool moved = true; moved;) {
      moved = false;
      for (std::size_t i = 0; i < n; ++i) {
        long long m = lam[i];
        for (std::size_t j = 0; j < n; ++j) m -= c(i, j) * g[j];
        if (m < 0) {
          g += static_cast<int>(m) * CorootVector::unit(n, i);
          moved = true;
        }
      }
    }
    return g.is_nonnegative();
  };

  std::vector<Rational> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = lam[i];
  const auto coords = rational_solve(c, labels);
  if (!coords) throw std::logic_error("freudenthal: singular Cartan matrix");
  Rational ht_lam = 0;
  for (const auto& x : *coords) ht_lam += x;
  const Rational two_ht = 2 * ht_lam;
  const int max_height = static_cast<int>(mpz_class(two_ht.get_num() / two_ht.get_den()).get_si());

  // Candidate offsets by height, built up from the simple directions.
  std::vector<std::vector<CorootVector>> by_height(max_height + 1);
  by_height[0].push_back(CorootVector(n));
  std::set<CorootVector> seen{CorootVector(n)};
  for (int h = 0; h < max_height; ++h)
    for (const auto& g : by_height[h])
      for (std::size_t i = 0; i < n; ++i) {
        CorootVector next = g + CorootVector::unit(n, i);
        if (seen.insert(next).second && is_weight(next)) by_height[h + 1].push_back(next);
      }

  WeightMultiplicityTable table{lam, {}};
  table.multiplicities.emplace(CorootVector(n), 1);
  const auto& roots = rs.finite_positive_coroots;
  for (int h = 1; h <= max_height; ++h)
    for (const auto& g : by_height[h]) {
      Rational num = 0;
      for (const auto& a : roots)
        for (CorootVector prev = g - a; prev.is_nonnegative(); prev -= a) {
          const long long m = table.multiplicity(prev);
          if (m) num += (lam_pair(a) - form(prev, a)) * static_cast<long>(m);
        }
      const Rational den = 2 * (lam_pair(g) + rho_pair(g)) - form(g, g);
      const Rational m = 2 * num / den;
      if (m.get_den() != 1 || m < 0) throw std::logic_error("freudenthal: non-integral multiplicity");
      if (m != 0) table.multiplicities.emplace(g, m.get_num().get_si());
    }
  return table;
}

}  // namespace gksum::oracles
