#pragma once

#include <concepts>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"
#include "useries.hpp"

namespace gksum {

/// Coefficients are truncated power series in the formal variable u, up to u^order.
struct FormalRing {
  using value_type = USeries;
  int order = 0;

  static constexpr const char* mode() { return "formal"; }

  USeries zero() const { return USeries(order); }
  USeries one() const { return USeries::constant(order, 1); }
  USeries u() const { return USeries::monomial(order, 1); }
  USeries u_power(int k) const { return USeries::monomial(order, k); }
  USeries constant(const Rational& r) const { return USeries::constant(order, r); }
  /// Sigma counts[k] u^k, truncated at the ring order.
  USeries from_counts(const std::vector<long long>& counts) const {
    USeries s(order);
    for (int k = 0; k < static_cast<int>(counts.size()) && k <= order; ++k) s[k] = Rational(static_cast<long>(counts[k]));
    return s;
  }
  bool is_zero(const USeries& v) const { return v.is_zero(); }
  bool is_unit(const USeries& v) const { return v.order() >= 0 && v[0] != 0; }
  USeries inverse(const USeries& v) const { return v.inverse(); }

  friend bool operator==(const FormalRing&, const FormalRing&) = default;
};

/// Coefficients are exact rationals: u has been replaced by a fixed rational value.
struct SpecializedRing {
  using value_type = Rational;
  Rational u_value = 0;

  static constexpr const char* mode() { return "specialized"; }

  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  Rational u() const { return u_value; }
  Rational u_power(int k) const { return rational_power(u_value, k); }
  Rational constant(const Rational& r) const { return r; }
  /// Evaluates Sigma counts[k] u^k; only exact if `counts` is the whole polynomial.
  Rational from_counts(const std::vector<long long>& counts) const {
    Rational acc = 0;
    for (auto it = counts.rbegin(); it != counts.rend(); ++it) acc = acc * u_value + Rational(static_cast<long>(*it));
    return acc;
  }
  bool is_zero(const Rational& v) const { return v == 0; }
  bool is_unit(const Rational& v) const { return v != 0; }
  Rational inverse(const Rational& v) const {
    if (v == 0) throw std::domain_error("division by zero coefficient");
    return Rational(1) / v;
  }

  friend bool operator==(const SpecializedRing&, const SpecializedRing&) = default;
};

template <class R>
concept CoefficientRing = requires(const R& ring, const typename R::value_type& v) {
  { ring.zero() } -> std::same_as<typename R::value_type>;
  { ring.one() } -> std::same_as<typename R::value_type>;
  { ring.u() } -> std::same_as<typename R::value_type>;
  { ring.is_zero(v) } -> std::same_as<bool>;
  { ring.inverse(v) } -> std::same_as<typename R::value_type>;
  { v + v } -> std::convertible_to<typename R::value_type>;
  { v - v } -> std::convertible_to<typename R::value_type>;
  { v * v } -> std::convertible_to<typename R::value_type>;
};

}  // namespace gksum
