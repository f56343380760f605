#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace gksum {

/**
 * Truncated power series c_0 + c_1 u + ... + c_M u^M over the rationals.
 * Every value carries its truncation order M; binary operations require equal orders
 * and drop everything above u^M.
 */
class USeries {
 public:
  USeries() = default;
  explicit USeries(int order) : c_(check_order(order) + 1) {}
  USeries(int order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    c_.resize(check_order(order) + 1);
  }

  static USeries constant(int order, const Rational& value) {
    USeries s(order);
    s.c_[0] = value;
    return s;
  }
  /// u^k, or zero when k exceeds the order.
  static USeries monomial(int order, int k, const Rational& value = 1) {
    USeries s(order);
    if (k <= order) s.c_.at(k) = value;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_[k]; }
  Rational& operator[](int k) { return c_[k]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  /// Smallest k with c_k != 0, or order() + 1 for zero.
  int valuation() const {
    for (int k = 0; k < static_cast<int>(c_.size()); ++k)
      if (c_[k] != 0) return k;
    return order() + 1;
  }

  USeries& operator+=(const USeries& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  USeries& operator-=(const USeries& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  USeries& operator*=(const Rational& r) {
    for (auto& x : c_) x *= r;
    return *this;
  }
  friend USeries operator+(USeries a, const USeries& b) { return a += b; }
  friend USeries operator-(USeries a, const USeries& b) { return a -= b; }
  friend USeries operator-(USeries a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend USeries operator*(USeries a, const Rational& r) { return a *= r; }
  friend USeries operator*(const Rational& r, USeries a) { return a *= r; }

  friend USeries operator*(const USeries& a, const USeries& b) {
    a.check(b);
    USeries r(a.order());
    const int m = a.order();
    for (int i = 0; i <= m; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; i + j <= m; ++j)
        if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  USeries& operator*=(const USeries& o) { return *this = *this * o; }

  /// Multiplicative inverse; requires c_0 != 0.
  USeries inverse() const {
    if (c_.empty() || c_[0] == 0) throw std::domain_error("USeries::inverse: constant term is zero");
    const int m = order();
    USeries r(m);
    const Rational inv0 = Rational(1) / c_[0];
    r.c_[0] = inv0;
    for (int k = 1; k <= m; ++k) {
      Rational s = 0;
      for (int j = 1; j <= k; ++j) s += c_[j] * r.c_[k - j];
      r.c_[k] = -s * inv0;
    }
    return r;
  }

  Rational evaluate(const Rational& u) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
    return acc;
  }

  /// Same series truncated to a lower order.
  USeries truncated(int order) const {
    if (order > this->order()) throw std::invalid_argument("USeries::truncated: order increase");
    return USeries(order, std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
  }

  friend bool operator==(const USeries&, const USeries&) = default;

  std::string str() const {
    std::string s;
    for (int k = 0; k <= order(); ++k) {
      if (c_[k] == 0) continue;
      const Rational& x = c_[k];
      if (!s.empty()) s += x < 0 ? " - " : " + ";
      else if (x < 0) s += "-";
      const Rational a = abs(x);
      if (k == 0 || a != 1) s += to_string(a);
      if (k >= 1) s += k == 1 ? "u" : "u^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("USeries: negative order");
    return order;
  }
  void check(const USeries& o) const {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("USeries: truncation order mismatch");
  }
  std::vector<Rational> c_;
};

}  // namespace gksum
