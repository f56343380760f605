#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace gksum::oracles {

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

/**
 * Element of F_q((pi)) known modulo pi^prec:  pi^val * (d_0 + d_1 pi + ...), d_0 != 0.
 * Zero is represented with val == prec and no digits. q must be prime.
 */
class LaurentFF {
 public:
  LaurentFF(int q, int prec) : q_(q), val_(prec), prec_(prec) {
    if (!is_prime(q)) throw std::invalid_argument("LaurentFF: q must be prime, got " + std::to_string(q));
  }

  /// c * pi^k modulo pi^prec.
  static LaurentFF monomial(int q, int k, int c, int prec) {
    LaurentFF x(q, prec);
    x.set(k, c);
    return x;
  }
  /// Sigma_i digits[i] pi^{low + i}.
  static LaurentFF from_digits(int q, int low, const std::vector<int>& digits, int prec) {
    LaurentFF x(q, prec);
    for (std::size_t i = 0; i < digits.size(); ++i) x.set(low + static_cast<int>(i), digits[i]);
    return x;
  }

  int q() const { return q_; }
  int prec() const { return prec_; }
  bool is_zero() const { return d_.empty(); }
  /// Valuation; equals prec() for zero (lower bound only).
  int valuation() const { return val_; }
  bool is_integral() const { return val_ >= 0; }
  /// Coefficient of pi^k, for k < prec.
  int digit(int k) const {
    if (k >= prec_) throw std::out_of_range("LaurentFF::digit beyond precision");
    if (is_zero() || k < val_ || k - val_ >= static_cast<int>(d_.size())) return 0;
    return d_[k - val_];
  }

  friend LaurentFF operator+(const LaurentFF& a, const LaurentFF& b) {
    a.check(b);
    LaurentFF r(a.q_, std::min(a.prec_, b.prec_));
    const int lo = std::min(a.val_, b.val_);
    for (int k = lo; k < r.prec_; ++k) r.set(k, a.digit_unchecked(k) + b.digit_unchecked(k));
    return r;
  }
  friend LaurentFF operator-(const LaurentFF& a) {
    LaurentFF r = a;
    for (auto& x : r.d_) x = (a.q_ - x) % a.q_;
    return r;
  }
  friend LaurentFF operator-(const LaurentFF& a, const LaurentFF& b) { return a + (-b); }

  friend LaurentFF operator*(const LaurentFF& a, const LaurentFF& b) {
    a.check(b);
    LaurentFF r(a.q_, std::min(a.prec_ + b.val_, b.prec_ + a.val_));
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<long long> acc(a.d_.size() + b.d_.size(), 0);
    for (std::size_t i = 0; i < a.d_.size(); ++i)
      for (std::size_t j = 0; j < b.d_.size(); ++j) acc[i + j] = (acc[i + j] + 1LL * a.d_[i] * b.d_[j]) % a.q_;
    const int base = a.val_ + b.val_;
    for (std::size_t k = 0; k < acc.size(); ++k)
      if (base + static_cast<int>(k) < r.prec_) r.set(base + static_cast<int>(k), static_cast<int>(acc[k]));
    return r;
  }

  /// Inverse of a nonzero element; relative precision is preserved.
  LaurentFF inverse() const {
    if (is_zero()) throw std::domain_error("LaurentFF::inverse of zero");
    const int rel = prec_ - val_;
    LaurentFF r(q_, rel - val_);
    std::vector<int> e(rel, 0), x(d_.begin(), d_.end());
    x.resize(rel, 0);
    const int inv0 = inverse_mod(x[0]);
    for (int k = 0; k < rel; ++k) {
      long long s = k == 0 ? 1 : 0;
      for (int j = 1; j <= k; ++j) s -= 1LL * x[j] * e[k - j];
      e[k] = static_cast<int>(((s % q_ + q_) % q_) * inv0 % q_);
    }
    for (int k = 0; k < rel; ++k) r.set(k - val_, e[k]);
    return r;
  }

  /// Equal modulo the coarser of the two precisions.
  friend bool operator==(const LaurentFF& a, const LaurentFF& b) { return (a - b).is_zero(); }

  std::string str() const {
    if (is_zero()) return "O(pi^" + std::to_string(prec_) + ")";
    std::string s;
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (!d_[i]) continue;
      if (!s.empty()) s += " + ";
      s += std::to_string(d_[i]) + "*pi^" + std::to_string(val_ + static_cast<int>(i));
    }
    return s + " + O(pi^" + std::to_string(prec_) + ")";
  }

 private:
  int digit_unchecked(int k) const {
    if (is_zero() || k < val_ || k - val_ >= static_cast<int>(d_.size())) return 0;
    return d_[k - val_];
  }

  // Sets the coefficient of pi^k (digits beyond the precision are dropped).
  void set(int k, int c) {
    if (k >= prec_) return;
    c = ((c % q_) + q_) % q_;
    std::vector<int> dense;
    const int lo = std::min(is_zero() ? k : val_, k);
    const int hi = std::max(is_zero() ? k : val_ + static_cast<int>(d_.size()) - 1, k);
    dense.assign(hi - lo + 1, 0);
    for (std::size_t i = 0; i < d_.size(); ++i) dense[val_ - lo + i] = d_[i];
    dense[k - lo] = c;
    std::size_t first = 0;
    while (first < dense.size() && dense[first] == 0) ++first;
    std::size_t last = dense.size();
    while (last > first && dense[last - 1] == 0) --last;
    if (first == last) {
      d_.clear();
      val_ = prec_;
      return;
    }
    d_.assign(dense.begin() + first, dense.begin() + last);
    val_ = lo + static_cast<int>(first);
  }

  int inverse_mod(int a) const {
    long long r = 1, b = a, e = q_ - 2;
    for (; e > 0; e >>= 1, b = b * b % q_)
      if (e & 1) r = r * b % q_;
    return static_cast<int>(r);
  }

  void check(const LaurentFF& o) const {
    if (q_ != o.q_) throw std::invalid_argument("LaurentFF: residue fields differ");
  }

  int q_;
  int val_;
  int prec_;
  std::vector<int> d_;
};

}  // namespace gksum::oracles
