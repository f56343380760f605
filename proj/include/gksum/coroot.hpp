#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gksum {

/**
 * An element of the (co)root lattice, written as integer coefficients over the
 * simple coroots a_1^v, ..., a_n^v (n = l for finite type, l + 1 for affine).
 *
 * Monomials of every series are e^{-gamma} with gamma a non-negative CorootVector.
 * In affine type the last coordinate is the a_{l+1}^v coefficient; `depth()` returns
 * it directly, which for a negative root alpha - n delta written as -gamma is the
 * quantity usually called its depth (n >= 0).
 */
class CorootVector {
 public:
  CorootVector() = default;
  explicit CorootVector(std::size_t dim) : c_(dim, 0) {}
  CorootVector(std::initializer_list<int> init) : c_(init) {}
  explicit CorootVector(std::vector<int> coeffs) : c_(std::move(coeffs)) {}

  static CorootVector unit(std::size_t dim, std::size_t i) {
    CorootVector v(dim);
    v.c_.at(i) = 1;
    return v;
  }

  std::size_t dim() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<int>& coeffs() const { return c_; }

  /// Sum of coefficients; equals the pairing with rho.
  int height() const { return std::accumulate(c_.begin(), c_.end(), 0); }
  /// Coefficient of the last simple coroot; only meaningful for affine systems.
  int depth() const { return c_.empty() ? 0 : c_.back(); }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
  }
  bool is_nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
  }
  bool is_nonpositive() const {
    return std::all_of(c_.begin(), c_.end(), [](int x) { return x <= 0; });
  }

  CorootVector& operator+=(const CorootVector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  CorootVector& operator-=(const CorootVector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend CorootVector operator+(CorootVector a, const CorootVector& b) { return a += b; }
  friend CorootVector operator-(CorootVector a, const CorootVector& b) { return a -= b; }
  friend CorootVector operator-(CorootVector a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend CorootVector operator*(int k, CorootVector a) {
    for (auto& x : a.c_) x *= k;
    return a;
  }

  friend bool operator==(const CorootVector&, const CorootVector&) = default;
  friend auto operator<=>(const CorootVector&, const CorootVector&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    return s + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const CorootVector& v) { return os << v.str(); }

 private:
  void check_dim(const CorootVector& o) const {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("coroot vector dimension mismatch");
  }
  std::vector<int> c_;
};

inline int height_pairing(const CorootVector& gamma) { return gamma.height(); }

/// Graded order on monomials: ascending height, then descending lexicographic
/// within a height (so (1,0) precedes (0,1)).
struct GradedLex {
  bool operator()(const CorootVector& a, const CorootVector& b) const {
    const int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return b.coeffs() < a.coeffs();
  }
};

/// mu <= lam in the dominance order, given the offset lam - mu.
inline bool dominance_leq(const CorootVector& lam_minus_mu) { return lam_minus_mu.is_nonnegative(); }

/// mu <= lam in the dominance order; both expressed in the same simple-coroot basis.
inline bool dominance_leq(const CorootVector& mu, const CorootVector& lam) {
  if (mu.dim() != lam.dim()) throw std::invalid_argument("dominance_leq: dimension mismatch");
  return (lam - mu).is_nonnegative();
}

/**
 * A dominant coweight given by its labels <a_i, lambda^v> (i = 1..n). It need not
 * lie in the coroot lattice; only offsets lambda^v - w lambda^v do.
 */
class DominantCoweight {
 public:
  DominantCoweight() = default;
  explicit DominantCoweight(std::vector<int> labels) : labels_(std::move(labels)) {
    for (int x : labels_)
      if (x < 0) throw std::invalid_argument("coweight is not dominant: negative label");
  }
  DominantCoweight(std::initializer_list<int> init) : DominantCoweight(std::vector<int>(init)) {}

  static DominantCoweight zero(std::size_t dim) { return DominantCoweight(std::vector<int>(dim, 0)); }

  std::size_t dim() const { return labels_.size(); }
  int operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<int>& labels() const { return labels_; }
  int min_label() const { return labels_.empty() ? 0 : *std::min_element(labels_.begin(), labels_.end()); }
  bool is_regular() const { return min_label() > 0; }

  friend bool operator==(const DominantCoweight&, const DominantCoweight&) = default;

  std::string str() const { return CorootVector(labels_).str(); }

 private:
  std::vector<int> labels_;
};

}  // namespace gksum
