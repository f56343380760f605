#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coefficient_ring.hpp"
#include "coroot.hpp"
#include "rational.hpp"

namespace gksum {

/// Thrown when a coefficient is requested outside the truncation window.
struct OutOfWindow : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/**
 * Finitely supported sum  Sigma_gamma c_gamma e^{-gamma}  over gamma in the positive
 * coroot cone with height(gamma) <= max_height, coefficients in `Ring`.
 *
 * Products drop monomials above the height window; the ring drops u-orders above its
 * truncation. Both truncations are ring homomorphisms, so every identity of the
 * untruncated completion holds exactly coefficient by coefficient.
 */
template <CoefficientRing Ring>
class FormalSeries {
 public:
  using value_type = typename Ring::value_type;
  using TermMap = std::map<CorootVector, value_type, GradedLex>;

  FormalSeries(Ring ring, int max_height, std::size_t dim) : ring_(std::move(ring)), max_height_(max_height), dim_(dim) {
    if (max_height < 0) throw std::invalid_argument("FormalSeries: negative height window");
  }

  static FormalSeries constant(Ring ring, int max_height, std::size_t dim, const value_type& c) {
    FormalSeries s(std::move(ring), max_height, dim);
    s.add_term(CorootVector(dim), c);
    return s;
  }
  static FormalSeries one(const Ring& ring, int max_height, std::size_t dim) {
    return constant(ring, max_height, dim, ring.one());
  }
  static FormalSeries monomial(const Ring& ring, int max_height, const CorootVector& gamma, const value_type& c) {
    FormalSeries s(ring, max_height, gamma.dim());
    s.add_term(gamma, c);
    return s;
  }

  const Ring& ring() const { return ring_; }
  int max_height() const { return max_height_; }
  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c e^{-gamma}; monomials above the window are discarded.
  void add_term(const CorootVector& gamma, const value_type& c) {
    check_key(gamma);
    if (gamma.height() > max_height_ || ring_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(gamma, c);
    if (!inserted) {
      it->second += c;
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Stored coefficient of e^{-gamma}, or zero; gamma above the window is an error.
  value_type coefficient(const CorootVector& gamma) const {
    check_key(gamma);
    if (gamma.height() > max_height_)
      throw OutOfWindow("coefficient requested at height " + std::to_string(gamma.height()) +
                        " beyond truncation height " + std::to_string(max_height_));
    auto it = terms_.find(gamma);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  FormalSeries& operator+=(const FormalSeries& o) {
    check_compatible(o);
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
  }
  FormalSeries& operator-=(const FormalSeries& o) {
    check_compatible(o);
    for (const auto& [g, c] : o.terms_) add_term(g, ring_.zero() - c);
    return *this;
  }
  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
  friend FormalSeries operator-(const FormalSeries& a) {
    FormalSeries r(a.ring_, a.max_height_, a.dim_);
    for (const auto& [g, c] : a.terms_) r.terms_.emplace(g, a.ring_.zero() - c);
    return r;
  }

  FormalSeries scaled(const value_type& c) const {
    FormalSeries r(ring_, max_height_, dim_);
    for (const auto& [g, x] : terms_) r.add_term(g, x * c);
    return r;
  }

  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    a.check_compatible(b);
    FormalSeries r(a.ring_, a.max_height_, a.dim_);
    for (const auto& [ga, ca] : a.terms_) {
      const int ha = ga.height();
      for (const auto& [gb, cb] : b.terms_) {
        if (ha + gb.height() > a.max_height_) break;  // terms are ordered by height
        r.add_term(ga + gb, ca * cb);
      }
    }
    return r;
  }
  FormalSeries& operator*=(const FormalSeries& o) { return *this = *this * o; }

  /// this * e^{-gamma}.
  FormalSeries shifted(const CorootVector& gamma) const {
    check_key(gamma);
    FormalSeries r(ring_, max_height_, dim_);
    if (gamma.height() > max_height_) return r;
    for (const auto& [g, c] : terms_) {
      if (g.height() + gamma.height() > max_height_) break;
      r.terms_.emplace(g + gamma, c);
    }
    return r;
  }

  /**
   * this * (c0 + c1 * Sigma_{k>=1} e^{-k b}), i.e. multiplication by one factor of the
   * shape the spherical-function products are built from, in O(size * window / height(b)).
   */
  FormalSeries times_geometric(const CorootVector& b, const value_type& c0, const value_type& c1) const {
    check_key(b);
    if (b.is_zero()) throw std::invalid_argument("geometric factor along the zero vector");
    FormalSeries r = scaled(c0);
    const int hb = b.height();
    if (hb > max_height_ || ring_.is_zero(c1)) return r;
    std::vector<std::pair<CorootVector, value_type>> base;
    base.reserve(terms_.size());
    for (const auto& [g, c] : terms_) {
      if (g.height() + hb > max_height_) break;
      base.emplace_back(g, c * c1);
    }
    for (const auto& [g, c] : base) {
      CorootVector shift = g;
      for (int h = g.height() + hb; h <= max_height_; h += hb) {
        shift += b;
        r.add_term(shift, c);
      }
    }
    return r;
  }

  /// Restriction to a smaller height window.
  FormalSeries truncated_height(int max_height) const {
    if (max_height > max_height_) throw std::invalid_argument("truncated_height: window increase");
    FormalSeries r(ring_, max_height, dim_);
    for (const auto& [g, c] : terms_) {
      if (g.height() > max_height) break;
      r.terms_.emplace(g, c);
    }
    return r;
  }

  /// All stored monomials lie in the non-negative cone (true by construction; exposed for audits).
  bool support_in_positive_cone() const {
    for (const auto& [g, c] : terms_)
      if (!g.is_nonnegative()) return false;
    return true;
  }

  friend bool operator==(const FormalSeries& a, const FormalSeries& b) {
    return a.ring_ == b.ring_ && a.max_height_ == b.max_height_ && a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  void check_compatible(const FormalSeries& o) const {
    if (!(ring_ == o.ring_) || max_height_ != o.max_height_ || dim_ != o.dim_)
      throw std::invalid_argument("FormalSeries: truncation parameters differ");
  }

 private:
  void check_key(const CorootVector& gamma) const {
    if (gamma.dim() != dim_) throw std::invalid_argument("FormalSeries: monomial dimension mismatch");
    if (!gamma.is_nonnegative()) throw std::invalid_argument("FormalSeries: monomial outside the positive cone");
  }

  Ring ring_;
  int max_height_;
  std::size_t dim_;
  TermMap terms_;
};

/// (1 - u e^{-b}) / (1 - e^{-b}) = 1 + (1 - u) Sigma_{k>=1} e^{-k b}.
template <CoefficientRing Ring>
FormalSeries<Ring> gk_factor(const CorootVector& b, int max_height, const Ring& ring) {
  if (b.is_zero() || !b.is_nonnegative()) throw std::invalid_argument("gk_factor: b must be a nonzero positive vector");
  return FormalSeries<Ring>::one(ring, max_height, b.dim()).times_geometric(b, ring.one(), ring.one() - ring.u());
}

/// (1 - u e^{+b}) / (1 - e^{+b}) rewritten into the positive cone: u + (u - 1) Sigma_{k>=1} e^{-k b}.
template <CoefficientRing Ring>
FormalSeries<Ring> flipped_factor(const CorootVector& b, int max_height, const Ring& ring) {
  if (b.is_zero() || !b.is_nonnegative())
    throw std::invalid_argument("flipped_factor: b must be a nonzero positive vector");
  return FormalSeries<Ring>::one(ring, max_height, b.dim()).times_geometric(b, ring.u(), ring.u() - ring.one());
}

/// Inverse in the completed ring; requires an invertible constant term.
template <CoefficientRing Ring>
FormalSeries<Ring> invert(const FormalSeries<Ring>& a) {
  const auto& ring = a.ring();
  const std::size_t dim = a.dim();
  const auto c0 = a.coefficient(CorootVector(dim));
  if (!ring.is_unit(c0)) throw std::domain_error("invert: constant term is not invertible");
  const auto inv0 = ring.inverse(c0);

  std::vector<std::pair<CorootVector, typename Ring::value_type>> rest;
  for (const auto& [g, c] : a.terms())
    if (!g.is_zero()) rest.emplace_back(g, c);

  // Candidate support: the monoid generated by supp(a), within the window.
  std::set<CorootVector, GradedLex> support{CorootVector(dim)};
  std::vector<CorootVector> queue{CorootVector(dim)};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& [g, c] : rest) {
      CorootVector next = queue[head] + g;
      if (next.height() <= a.max_height() && support.insert(next).second) queue.push_back(next);
    }

  std::map<CorootVector, typename Ring::value_type, GradedLex> b;
  for (const auto& gamma : support) {
    if (gamma.is_zero()) {
      b.emplace(gamma, inv0);
      continue;
    }
    auto acc = ring.zero();
    for (const auto& [g, c] : rest) {
      const CorootVector d = gamma - g;
      if (!d.is_nonnegative()) continue;
      auto it = b.find(d);
      if (it != b.end()) acc += c * it->second;
    }
    b.emplace(gamma, ring.zero() - acc * inv0);
  }
  FormalSeries<Ring> r(ring, a.max_height(), dim);
  for (const auto& [g, c] : b) r.add_term(g, c);
  return r;
}

/// Evaluates every coefficient at u = value. Dropped u-orders contribute O(value^{M+1}).
inline FormalSeries<SpecializedRing> specialize_u(const FormalSeries<FormalRing>& a, const Rational& value) {
  FormalSeries<SpecializedRing> r(SpecializedRing{value}, a.max_height(), a.dim());
  for (const auto& [g, c] : a.terms()) r.add_term(g, c.evaluate(value));
  return r;
}

/// Restriction to a smaller window (N, M) of a formal series.
inline FormalSeries<FormalRing> truncate(const FormalSeries<FormalRing>& a, int max_height, int order) {
  if (order > a.ring().order) throw std::invalid_argument("truncate: u-order increase");
  FormalSeries<FormalRing> r(FormalRing{order}, max_height, a.dim());
  const auto low = a.truncated_height(max_height);
  for (const auto& [g, c] : low.terms()) r.add_term(g, c.truncated(order));
  return r;
}

}  // namespace gksum
