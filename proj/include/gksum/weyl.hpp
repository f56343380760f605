#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "coroot.hpp"
#include "linalg.hpp"
#include "root_system.hpp"

namespace gksum {

/**
 * A Weyl group element: its matrix on the coroot lattice (column j is w(a_j^v)),
 * a reduced word over simple-reflection indices (0-based) and its length.
 * The matrix equals S_{i_1} * ... * S_{i_k} for word (i_1, ..., i_k).
 */
struct WeylElement {
  IntMatrix matrix;
  std::vector<int> word;

  int length() const { return static_cast<int>(word.size()); }
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

inline WeylElement identity_element(const RootSystem& rs) { return {IntMatrix::identity(rs.dim), {}}; }

inline WeylElement simple_reflection(const RootSystem& rs, std::size_t i) {
  if (i >= rs.dim) throw std::out_of_range("simple reflection index out of range");
  IntMatrix m = IntMatrix::identity(rs.dim);
  for (std::size_t j = 0; j < rs.dim; ++j) m(i, j) -= rs.cartan(i, j);
  return {m, {static_cast<int>(i)}};
}

/// Matrix of w^{-1}, from the reversed word.
inline IntMatrix inverse_matrix(const RootSystem& rs, const WeylElement& w) {
  IntMatrix m = IntMatrix::identity(rs.dim);
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) m = m * simple_reflection(rs, *it).matrix;
  return m;
}

/**
 * Elements of W grouped by length, produced by breadth-first search over right
 * multiplication by simple reflections in ascending index order. Reduced words are
 * therefore deterministic. Duplicates are detected by matrix.
 */
class WeylTable {
 public:
  WeylTable() = default;
  explicit WeylTable(const RootSystem& rs) : desc_(rs.desc), dim_(rs.dim) {
    add(identity_element(rs));
    layer_start_ = {0, 1};
  }

  const RootSystemDescriptor& descriptor() const { return desc_; }
  std::size_t dim() const { return dim_; }
  /// Largest length whose layer is complete in this table.
  int max_length() const { return max_length_; }
  /// True once the group is exhausted (finite type); later layers are empty.
  bool complete() const { return complete_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& operator[](std::size_t i) const { return elements_[i]; }

  /// Number of elements of each length 0..max_length().
  std::vector<long long> counts_by_length() const {
    std::vector<long long> c;
    for (std::size_t k = 0; k + 1 < layer_start_.size(); ++k)
      c.push_back(static_cast<long long>(layer_start_[k + 1] - layer_start_[k]));
    while (static_cast<int>(c.size()) <= max_length_) c.push_back(0);
    return c;
  }

  /// Elements of exactly the given length.
  std::vector<const WeylElement*> layer(int length) const {
    std::vector<const WeylElement*> out;
    if (length < 0 || length + 1 >= static_cast<int>(layer_start_.size())) return out;
    for (std::size_t i = layer_start_[length]; i < layer_start_[length + 1]; ++i) out.push_back(&elements_[i]);
    return out;
  }

  const WeylElement* find(const IntMatrix& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? nullptr : &elements_[it->second];
  }

  /// Continues the search from the last complete layer up to `length`.
  void extend(const RootSystem& rs, int length) {
    if (!(rs.desc == desc_)) throw std::invalid_argument("WeylTable::extend: root system mismatch");
    std::vector<WeylElement> gens;
    for (std::size_t i = 0; i < dim_; ++i) gens.push_back(simple_reflection(rs, i));
    while (max_length_ < length && !complete_) {
      const std::size_t begin = layer_start_[max_length_], end = layer_start_[max_length_ + 1];
      for (std::size_t e = begin; e < end; ++e)
        for (std::size_t i = 0; i < dim_; ++i) {
          IntMatrix m = elements_[e].matrix * gens[i].matrix;
          if (index_.count(m)) continue;
          std::vector<int> word = elements_[e].word;
          word.push_back(static_cast<int>(i));
          add({std::move(m), std::move(word)});
        }
      if (elements_.size() == end) {
        complete_ = true;  // the previous layer held the longest element
        break;
      }
      ++max_length_;
      layer_start_.push_back(elements_.size());
    }
  }

  /// A table restricted to lengths <= length (length must not exceed max_length()).
  WeylTable truncated(int length) const {
    if (length > max_length_) throw std::invalid_argument("WeylTable::truncated beyond max_length");
    WeylTable t;
    t.desc_ = desc_;
    t.dim_ = dim_;
    t.layer_start_.push_back(0);
    for (int k = 0; k <= length; ++k) {
      for (std::size_t i = layer_start_[k]; i < layer_start_[k + 1]; ++i) t.add(elements_[i]);
      t.layer_start_.push_back(t.elements_.size());
    }
    t.max_length_ = length;
    t.complete_ = complete_ && layer_start_[length + 1] == elements_.size();
    return t;
  }

  /// Reassembles a table from stored elements (used by the on-disk cache).
  static WeylTable from_elements(const RootSystemDescriptor& desc, std::size_t dim, int max_length, bool complete,
                                 std::vector<WeylElement> elements) {
    WeylTable t;
    t.desc_ = desc;
    t.dim_ = dim;
    t.layer_start_.push_back(0);
    int current = 0;
    for (auto& e : elements) {
      if (e.length() < current) throw std::invalid_argument("WeylTable: elements not grouped by length");
      while (current < e.length()) {
        t.layer_start_.push_back(t.elements_.size());
        ++current;
      }
      if (t.index_.count(e.matrix)) throw std::invalid_argument("WeylTable: duplicate element");
      t.add(std::move(e));
    }
    if (current > max_length) throw std::invalid_argument("WeylTable: element longer than max_length");
    while (current <= max_length) {
      t.layer_start_.push_back(t.elements_.size());
      ++current;
    }
    t.max_length_ = max_length;
    t.complete_ = complete;
    return t;
  }

 private:
  void add(WeylElement e) {
    index_.emplace(e.matrix, elements_.size());
    elements_.push_back(std::move(e));
  }

  RootSystemDescriptor desc_;
  std::size_t dim_ = 0;
  std::vector<WeylElement> elements_;
  std::map<IntMatrix, std::size_t> index_;
  std::vector<std::size_t> layer_start_;  // layer k occupies [layer_start_[k], layer_start_[k+1])
  int max_length_ = 0;
  bool complete_ = false;
};

/// All elements of length <= max_length; stops early when a finite group is exhausted.
inline WeylTable enumerate_up_to_length(const RootSystem& rs, int max_length) {
  if (max_length < 0) throw std::invalid_argument("negative length bound");
  WeylTable t(rs);
  t.extend(rs, max_length);
  return t;
}

/// The whole finite Weyl group.
inline WeylTable enumerate_finite(const RootSystem& rs) {
  if (rs.is_affine()) throw std::invalid_argument("enumerate_finite on an affine root system");
  return enumerate_up_to_length(rs, static_cast<int>(rs.finite_positive_roots.size()) + 1);
}

/**
 * Positive real coroots b^v with w^{-1}(b^v) negative, one per letter of the reduced
 * word: b_k = s_{i_1} ... s_{i_{k-1}} (a_{i_k}^v). Cardinality equals the length.
 */
inline std::vector<CorootVector> inversion_coroots(const RootSystem& rs, const WeylElement& w) {
  std::vector<CorootVector> out;
  IntMatrix prefix = IntMatrix::identity(rs.dim);
  for (int i : w.word) {
    out.push_back(prefix.apply(CorootVector::unit(rs.dim, i)));
    prefix = prefix * simple_reflection(rs, i).matrix;
  }
  return out;
}

/**
 * Offset gamma with w lambda^v = lambda^v - gamma, for dominant lambda^v given by labels.
 * Applies the word right to left using s_i(lambda - gamma) = lambda - gamma - <a_i, lambda - gamma> a_i^v.
 */
inline CorootVector act_on_dominant_coweight(const RootSystem& rs, const WeylElement& w, const DominantCoweight& lam) {
  if (lam.dim() != rs.dim) throw std::invalid_argument("coweight label count does not match the root system");
  CorootVector gamma(rs.dim);
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    const auto i = static_cast<std::size_t>(*it);
    gamma[i] += static_cast<int>(lam[i] - rs.pairing(i, gamma));
  }
  return gamma;
}

/// Sigma u^{l(w)} over a subgroup, as counts by length: coefficient k = #{w : l(w) = k}, k <= order.
struct PoincareSeries {
  std::vector<long long> counts;
  /// True when the subgroup was exhausted, so `counts` is the full (polynomial) series.
  bool exact = false;

  int order() const { return static_cast<int>(counts.size()) - 1; }
};

/**
 * Poincare series of the stabilizer of a dominant coweight: the standard parabolic
 * generated by {s_i : label_i = 0}, enumerated by length up to `order`.
 */
inline PoincareSeries stabilizer_poincare(const RootSystem& rs, const DominantCoweight& lam, int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  if (lam.dim() != rs.dim) throw std::invalid_argument("coweight label count does not match the root system");
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < rs.dim; ++i)
    if (lam[i] == 0) gens.push_back(simple_reflection(rs, i).matrix);
  PoincareSeries ps;
  ps.counts.assign(order + 1, 0);
  ps.counts[0] = 1;
  std::set<IntMatrix> seen{IntMatrix::identity(rs.dim)};
  std::vector<IntMatrix> frontier{IntMatrix::identity(rs.dim)};
  for (int k = 1; k <= order && !frontier.empty(); ++k) {
    std::vector<IntMatrix> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        IntMatrix x = m * g;
        if (seen.insert(x).second) next.push_back(std::move(x));
      }
    ps.counts[k] = static_cast<long long>(next.size());
    frontier = std::move(next);
  }
  // Exhausted if the last layer reached is empty, or one more step yields nothing new.
  if (frontier.empty()) {
    ps.exact = true;
  } else {
    bool grows = false;
    for (const auto& m : frontier) {
      for (const auto& g : gens)
        if (!seen.count(m * g)) {
          grows = true;
          break;
        }
      if (grows) break;
    }
    ps.exact = !grows;
  }
  return ps;
}

}  // namespace gksum
