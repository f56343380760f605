#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coroot.hpp"
#include "linalg.hpp"

namespace gksum {

/// Cartan type of the finite part plus the untwisted-affinization flag.
struct RootSystemDescriptor {
  char family = 'A';  ///< 'A'..'G'
  int rank = 1;       ///< rank l of the finite part
  bool affine = false;

  std::string name() const {
    return std::string(1, family) + std::to_string(rank) + (affine ? "^(1)" : "");
  }
  friend bool operator==(const RootSystemDescriptor&, const RootSystemDescriptor&) = default;
};

inline bool is_valid_cartan_type(char family, int rank) {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

namespace detail {

// Bourbaki numbering; entry (i, j) = <alpha_i^v, alpha_j>.
inline IntMatrix standard_cartan(char family, int l) {
  IntMatrix a(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) a(i, i) = 2;
  auto link = [&](int i, int j) { a(i, j) = a(j, i) = -1; };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      a(l - 1, l - 2) = -2;  // alpha_l short
      break;
    case 'C':
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      a(l - 2, l - 1) = -2;  // alpha_l long
      break;
    case 'D':
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1);
      link(l - 3, l - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      link(2, 3);
      for (int i = 3; i + 1 < l; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(2, 3);
      a(1, 2) = -1;
      a(2, 1) = -2;  // alpha_1, alpha_2 long
      break;
    case 'G':
      a(0, 1) = -1;
      a(1, 0) = -3;  // alpha_2 short
      break;
    default: throw std::invalid_argument("unknown Cartan family");
  }
  return a;
}

using IntPoly = std::vector<long long>;

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division by (1 - u^h); throws if not divisible.
inline IntPoly poly_div_one_minus(const IntPoly& a, int h) {
  IntPoly q(a);
  for (std::size_t k = h; k < q.size(); ++k) q[k] += q[k - h];
  for (std::size_t k = q.size() - h; k < q.size(); ++k)
    if (q[k] != 0) throw std::logic_error("poly_div_one_minus: not divisible");
  q.resize(q.size() - h);
  return q;
}

inline void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

}  // namespace detail

/**
 * Root datum of a finite or untwisted affine type, in the simple-coroot basis.
 *
 * `cartan(i, j)` is the pairing <a_i, a_j^v>; a simple reflection acts on the coroot
 * lattice by s_i(gamma) = gamma - <a_i, gamma> a_i^v. In affine type the extra node
 * is the last index, a_{l+1} = delta - theta.
 */
struct RootSystem {
  RootSystemDescriptor desc;
  IntMatrix cartan;
  std::size_t dim = 0;  ///< number of simple roots: l or l + 1
  int rank = 0;         ///< finite rank l

  /// Positive roots / coroots of the finite part, paired index by index,
  /// in simple-root and simple-coroot coordinates of length l.
  std::vector<CorootVector> finite_positive_roots;
  std::vector<CorootVector> finite_positive_coroots;
  CorootVector theta_root;    ///< highest root of the finite part
  CorootVector theta_coroot;  ///< its coroot

  std::optional<CorootVector> null_coroot;  ///< delta (affine only), primitive and positive
  std::vector<int> exponents;               ///< m_1 <= ... <= m_l of the finite part
  std::vector<long long> finite_poincare;   ///< length generating polynomial of the finite Weyl group

  /// Real coroots have multiplicity 1, each imaginary coroot n delta has this one.
  int imaginary_multiplicity = 0;

  bool is_affine() const { return desc.affine; }
  bool simply_laced() const { return desc.family == 'A' || desc.family == 'D' || desc.family == 'E'; }
  std::string name() const { return desc.name(); }

  /// <a_i, gamma> for gamma in the coroot lattice.
  long long pairing(std::size_t i, const CorootVector& gamma) const {
    long long s = 0;
    for (std::size_t j = 0; j < dim; ++j) s += cartan(i, j) * gamma[j];
    return s;
  }

  /// s_i(gamma) = gamma - <a_i, gamma> a_i^v.
  CorootVector reflect(std::size_t i, CorootVector gamma) const {
    gamma[i] -= static_cast<int>(pairing(i, gamma));
    return gamma;
  }
};

namespace detail {

// Closure of the simple coroots under simple reflections, keeping positive coroots
// of height <= max_height. Every positive real coroot is reached: a non-simple one
// admits a reflection lowering its height, so reversing that chain stays in the window.
inline std::vector<CorootVector> real_coroot_closure(const IntMatrix& cartan, int max_height) {
  const std::size_t n = cartan.size();
  std::set<CorootVector, GradedLex> seen;
  std::vector<CorootVector> queue;
  if (max_height >= 1)
    for (std::size_t i = 0; i < n; ++i) {
      queue.push_back(CorootVector::unit(n, i));
      seen.insert(queue.back());
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const CorootVector beta = queue[head];
    for (std::size_t i = 0; i < n; ++i) {
      long long p = 0;
      for (std::size_t j = 0; j < n; ++j) p += cartan(i, j) * beta[j];
      if (p >= 0) continue;  // reflection would not raise the height
      CorootVector next = beta;
      next[i] -= static_cast<int>(p);
      if (next.height() > max_height) continue;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace detail

inline RootSystem build_root_system(const RootSystemDescriptor& desc) {
  if (!is_valid_cartan_type(desc.family, desc.rank))
    throw std::invalid_argument("invalid Cartan type " + std::string(1, desc.family) + std::to_string(desc.rank));
  const int l = desc.rank;
  RootSystem rs;
  rs.desc = desc;
  rs.rank = l;

  const IntMatrix finite = detail::standard_cartan(desc.family, l).transposed();

  // Finite positive roots paired with their coroots, by reflecting (root, coroot) pairs.
  {
    std::map<CorootVector, CorootVector> pairs;
    std::vector<CorootVector> queue;
    for (int i = 0; i < l; ++i) {
      auto e = CorootVector::unit(l, i);
      pairs.emplace(e, e);
      queue.push_back(e);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const CorootVector root = queue[head];
      const CorootVector coroot = pairs.at(root);
      for (int i = 0; i < l; ++i) {
        long long root_pair = 0, coroot_pair = 0;  // <beta, a_i^v>, <a_i, beta^v>
        for (int j = 0; j < l; ++j) {
          root_pair += root[j] * finite(j, i);
          coroot_pair += finite(i, j) * coroot[j];
        }
        CorootVector r = root, c = coroot;
        r[i] -= static_cast<int>(root_pair);
        c[i] -= static_cast<int>(coroot_pair);
        if (!r.is_nonnegative() || r.is_zero()) continue;
        if (pairs.emplace(r, c).second) queue.push_back(r);
      }
    }
    std::vector<CorootVector> roots;
    for (const auto& [r, c] : pairs) roots.push_back(r);
    std::sort(roots.begin(), roots.end(), GradedLex{});
    for (const auto& r : roots) {
      rs.finite_positive_roots.push_back(r);
      rs.finite_positive_coroots.push_back(pairs.at(r));
    }
    rs.theta_root = rs.finite_positive_roots.back();
    rs.theta_coroot = rs.finite_positive_coroots.back();
  }

  // Length generating polynomial prod (1 - u^{h+1}) / (1 - u^h) over positive root heights,
  // then exponents from its factorization into prod (1 + u + ... + u^{m_i}).
  {
    detail::IntPoly num{1};
    std::vector<int> heights;
    for (const auto& r : rs.finite_positive_roots) {
      const int h = r.height();
      detail::IntPoly f(h + 2, 0);
      f[0] = 1;
      f[h + 1] = -1;
      num = detail::poly_mul(num, f);
      heights.push_back(h);
    }
    for (int h : heights) num = detail::poly_div_one_minus(num, h);
    detail::trim(num);
    rs.finite_poincare = num;

    detail::IntPoly q = num;  // q = W(u) (1 - u)^l = prod (1 - u^{m_i + 1})
    for (int i = 0; i < l; ++i) q = detail::poly_mul(q, {1, -1});
    detail::trim(q);
    while (q.size() > 1) {
      std::size_t k = 1;
      while (k < q.size() && q[k] == 0) ++k;
      if (k == q.size() || q[k] > 0) throw std::logic_error("Poincare polynomial does not factor into degrees");
      rs.exponents.push_back(static_cast<int>(k) - 1);
      q = detail::poly_div_one_minus(q, static_cast<int>(k));
      detail::trim(q);
    }
    if (static_cast<int>(rs.exponents.size()) != l) throw std::logic_error("exponent count differs from rank");
  }

  if (!desc.affine) {
    rs.dim = l;
    rs.cartan = finite;
    return rs;
  }

  rs.dim = l + 1;
  rs.cartan = IntMatrix(rs.dim);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) rs.cartan(i, j) = finite(i, j);
  for (int j = 0; j < l; ++j) {
    long long theta_pair = 0, theta_v_pair = 0;
    for (int k = 0; k < l; ++k) {
      theta_pair += rs.theta_root[k] * finite(k, j);     // <theta, a_j^v>
      theta_v_pair += finite(j, k) * rs.theta_coroot[k];  // <a_j, theta^v>
    }
    rs.cartan(l, j) = -theta_pair;
    rs.cartan(j, l) = -theta_v_pair;
  }
  rs.cartan(l, l) = 2;

  const auto kernel = rational_kernel(rs.cartan);
  if (kernel.size() != 1) throw std::logic_error("affine Cartan matrix kernel is not one-dimensional");
  CorootVector delta(primitive_integer_vector(kernel.front()));
  if (!delta.is_nonnegative()) delta = -delta;
  rs.null_coroot = delta;
  rs.imaginary_multiplicity = l;
  return rs;
}

inline RootSystem build_root_system(char family, int rank, bool affine = false) {
  return build_root_system(RootSystemDescriptor{family, rank, affine});
}

/// Positive real coroots of height <= max_height, each once, in graded order.
inline std::vector<CorootVector> positive_real_coroots_up_to_height(const RootSystem& rs, int max_height) {
  if (max_height < 0) throw std::invalid_argument("negative height bound");
  return detail::real_coroot_closure(rs.cartan, max_height);
}

struct ImaginaryCoroot {
  CorootVector coroot;
  int multiplicity;
  friend bool operator==(const ImaginaryCoroot&, const ImaginaryCoroot&) = default;
};

/// {(n delta, l) : n >= 1, height(n delta) <= max_height}.
inline std::vector<ImaginaryCoroot> positive_imaginary_coroots_up_to_height(const RootSystem& rs, int max_height) {
  if (!rs.is_affine()) throw std::invalid_argument("imaginary coroots requested for a finite root system");
  if (max_height < 0) throw std::invalid_argument("negative height bound");
  std::vector<ImaginaryCoroot> out;
  const CorootVector& delta = *rs.null_coroot;
  for (int n = 1; n * delta.height() <= max_height; ++n) out.push_back({n * delta, rs.imaginary_multiplicity});
  return out;
}

}  // namespace gksum
