#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "coefficient_ring.hpp"
#include "coroot.hpp"
#include "parallel.hpp"
#include "root_system.hpp"
#include "series.hpp"
#include "weyl.hpp"

namespace gksum {

struct SumOptions {
  unsigned threads = 1;
};

/// A spherical object re-anchored at e^{lambda^v}: series[gamma] is the coefficient of
/// e^{lambda^v - gamma}, with the q^{<rho, lambda^v>} prefactor removed.
template <CoefficientRing Ring>
struct NormalizedSpherical {
  DominantCoweight anchor;
  FormalSeries<Ring> series;
};

/// Positive coroots of height <= N with their multiplicities.
struct CorootWindow {
  int max_height = 0;
  std::vector<CorootVector> real;
  std::vector<ImaginaryCoroot> imaginary;
};

inline CorootWindow coroot_window(const RootSystem& rs, int max_height) {
  CorootWindow w;
  w.max_height = max_height;
  w.real = positive_real_coroots_up_to_height(rs, max_height);
  if (rs.is_affine()) w.imaginary = positive_imaginary_coroots_up_to_height(rs, max_height);
  return w;
}

/**
 * Largest number of distinct positive real coroots whose heights sum to at most N.
 * A term of w(Delta) at height <= N can avoid the constant u of at most this many
 * flipped factors, so its u-order is at least l(w) minus this budget.
 */
inline int inversion_budget(const RootSystem& rs, int max_height) {
  auto real = positive_real_coroots_up_to_height(rs, max_height);
  std::vector<int> heights;
  for (const auto& b : real) heights.push_back(b.height());
  std::sort(heights.begin(), heights.end());
  int used = 0, count = 0;
  for (int h : heights) {
    if (used + h > max_height) break;
    used += h;
    ++count;
  }
  return count;
}

/// Length bound for the W-sums: all of W for finite type, M + inversion_budget(N) for affine.
inline int required_length(const RootSystem& rs, int max_height, int order) {
  if (!rs.is_affine()) return static_cast<int>(rs.finite_positive_roots.size()) + 1;
  return order + inversion_budget(rs, max_height);
}

namespace detail {

inline void check_table(const RootSystem& rs, const WeylTable& table, int length) {
  if (!(table.descriptor() == rs.desc)) throw std::invalid_argument("Weyl table belongs to another root system");
  if (table.max_length() < length && !table.complete())
    throw std::invalid_argument("Weyl table too short: need length " + std::to_string(length) + ", have " +
                                std::to_string(table.max_length()));
}

class TableRef {
 public:
  TableRef(const RootSystem& rs, int length, const WeylTable* given) {
    if (given) {
      check_table(rs, *given, length);
      ptr_ = given;
    } else {
      owned_ = enumerate_up_to_length(rs, length);
      ptr_ = &*owned_;
    }
  }
  const WeylTable& operator*() const { return *ptr_; }
  const WeylTable* operator->() const { return ptr_; }

 private:
  std::optional<WeylTable> owned_;
  const WeylTable* ptr_ = nullptr;
};

template <CoefficientRing Ring>
bool u_order_exceeds(const Ring&, int) {
  return false;
}
inline bool u_order_exceeds(const FormalRing& ring, int k) { return k > ring.order; }

// w(Delta) in window `max_height`, using the coroots of `window` up to that height.
template <CoefficientRing Ring>
FormalSeries<Ring> w_delta_in_window(const RootSystem& rs, const WeylElement& w, int max_height, const Ring& ring,
                                     const CorootWindow& window) {
  if (max_height > window.max_height) throw std::invalid_argument("w_delta: coroot window too small");
  const auto inversions = inversion_coroots(rs, w);
  int high = 0;
  std::set<CorootVector> flipped;
  for (const auto& b : inversions) {
    if (b.height() > max_height) ++high;
    else flipped.insert(b);
  }
  FormalSeries<Ring> f(ring, max_height, rs.dim);
  if (u_order_exceeds(ring, high)) return f;
  f.add_term(CorootVector(rs.dim), ring.u_power(high));
  const auto u = ring.u(), one = ring.one();
  const auto u_minus_one = u - one, one_minus_u = one - u;
  for (const auto& b : flipped) f = f.times_geometric(b, u, u_minus_one);
  for (const auto& b : window.real) {
    if (b.height() > max_height) break;
    if (!flipped.count(b)) f = f.times_geometric(b, one, one_minus_u);
  }
  for (const auto& im : window.imaginary) {
    if (im.coroot.height() > max_height) break;
    for (int k = 0; k < im.multiplicity; ++k) f = f.times_geometric(im.coroot, one, one_minus_u);
  }
  return f;
}

}  // namespace detail

/// Delta: product of gk factors over positive coroots of height <= N, imaginary ones with multiplicity.
template <CoefficientRing Ring>
FormalSeries<Ring> delta(const RootSystem& rs, int max_height, const Ring& ring) {
  return detail::w_delta_in_window(rs, identity_element(rs), max_height, ring, coroot_window(rs, max_height));
}

/**
 * w(Delta) rewritten into the positive cone: flipped factors for the inversion coroots
 * (bare u for those above the window), gk factors for the remaining real coroots,
 * imaginary factors unchanged. Its constant term is u^{l(w)}.
 */
template <CoefficientRing Ring>
FormalSeries<Ring> w_delta(const RootSystem& rs, const WeylElement& w, int max_height, const Ring& ring) {
  return detail::w_delta_in_window(rs, w, max_height, ring, coroot_window(rs, max_height));
}

/**
 * Sigma_w w(Delta) e^{-(lambda - w lambda)} over the elements of `table`, truncated at
 * height N. Each term is computed directly in the window left over after its offset.
 */
template <CoefficientRing Ring>
FormalSeries<Ring> weyl_sum(const RootSystem& rs, const DominantCoweight& lam, int max_height, const Ring& ring,
                            const WeylTable& table, const SumOptions& opts = {}) {
  const CorootWindow window = coroot_window(rs, max_height);
  const auto& elems = table.elements();
  FormalSeries<Ring> zero(ring, max_height, rs.dim);
  return parallel_sum(elems.size(), opts.threads, zero, [&](FormalSeries<Ring>& acc, std::size_t i) {
    const CorootVector offset = act_on_dominant_coweight(rs, elems[i], lam);
    const int rest = max_height - offset.height();
    if (rest < 0) return;
    const auto term = detail::w_delta_in_window(rs, elems[i], rest, ring, window);
    for (const auto& [g, c] : term.terms()) acc.add_term(g + offset, c);
  });
}

/// W_lambda(u) as a coefficient: the stabilizer's Poincare series.
template <CoefficientRing Ring>
typename Ring::value_type stabilizer_weight(const RootSystem& rs, const DominantCoweight& lam, const Ring& ring) {
  if constexpr (std::is_same_v<Ring, FormalRing>) {
    return ring.from_counts(stabilizer_poincare(rs, lam, ring.order).counts);
  } else {
    const int bound = static_cast<int>(rs.finite_positive_roots.size()) + 1;
    auto ps = stabilizer_poincare(rs, lam, bound);
    if (!ps.exact) throw std::domain_error("stabilizer is infinite; specialize after the formal computation instead");
    return ring.from_counts(ps.counts);
  }
}

/// Product over the finite positive coroots of gk factors (finite type only).
template <CoefficientRing Ring>
FormalSeries<Ring> finite_gk(const RootSystem& rs, int max_height, const Ring& ring) {
  if (rs.is_affine()) throw std::invalid_argument("finite_gk on an affine root system; use affine_gk");
  auto product = FormalSeries<Ring>::one(ring, max_height, rs.dim);
  for (const auto& b : rs.finite_positive_coroots) product *= gk_factor(b, max_height, ring);
  return product;
}

/**
 * (1 / W_lambda(u)) Sigma_{w in W} w(Delta) e^{-(lambda - w lambda)}, anchored at lambda
 * (finite type). With a SpecializedRing all terms are evaluated at the exact u value.
 */
template <CoefficientRing Ring>
NormalizedSpherical<Ring> finite_macdonald(const RootSystem& rs, const DominantCoweight& lam, int max_height,
                                           const Ring& ring, const WeylTable* table = nullptr,
                                           const SumOptions& opts = {}) {
  if (rs.is_affine()) throw std::invalid_argument("finite_macdonald on an affine root system; use h_normalized");
  detail::TableRef t(rs, required_length(rs, max_height, 0), table);
  auto sum = weyl_sum(rs, lam, max_height, ring, *t, opts);
  return {lam, sum.scaled(ring.inverse(stabilizer_weight(rs, lam, ring)))};
}

/**
 * (1 / W_lambda(u)) Sigma_w w(Delta) e^{-(lambda - w lambda)} for affine type, summed over
 * l(w) <= M + inversion_budget(N); longer elements only contribute above u^M.
 */
inline NormalizedSpherical<FormalRing> h_normalized(const RootSystem& rs, const DominantCoweight& lam, int max_height,
                                                    int order, const WeylTable* table = nullptr,
                                                    const SumOptions& opts = {}) {
  if (!rs.is_affine()) throw std::invalid_argument("h_normalized on a finite root system; use finite_macdonald");
  const FormalRing ring{order};
  const int length = required_length(rs, max_height, order);
  detail::TableRef t(rs, length, table);
  const WeylTable used = t->max_length() > length ? t->truncated(length) : *t;
  auto sum = weyl_sum(rs, lam, max_height, ring, used, opts);
  return {lam, sum.scaled(ring.inverse(stabilizer_weight(rs, lam, ring)))};
}

/// H_0: the normalized W-sum at lambda = 0, normalized by the full affine Poincare series.
inline FormalSeries<FormalRing> h_zero(const RootSystem& rs, int max_height, int order,
                                       const WeylTable* table = nullptr, const SumOptions& opts = {}) {
  return h_normalized(rs, DominantCoweight::zero(rs.dim), max_height, order, table, opts).series;
}

/// prod_i prod_{j >= 1} (1 - u^{m_i} e^{-j delta}) / (1 - u^{m_i + 1} e^{-j delta}), simply-laced only.
inline FormalSeries<FormalRing> mac2003_rhs(const RootSystem& rs, int max_height, int order) {
  if (!rs.is_affine()) throw std::invalid_argument("mac2003_rhs requires an affine root system");
  if (!rs.simply_laced()) throw std::invalid_argument("mac2003_rhs: product form is only used for simply-laced types");
  const FormalRing ring{order};
  auto product = FormalSeries<FormalRing>::one(ring, max_height, rs.dim);
  const CorootVector& delta_v = *rs.null_coroot;
  for (int m : rs.exponents)
    for (int j = 1; j * delta_v.height() <= max_height; ++j) {
      const CorootVector jd = j * delta_v;
      auto num = FormalSeries<FormalRing>::one(ring, max_height, rs.dim);
      num.add_term(jd, ring.zero() - ring.u_power(m));
      auto den = FormalSeries<FormalRing>::one(ring, max_height, rs.dim);
      den.add_term(jd, ring.zero() - ring.u_power(m + 1));
      product = product * num * invert(den);
    }
  return product;
}

/// invert(H_0) times the product of gk-factor powers over all positive coroots.
inline FormalSeries<FormalRing> affine_gk(const RootSystem& rs, int max_height, int order,
                                          const FormalSeries<FormalRing>* h0 = nullptr,
                                          const WeylTable* table = nullptr, const SumOptions& opts = {}) {
  if (!rs.is_affine()) throw std::invalid_argument("affine_gk on a finite root system; use finite_gk");
  std::optional<FormalSeries<FormalRing>> own;
  if (!h0) h0 = &own.emplace(h_zero(rs, max_height, order, table, opts));
  return invert(*h0) * delta(rs, max_height, FormalRing{order});
}

/**
 * Satake image anchored at lambda, evaluated at u = 1/q. Finite type is exact; affine
 * type specializes H_lambda / H_0 and carries an O(q^{-(M+1)}) truncation error per coefficient.
 */
inline NormalizedSpherical<SpecializedRing> satake(const RootSystem& rs, const DominantCoweight& lam, const Rational& q,
                                                   int max_height, int order, const WeylTable* table = nullptr,
                                                   const SumOptions& opts = {}) {
  if (q <= 1) throw std::invalid_argument("satake: q must exceed 1");
  const Rational u = Rational(1) / q;
  if (!rs.is_affine()) return finite_macdonald(rs, lam, max_height, SpecializedRing{u}, table, opts);
  const auto h = h_normalized(rs, lam, max_height, order, table, opts);
  const auto h0 = h_zero(rs, max_height, order, table, opts);
  return {lam, specialize_u(h.series * invert(h0), u)};
}

struct StabilizationEntry {
  DominantCoweight lambda;
  USeries coefficient;
  bool equals_gk = false;
};

struct StabilizationReport {
  CorootVector gamma;
  USeries gk_coefficient;
  std::vector<StabilizationEntry> entries;
  /// First schedule index from which every coefficient equals the GK coefficient.
  std::optional<std::size_t> stabilized_from;
  /// Every entry with min label > height(gamma) agrees with the GK coefficient.
  bool contract_ok = true;
};

/**
 * Tracks the e^{-gamma} coefficient of the normalized spherical object along a schedule
 * of increasingly dominant coweights and compares it with the GK coefficient.
 */
inline StabilizationReport stabilization_check(const RootSystem& rs, const CorootVector& gamma,
                                               const std::vector<DominantCoweight>& schedule, int order,
                                               const WeylTable* table = nullptr, const SumOptions& opts = {}) {
  if (gamma.dim() != rs.dim || !gamma.is_nonnegative())
    throw std::invalid_argument("stabilization_check: gamma must be a positive-cone vector of matching dimension");
  for (std::size_t i = 1; i < schedule.size(); ++i)
    if (schedule[i].min_label() < schedule[i - 1].min_label())
      throw std::invalid_argument("stabilization_check: schedule must be increasing in min label");
  const int window = gamma.height();
  const FormalRing ring{order};
  StabilizationReport report;
  report.gamma = gamma;

  std::optional<FormalSeries<FormalRing>> inv_h0;
  if (rs.is_affine()) {
    const auto h0 = h_zero(rs, window, order, table, opts);
    inv_h0 = invert(h0);
    report.gk_coefficient = affine_gk(rs, window, order, &h0).coefficient(gamma);
  } else {
    report.gk_coefficient = finite_gk(rs, window, ring).coefficient(gamma);
  }

  for (const auto& lam : schedule) {
    USeries c = rs.is_affine() ? (h_normalized(rs, lam, window, order, table, opts).series * *inv_h0).coefficient(gamma)
                               : finite_macdonald(rs, lam, window, ring, table, opts).series.coefficient(gamma);
    const bool eq = c == report.gk_coefficient;
    report.entries.push_back({lam, std::move(c), eq});
    if (lam.min_label() > window && !eq) report.contract_ok = false;
  }
  for (std::size_t i = report.entries.size(); i-- > 0;) {
    if (!report.entries[i].equals_gk) break;
    report.stabilized_from = i;
  }
  return report;
}

}  // namespace gksum
