#pragma once

// Self-checks run by `gksum verify`. Each suite returns a verdict plus human-readable
// lines; every series a suite produces is also checked for support in the positive cone.

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "formulas.hpp"
#include "oracles/freudenthal.hpp"
#include "oracles/sl2.hpp"

namespace gksum {

struct SuiteResult {
  std::string name;
  bool passed = true;
  double seconds = 0;
  std::vector<std::string> lines;

  void check(bool ok, const std::string& what) {
    lines.push_back(std::string(ok ? "ok    " : "FAIL  ") + what);
    if (!ok) passed = false;
  }
  template <class S>
  void check_support(const S& s, const std::string& what) {
    if (!s.support_in_positive_cone()) check(false, what + ": support leaves the positive cone");
  }
};

struct VerifyOptions {
  /// Restricts suites that accept a single root system; empty means the default list.
  std::optional<RootSystemDescriptor> only;
  unsigned threads = 1;
  std::uint32_t seed = 20100601;
};

namespace detail {

inline std::vector<RootSystemDescriptor> pick(const VerifyOptions& o, std::vector<RootSystemDescriptor> defaults) {
  if (o.only) return {*o.only};
  return defaults;
}

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline std::vector<DominantCoweight> labels_up_to(std::size_t dim, int max_label) {
  std::vector<DominantCoweight> out;
  std::vector<int> l(dim, 0);
  for (;;) {
    out.emplace_back(l);
    std::size_t i = 0;
    while (i < dim && ++l[i] > max_label) l[i++] = 0;
    if (i == dim) break;
  }
  return out;
}

template <CoefficientRing Ring>
bool is_one(const FormalSeries<Ring>& s) {
  return s == FormalSeries<Ring>::one(s.ring(), s.max_height(), s.dim());
}

}  // namespace detail

inline SuiteResult suite_finite_macdonald_zero(const VerifyOptions& o) {
  SuiteResult r{"finite-macdonald-zero"};
  std::mt19937 rng(o.seed);
  const int n = 6;
  for (const auto& d : detail::pick(o, {{'A', 1, false}, {'A', 2, false}, {'B', 2, false}, {'G', 2, false}})) {
    if (d.affine) {
      r.check(false, d.name() + ": suite needs a finite type");
      continue;
    }
    const auto rs = build_root_system(d);
    const auto table = enumerate_finite(rs);
    const auto zero = DominantCoweight::zero(rs.dim);
    const auto formal = finite_macdonald(rs, zero, n, FormalRing{8}, &table, {o.threads});
    r.check_support(formal.series, d.name());
    r.check(detail::is_one(formal.series), d.name() + ": S(0) = 1 (formal, M = 8, N = " + std::to_string(n) + ")");
    for (int k = 0; k < 5; ++k) {
      Rational u = detail::random_rational(rng);
      while (u == -1) u = detail::random_rational(rng);  // W(u) vanishes at u = -1
      const auto exact = finite_macdonald(rs, zero, n, SpecializedRing{u}, &table, {o.threads});
      r.check_support(exact.series, d.name());
      r.check(detail::is_one(exact.series), d.name() + ": S(0) = 1 at u = " + to_string(u));
    }
  }
  return r;
}

inline SuiteResult suite_padic_rank1(const VerifyOptions&) {
  SuiteResult r{"padic-rank1"};
  const auto a1 = build_root_system('A', 1);
  for (int q : {2, 3, 5}) {
    const auto gk = finite_gk(a1, 4, SpecializedRing{Rational(1, q)});
    r.check_support(gk, "finite_gk(A1)");
    for (int n = 1; n <= 4; ++n) {
      const auto c = oracles::sl2_gk_coefficient(q, n);
      const long long expect = (q - 1) * static_cast<long long>(std::pow(q, n - 1));
      const Rational coeff = gk.coefficient(CorootVector({n}));
      std::ostringstream os;
      os << "q = " << q << ", n = " << n << ": count " << c.count << ", normalized " << c.normalized
         << ", GK coefficient " << coeff;
      r.check(c.count == expect && c.normalized == coeff && c.witnesses_ok, os.str());
    }
  }
  return r;
}

inline SuiteResult suite_weyl_character(const VerifyOptions& o) {
  SuiteResult r{"weyl-character"};
  for (const auto& d : detail::pick(o, {{'A', 2, false}, {'B', 2, false}})) {
    if (d.affine) {
      r.check(false, d.name() + ": suite needs a finite type");
      continue;
    }
    const auto rs = build_root_system(d);
    const auto table = enumerate_finite(rs);
    for (const auto& lam : detail::labels_up_to(rs.dim, 2)) {
      const auto chars = oracles::freudenthal(rs, lam);
      int top = 0;
      for (const auto& [g, m] : chars.multiplicities) top = std::max(top, g.height());
      const auto s = finite_macdonald(rs, lam, top + 1, SpecializedRing{0}, &table, {o.threads});
      r.check_support(s.series, d.name());
      bool same = true;
      for (const auto& [g, c] : s.series.terms()) same &= c == static_cast<long>(chars.multiplicity(g));
      for (const auto& [g, m] : chars.multiplicities) same &= s.series.coefficient(g) == static_cast<long>(m);
      r.check(same, d.name() + " lambda = " + lam.str() + ": u = 0 limit matches Freudenthal (dim " +
                        std::to_string(chars.dimension()) + ")");
    }
  }
  return r;
}

inline SuiteResult suite_finite_stabilization(const VerifyOptions& o) {
  SuiteResult r{"finite-stabilization"};
  const auto rs = build_root_system('A', 2);
  const auto table = enumerate_finite(rs);
  const CorootVector gamma({1, 1});
  std::vector<DominantCoweight> schedule;
  for (int k = 0; k <= 4; ++k) schedule.emplace_back(std::vector<int>{k, k});
  const int order = 4;
  const auto rep = stabilization_check(rs, gamma, schedule, order, &table, {o.threads});
  const USeries one = USeries::constant(order, 1), u = USeries::monomial(order, 1);
  r.check(rep.gk_coefficient == (one - u) * (USeries::constant(order, 2) - u),
          "GK coefficient at e^{-(1,1)} is (1-u)(2-u): " + rep.gk_coefficient.str());
  for (const auto& e : rep.entries)
    r.lines.push_back("      lambda = " + e.lambda.str() + ": " + e.coefficient.str() + (e.equals_gk ? "  (= GK)" : ""));
  r.check(rep.stabilized_from && schedule[*rep.stabilized_from].min_label() == 2,
          "stabilized from min label 2");
  r.check(rep.contract_ok, "stabilized once min label exceeds height(gamma)");
  return r;
}

inline SuiteResult suite_affine_constant_term(const VerifyOptions& o) {
  SuiteResult r{"affine-constant-term"};
  const int n = 6, m = 6;
  for (const auto& d : detail::pick(o, {{'A', 1, true}, {'A', 2, true}})) {
    const auto rs = build_root_system(d);
    const auto table = enumerate_up_to_length(rs, required_length(rs, n, m));
    const auto h0 = h_zero(rs, n, m, &table, {o.threads});
    const auto rhs = mac2003_rhs(rs, n, m);
    r.check_support(h0, d.name());
    r.check_support(rhs, d.name());
    std::size_t bad = 0;
    for (const auto& [g, c] : h0.terms())
      if (!(rhs.coefficient(g) == c)) ++bad;
    for (const auto& [g, c] : rhs.terms())
      if (h0.coefficient(g).is_zero()) ++bad;
    r.check(bad == 0, d.name() + ": H_0 equals the product form (" + std::to_string(bad) + " mismatched coefficients)");
    const auto dv = *rs.null_coroot;
    r.lines.push_back("      " + d.name() + " e^{-delta}: H_0 = " + h0.coefficient(dv).str() +
                      ", product = " + rhs.coefficient(dv).str());
  }
  return r;
}

inline SuiteResult suite_affine_gk_stabilization(const VerifyOptions& o) {
  SuiteResult r{"affine-gk-stabilization"};
  const auto rs = build_root_system('A', 1, true);
  const int n = 4, m = 6;
  const auto table = enumerate_up_to_length(rs, required_length(rs, n, m));
  const auto h0 = h_zero(rs, n, m, &table, {o.threads});
  const auto inv_h0 = invert(h0);
  const auto gk = affine_gk(rs, n, m, &h0);
  r.check_support(gk, "affine_gk");
  const FormalRing ring{m};
  r.check(gk.coefficient(CorootVector({1, 0})) == ring.one() - ring.u(), "height-1 coefficient is 1 - u: " +
                                                                               gk.coefficient(CorootVector({1, 0})).str());
  for (const auto& labels : std::vector<std::vector<int>>{{5, 5}, {5, 6}, {6, 5}, {5, 8}, {7, 7}}) {
    const DominantCoweight lam(labels);
    const auto h = h_normalized(rs, lam, n, m, &table, {o.threads});
    r.check_support(h.series, "h_normalized");
    const auto ratio = h.series * inv_h0;
    bool same = true;
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) same &= ratio.coefficient(CorootVector({a, b})) == gk.coefficient(CorootVector({a, b}));
    r.check(same, "lambda = " + lam.str() + ": H_lambda / H_0 agrees with the affine GK series up to height 4");
  }
  return r;
}

inline SuiteResult suite_dominance_emptiness(const VerifyOptions&) {
  SuiteResult r{"dominance-emptiness"};
  for (int q : {2, 3, 5})
    for (int n = 1; n <= 4; ++n) {
      const auto c = oracles::sl2_gk_coefficient(q, n);
      bool none_positive = true;
      for (const auto& [k, count] : c.histogram) none_positive &= k <= 0;
      r.check(none_positive, "q = " + std::to_string(q) + ", n = " + std::to_string(n) +
                                 ": no class lands in K pi^{+k alpha} U");
    }
  return r;
}

inline SuiteResult suite_properties(const VerifyOptions& o) {
  SuiteResult r{"properties"};
  std::mt19937 rng(o.seed);
  const FormalRing ring{4};
  const int n = 5;
  auto random_series = [&](std::size_t dim) {
    FormalSeries<FormalRing> s(ring, n, dim);
    std::uniform_int_distribution<int> coord(0, 3), k(0, 4);
    for (int t = 0; t < 6; ++t) {
      std::vector<int> g(dim);
      for (auto& x : g) x = coord(rng);
      if (CorootVector(g).height() > n) continue;
      s.add_term(CorootVector(g), ring.u_power(k(rng)) * detail::random_rational(rng));
    }
    return s;
  };
  bool laws = true;
  for (int t = 0; t < 10; ++t) {
    auto a = random_series(3), b = random_series(3), c = random_series(3);
    laws &= (a * b) * c == a * (b * c) && a * b == b * a && a * (b + c) == a * b + a * c;
    auto unit = a;
    unit.add_term(CorootVector(3), ring.one() - a.coefficient(CorootVector(3)));
    laws &= detail::is_one(unit * invert(unit));
  }
  r.check(laws, "series ring laws and inversion on random series");

  const auto a2 = build_root_system('A', 2);
  const auto big = finite_gk(a2, 7, FormalRing{6});
  r.check(truncate(big, 4, 3) == finite_gk(a2, 4, FormalRing{3}), "truncation stability of finite_gk (7, 6) -> (4, 3)");
  const auto a1a = build_root_system('A', 1, true);
  const auto h_big = h_zero(a1a, 6, 5, nullptr, {o.threads});
  r.check(truncate(h_big, 4, 3) == h_zero(a1a, 4, 3, nullptr, {o.threads}),
          "truncation stability of h_zero (6, 5) -> (4, 3)");

  for (const auto& d : {RootSystemDescriptor{'A', 1, true}, RootSystemDescriptor{'A', 2, true}}) {
    const auto rs = build_root_system(d);
    const auto table = enumerate_up_to_length(rs, 5);
    const FormalRing r6{6};
    bool ok = true;
    for (const auto& w : table.elements()) {
      const auto wd = w_delta(rs, w, 4, r6);
      r.check_support(wd, d.name() + " w(Delta)");
      ok &= wd.coefficient(CorootVector(rs.dim)) == r6.u_power(w.length());
    }
    r.check(ok, d.name() + ": constant term of w(Delta) is u^l(w) for l(w) <= 5 (" + std::to_string(table.size()) +
                    " elements)");
  }

  {
    bool ok = true;
    const auto rs = build_root_system('A', 2, true);
    for (const auto& b : positive_real_coroots_up_to_height(rs, 3)) {
      auto lhs = flipped_factor(b, 6, ring);
      auto one_minus = FormalSeries<FormalRing>::one(ring, 6, rs.dim);
      one_minus.add_term(b, ring.zero() - ring.one());
      auto rhs = FormalSeries<FormalRing>::constant(ring, 6, rs.dim, ring.u());
      rhs.add_term(b, ring.zero() - ring.one());
      ok &= one_minus * lhs == rhs;
    }
    r.check(ok, "(1 - e^{-b}) * flipped_factor(b) = u - e^{-b}");
  }

  for (const auto& d : {RootSystemDescriptor{'A', 2, false}, RootSystemDescriptor{'B', 2, false},
                        RootSystemDescriptor{'G', 2, false}, RootSystemDescriptor{'A', 1, true},
                        RootSystemDescriptor{'A', 2, true}}) {
    const auto rs = build_root_system(d);
    const auto table = d.affine ? enumerate_up_to_length(rs, 8) : enumerate_finite(rs);
    bool inv = true;
    for (const auto& w : table.elements()) {
      const auto bs = inversion_coroots(rs, w);
      std::set<CorootVector> distinct(bs.begin(), bs.end());
      const IntMatrix winv = inverse_matrix(rs, w);
      for (const auto& b : bs) inv &= b.is_nonnegative() && winv.apply(b).is_nonpositive();
      inv &= distinct.size() == static_cast<std::size_t>(w.length());
    }
    r.check(inv, d.name() + ": length equals the number of inversion coroots");
    const auto counts = table.counts_by_length();
    if (!d.affine) {
      bool pal = table.complete();
      for (std::size_t k = 0; k < counts.size(); ++k) pal &= counts[k] == counts[counts.size() - 1 - k];
      r.check(pal, d.name() + ": length counts are palindromic");
    } else if (d.rank == 1) {
      bool two = counts[0] == 1;
      for (std::size_t k = 1; k < counts.size(); ++k) two &= counts[k] == 2;
      r.check(two, d.name() + ": two elements of every positive length");
    }
  }
  return r;
}

struct SuiteEntry {
  const char* name;
  SuiteResult (*run)(const VerifyOptions&);
};

inline const std::vector<SuiteEntry>& verify_suites() {
  static const std::vector<SuiteEntry> suites{
      {"finite-macdonald-zero", suite_finite_macdonald_zero},
      {"padic-rank1", suite_padic_rank1},
      {"weyl-character", suite_weyl_character},
      {"finite-stabilization", suite_finite_stabilization},
      {"affine-constant-term", suite_affine_constant_term},
      {"affine-gk-stabilization", suite_affine_gk_stabilization},
      {"dominance-emptiness", suite_dominance_emptiness},
      {"properties", suite_properties},
  };
  return suites;
}

inline SuiteResult run_suite(const SuiteEntry& s, const VerifyOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteResult r = s.run(o);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace gksum
