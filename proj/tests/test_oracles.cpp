#include <gtest/gtest.h>

#include <gksum/oracles/freudenthal.hpp>
#include <gksum/oracles/laurent_ff.hpp>
#include <gksum/oracles/sl2.hpp>

using namespace gksum;
using namespace gksum::oracles;

namespace {

// Weyl dimension formula for the representation of the dual group with highest weight lambda^v:
// prod over positive roots a of <lambda^v + rho^v, a> / <rho^v, a>.
Rational weyl_dimension(const RootSystem& rs, const DominantCoweight& lam) {
  Rational d = 1;
  for (const auto& a : rs.finite_positive_roots) {
    long num = 0, den = 0;
    for (std::size_t i = 0; i < rs.dim; ++i) {
      num += static_cast<long>(a[i]) * (lam[i] + 1);
      den += a[i];
    }
    d *= Rational(num, den);
  }
  d.canonicalize();
  return d;
}

}  // namespace

TEST(Freudenthal, SmallRepresentations) {
  const auto a2 = build_root_system('A', 2);
  const auto adj = freudenthal(a2, DominantCoweight({1, 1}));
  EXPECT_EQ(adj.dimension(), 8);
  EXPECT_EQ(adj.multiplicity(CorootVector({1, 1})), 2);  // zero weight
  EXPECT_EQ(adj.multiplicity(CorootVector({0, 0})), 1);
  EXPECT_EQ(adj.multiplicity(CorootVector({2, 2})), 1);
  EXPECT_EQ(adj.multiplicity(CorootVector({3, 3})), 0);
  const auto g2 = build_root_system('G', 2);
  EXPECT_EQ(freudenthal(g2, DominantCoweight({1, 0})).dimension() + freudenthal(g2, DominantCoweight({0, 1})).dimension(),
            21);
  EXPECT_EQ(freudenthal(build_root_system('A', 1), DominantCoweight({3})).dimension(), 4);
  EXPECT_EQ(freudenthal(a2, DominantCoweight({0, 0})).dimension(), 1);
}

TEST(Freudenthal, DimensionsMatchWeylFormula) {
  for (auto [f, l] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}, {'C', 3}}) {
    const auto rs = build_root_system(f, l);
    std::vector<int> lab(rs.dim, 0);
    for (;;) {
      const DominantCoweight lam(lab);
      EXPECT_EQ(Rational(static_cast<long>(freudenthal(rs, lam).dimension())), weyl_dimension(rs, lam))
          << f << l << " " << lam.str();
      std::size_t i = 0;
      while (i < lab.size() && ++lab[i] > 2) lab[i++] = 0;
      if (i == lab.size()) break;
    }
  }
}

TEST(Freudenthal, MultiplicitiesAreWeylInvariant) {
  // s_i(lambda^v - gamma) = lambda^v - gamma' with gamma' = gamma + (label_i - <a_i, gamma>) e_i.
  for (auto [f, l] : std::vector<std::pair<char, int>>{{'B', 2}, {'G', 2}, {'A', 3}}) {
    const auto rs = build_root_system(f, l);
    std::vector<int> lab(rs.dim, 1);
    lab[0] = 2;
    const DominantCoweight lam(lab);
    const auto t = freudenthal(rs, lam);
    for (const auto& [g, m] : t.multiplicities)
      for (std::size_t i = 0; i < rs.dim; ++i) {
        CorootVector g2 = g;
        g2[i] += lam[i] - static_cast<int>(rs.pairing(i, g));
        EXPECT_EQ(t.multiplicity(g2), m) << f << l << " " << g.str();
      }
  }
}

TEST(Freudenthal, ErrorsOnAffine) {
  EXPECT_THROW(freudenthal(build_root_system('A', 2, true), DominantCoweight({0, 0, 0})), std::invalid_argument);
}

TEST(LaurentFF, Arithmetic) {
  const int q = 5, p = 6;
  const auto one = LaurentFF::monomial(q, 0, 1, p);
  const auto pi = LaurentFF::monomial(q, 1, 1, p);
  const auto x = one + pi;  // 1 + pi
  const auto inv = x.inverse();
  for (int k = 0; k < p; ++k) EXPECT_EQ(inv.digit(k), k % 2 == 0 ? 1 : q - 1);
  EXPECT_EQ(x * inv, one);
  const auto y = LaurentFF::from_digits(q, -2, {3, 0, 4}, p);
  EXPECT_EQ(y.valuation(), -2);
  EXPECT_FALSE(y.is_integral());
  EXPECT_EQ((y * y.inverse()).valuation(), 0);
  EXPECT_TRUE((y * y.inverse() - one).is_zero());
  EXPECT_EQ((y - y).is_zero(), true);
  EXPECT_EQ(LaurentFF::monomial(q, 0, 3, p) + LaurentFF::monomial(q, 0, 4, p), LaurentFF::monomial(q, 0, 2, p));
  EXPECT_EQ((-one).digit(0), q - 1);
  EXPECT_THROW(LaurentFF(4, 3), std::invalid_argument);
  EXPECT_THROW(LaurentFF(q, 3).inverse(), std::domain_error);
  EXPECT_THROW(one + LaurentFF::monomial(3, 0, 1, p), std::invalid_argument);
}

TEST(SL2, CountsMatchRankOneValues) {
  {
    const auto r = sl2_gk_coefficient(3, 2);
    EXPECT_EQ(r.count, 6);
    EXPECT_EQ(r.normalized, Rational(2, 3));
    EXPECT_TRUE(r.witnesses_ok);
  }
  {
    const auto r = sl2_gk_coefficient(2, 3);
    EXPECT_EQ(r.count, 4);
    EXPECT_EQ(r.normalized, Rational(1, 2));
    EXPECT_TRUE(r.witnesses_ok);
  }
  for (int q : {2, 3, 5})
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(sl2_gk_coefficient(q, n).normalized, Rational(q - 1, q)) << q << n;
}

TEST(SL2, HistogramByValuation) {
  // Representatives of valuation -k land on mu = -k alpha^v; there are (q-1) q^{k-1} of them.
  const int q = 3, n = 3;
  const auto r = sl2_gk_coefficient(q, n);
  long long total = 0;
  for (const auto& [c, m] : r.histogram) total += m;
  EXPECT_EQ(total, 27);
  EXPECT_EQ(r.histogram.at(0), 1);
  for (int k = 1; k <= n; ++k) {
    long long expect = q - 1;
    for (int i = 1; i < k; ++i) expect *= q;
    EXPECT_EQ(r.histogram.at(-k), expect);
  }
  EXPECT_EQ(r.histogram.count(-n - 1), 0u);
  EXPECT_EQ(r.histogram.count(1), 0u);
}

TEST(SL2, WitnessesAndPerturbation) {
  const int q = 5, p = 8;
  const auto s = LaurentFF::from_digits(q, -3, {2, 1, 4}, p);
  const auto w = sl2_iwasawa(s);
  EXPECT_EQ(w.coeff, -3);
  EXPECT_TRUE(verify_witness(s, w));
  // Adding an integral element does not change the double coset.
  const auto t = s + LaurentFF::from_digits(q, 0, {1, 3, 2}, p);
  const auto wt = sl2_iwasawa(t);
  EXPECT_EQ(wt.coeff, w.coeff);
  EXPECT_TRUE(verify_witness(t, wt));
  const auto integral = LaurentFF::from_digits(q, 0, {4, 1}, p);
  EXPECT_EQ(sl2_iwasawa(integral).coeff, 0);
  EXPECT_TRUE(verify_witness(integral, sl2_iwasawa(integral)));
  // A wrong witness is rejected.
  auto bad = w;
  bad.h = w.x;
  EXPECT_FALSE(verify_witness(s, bad));
}

TEST(SL2, Errors) {
  EXPECT_THROW(sl2_gk_coefficient(4, 2), std::invalid_argument);
  EXPECT_THROW(sl2_gk_coefficient(3, 0), std::invalid_argument);
  EXPECT_THROW(sl2_gk_coefficient(3, 2, 2), std::invalid_argument);
}
