#include <gtest/gtest.h>

#include <set>

#include <gksum/linalg.hpp>
#include <gksum/weyl.hpp>

using namespace gksum;

TEST(WeylFinite, GroupOrders) {
  struct Case {
    char f;
    int l;
    std::size_t order;
  };
  for (auto c : {Case{'A', 1, 2}, Case{'A', 2, 6}, Case{'A', 3, 24}, Case{'B', 2, 8}, Case{'C', 3, 48},
                 Case{'G', 2, 12}, Case{'D', 4, 192}, Case{'F', 4, 1152}}) {
    const auto t = enumerate_finite(build_root_system(c.f, c.l));
    EXPECT_EQ(t.size(), c.order) << c.f << c.l;
    EXPECT_TRUE(t.complete());
  }
}

TEST(WeylFinite, CountsArePalindromicAndMatchPoincare) {
  for (auto [f, l] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'G', 2}, {'D', 4}}) {
    const auto rs = build_root_system(f, l);
    const auto counts = enumerate_finite(rs).counts_by_length();
    std::vector<long long> rev(counts.rbegin(), counts.rend());
    EXPECT_EQ(counts, rev);
    EXPECT_EQ(counts, rs.finite_poincare) << f << l;
    EXPECT_EQ(counts.size(), rs.finite_positive_roots.size() + 1);
  }
}

TEST(WeylAffine, A1HasTwoElementsOfEachLength) {
  const auto t = enumerate_up_to_length(build_root_system('A', 1, true), 9);
  const auto counts = t.counts_by_length();
  ASSERT_EQ(counts.size(), 10u);
  EXPECT_EQ(counts[0], 1);
  for (std::size_t k = 1; k < counts.size(); ++k) EXPECT_EQ(counts[k], 2);
  EXPECT_FALSE(t.complete());
}

TEST(WeylAffine, A2CountsMatchPoincareProduct) {
  // W_aff(u) = W_fin(u) / prod_i (1 - u^{m_i}) with m = (1, 2): the finite Poincare
  // polynomial (1 + u)(1 + u + u^2) divided by (1 - u)(1 - u^2).
  const int order = 8;
  std::vector<long long> num{1, 2, 2, 1}, series(order + 1, 0);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; 2 * j <= i; ++j) {
      const int k = i - 2 * j;  // 1/(1-u) contributes 1 at every power
      for (int a = 0; a < 4 && a <= k; ++a) series[i] += num[a];
    }
  const auto counts = enumerate_up_to_length(build_root_system('A', 2, true), order).counts_by_length();
  EXPECT_EQ(counts, series);
}

TEST(WeylElements, WordsAreReducedAndMatricesAgree) {
  const auto rs = build_root_system('B', 2, true);
  const auto t = enumerate_up_to_length(rs, 6);
  std::set<IntMatrix> seen;
  for (const auto& w : t.elements()) {
    IntMatrix m = IntMatrix::identity(rs.dim);
    for (int i : w.word) m = m * simple_reflection(rs, i).matrix;
    EXPECT_EQ(m, w.matrix);
    EXPECT_TRUE(seen.insert(w.matrix).second);
    EXPECT_EQ(inverse_matrix(rs, w) * w.matrix, IntMatrix::identity(rs.dim));
  }
}

TEST(WeylElements, InversionCorootsAreFlippedByInverse) {
  for (auto d : {RootSystemDescriptor{'A', 2, false}, RootSystemDescriptor{'G', 2, false},
                 RootSystemDescriptor{'A', 1, true}, RootSystemDescriptor{'A', 2, true}}) {
    const auto rs = build_root_system(d);
    const auto t = d.affine ? enumerate_up_to_length(rs, 6) : enumerate_finite(rs);
    for (const auto& w : t.elements()) {
      const auto inv = inversion_coroots(rs, w);
      EXPECT_EQ(inv.size(), static_cast<std::size_t>(w.length()));
      std::set<CorootVector> distinct(inv.begin(), inv.end());
      EXPECT_EQ(distinct.size(), inv.size());
      const IntMatrix winv = inverse_matrix(rs, w);
      for (const auto& b : inv) {
        EXPECT_TRUE(b.is_nonnegative());
        EXPECT_TRUE(winv.apply(b).is_nonpositive());
      }
    }
  }
}

TEST(WeylElements, FiniteInversionSetIsEveryFlippedPositiveCoroot) {
  const auto rs = build_root_system('B', 3);
  const auto t = enumerate_finite(rs);
  for (const auto& w : t.elements()) {
    const IntMatrix winv = inverse_matrix(rs, w);
    std::set<CorootVector> flipped;
    for (const auto& b : rs.finite_positive_coroots)
      if (winv.apply(b).is_nonpositive()) flipped.insert(b);
    const auto inv = inversion_coroots(rs, w);
    EXPECT_EQ(flipped, std::set<CorootVector>(inv.begin(), inv.end()));
  }
}

TEST(WeylElements, InversionsOfS1S2) {
  const auto rs = build_root_system('A', 2);
  const auto t = enumerate_finite(rs);
  const WeylElement* w = nullptr;
  for (const auto& e : t.elements())
    if (e.word == std::vector<int>{0, 1}) w = &e;
  ASSERT_NE(w, nullptr);
  const auto inv = inversion_coroots(rs, *w);
  EXPECT_EQ(std::set<CorootVector>(inv.begin(), inv.end()),
            (std::set<CorootVector>{CorootVector({1, 0}), CorootVector({1, 1})}));
}

TEST(WeylElements, OffsetAgreesWithMatrixAction) {
  // Finite type: write lambda^v in the coroot basis, apply the matrix, subtract.
  for (auto [f, l] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'C', 3}}) {
    const auto rs = build_root_system(f, l);
    const auto t = enumerate_finite(rs);
    for (const auto& labels : std::vector<std::vector<int>>{{1, 0, 2}, {0, 3, 1}, {2, 2, 2}}) {
      std::vector<int> lab(labels.begin(), labels.begin() + rs.dim);
      std::vector<Rational> rhs(lab.begin(), lab.end());
      const auto coords = rational_solve(rs.cartan, rhs);
      ASSERT_TRUE(coords);
      for (const auto& w : t.elements()) {
        const auto offset = act_on_dominant_coweight(rs, w, DominantCoweight(lab));
        EXPECT_TRUE(offset.is_nonnegative());
        // w(lambda) coordinates = M * coords; offset = coords - M * coords.
        for (std::size_t i = 0; i < rs.dim; ++i) {
          Rational wl = 0;
          for (std::size_t j = 0; j < rs.dim; ++j) wl += Rational(static_cast<long>(w.matrix(i, j))) * (*coords)[j];
          EXPECT_EQ((*coords)[i] - wl, Rational(offset[i]));
        }
      }
    }
  }
}

TEST(WeylElements, OffsetForAffineIsInvariantUnderDeltaShift) {
  // In affine type the coweight pairs to zero with delta; offsets are still in the cone.
  const auto rs = build_root_system('A', 1, true);
  const auto t = enumerate_up_to_length(rs, 5);
  for (const auto& w : t.elements()) {
    const auto off = act_on_dominant_coweight(rs, w, DominantCoweight({2, 3}));
    EXPECT_TRUE(off.is_nonnegative());
    if (w.length() > 0) {
      EXPECT_GT(off.height(), 0);
    }
  }
}

TEST(Stabilizer, PoincareOfParabolic) {
  const auto a2 = build_root_system('A', 2);
  EXPECT_EQ(stabilizer_poincare(a2, DominantCoweight({1, 0}), 5).counts, (std::vector<long long>{1, 1, 0, 0, 0, 0}));
  EXPECT_TRUE(stabilizer_poincare(a2, DominantCoweight({1, 0}), 5).exact);
  EXPECT_EQ(stabilizer_poincare(a2, DominantCoweight({0, 0}), 3).counts, (std::vector<long long>{1, 2, 2, 1}));
  const auto a1a = build_root_system('A', 1, true);
  const auto p = stabilizer_poincare(a1a, DominantCoweight({0, 0}), 4);
  EXPECT_EQ(p.counts, (std::vector<long long>{1, 2, 2, 2, 2}));
  EXPECT_FALSE(p.exact);
  EXPECT_EQ(stabilizer_poincare(a1a, DominantCoweight({0, 3}), 4).counts, (std::vector<long long>{1, 1, 0, 0, 0}));
}

TEST(WeylTableOps, ExtendEqualsFreshEnumeration) {
  const auto rs = build_root_system('A', 2, true);
  auto t = enumerate_up_to_length(rs, 3);
  t.extend(rs, 6);
  const auto fresh = enumerate_up_to_length(rs, 6);
  ASSERT_EQ(t.size(), fresh.size());
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(t[i], fresh[i]);
  EXPECT_EQ(fresh.truncated(3).size(), enumerate_up_to_length(rs, 3).size());
  EXPECT_THROW(fresh.truncated(7), std::invalid_argument);
}

TEST(WeylTableOps, Errors) {
  const auto rs = build_root_system('A', 2);
  EXPECT_THROW(simple_reflection(rs, 2), std::out_of_range);
  EXPECT_THROW(enumerate_finite(build_root_system('A', 2, true)), std::invalid_argument);
  EXPECT_THROW(enumerate_up_to_length(rs, -1), std::invalid_argument);
}
