#include <gtest/gtest.h>

#include <random>

#include <gksum/parallel.hpp>
#include <gksum/series.hpp>

using namespace gksum;

namespace {

using FS = FormalSeries<FormalRing>;

FS random_series(std::mt19937& rng, const FormalRing& ring, int n, std::size_t dim, int terms) {
  FS s(ring, n, dim);
  std::uniform_int_distribution<int> coord(0, 3), k(0, ring.order), num(-5, 5), den(1, 4);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> g(dim);
    for (auto& x : g) x = coord(rng);
    Rational c(num(rng), den(rng));
    c.canonicalize();
    s.add_term(CorootVector(g), ring.u_power(k(rng)) * c);
  }
  return s;
}

// Plain convolution over a dense box, as an independent product.
FS naive_product(const FS& a, const FS& b) {
  FS r(a.ring(), a.max_height(), a.dim());
  for (const auto& [ga, ca] : a.terms())
    for (const auto& [gb, cb] : b.terms()) {
      if ((ga + gb).height() > a.max_height()) continue;
      USeries prod(a.ring().order);
      for (int i = 0; i <= a.ring().order; ++i)
        for (int j = 0; i + j <= a.ring().order; ++j) prod[i + j] += ca[i] * cb[j];
      r.add_term(ga + gb, prod);
    }
  return r;
}

}  // namespace

TEST(USeries, ArithmeticAndInverse) {
  const USeries one = USeries::constant(5, 1), u = USeries::monomial(5, 1);
  const USeries a = one - u;
  const USeries inv = a.inverse();
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(inv[k], 1);
  EXPECT_EQ(a * inv, one);
  EXPECT_EQ((u * u).str(), "u^2");
  EXPECT_EQ((one - u - u).str(), "1 - 2u");
  EXPECT_EQ(USeries(3).str(), "0");
  EXPECT_THROW(u.inverse(), std::domain_error);
  EXPECT_THROW(one + USeries::constant(4, 1), std::invalid_argument);
  EXPECT_EQ(USeries::monomial(2, 3).is_zero(), true);
  EXPECT_EQ((one - u).evaluate(Rational(1, 3)), Rational(2, 3));
}

TEST(Rationals, ParseAndRender) {
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  EXPECT_EQ(to_string(parse_rational("-4/2")), "-2");
  EXPECT_EQ(to_string(parse_rational("+7")), "7");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(FormalSeries, RingLaws) {
  std::mt19937 rng(7);
  const FormalRing ring{4};
  for (int t = 0; t < 20; ++t) {
    const auto a = random_series(rng, ring, 5, 3, 6), b = random_series(rng, ring, 5, 3, 6),
               c = random_series(rng, ring, 5, 3, 6);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b - b, a);
    EXPECT_EQ(a * FS::one(ring, 5, 3), a);
    EXPECT_EQ(a * b, naive_product(a, b));
  }
}

TEST(FormalSeries, InverseAndSpecialization) {
  std::mt19937 rng(11);
  const FormalRing ring{4};
  for (int t = 0; t < 10; ++t) {
    auto a = random_series(rng, ring, 5, 2, 5);
    a.add_term(CorootVector(2), ring.constant(3) - a.coefficient(CorootVector(2)));
    EXPECT_EQ(a * invert(a), FS::one(ring, 5, 2));
    const auto b = random_series(rng, ring, 5, 2, 5);
    // Specializing u is a ring map up to the dropped orders; with polynomial inputs of
    // degree <= 2 and order 4 nothing is dropped.
    const auto a2 = truncate(a, 5, 2), b2 = truncate(b, 5, 2);
    FS a4(ring, 5, 2), b4(ring, 5, 2);
    for (const auto& [g, c] : a2.terms()) a4.add_term(g, USeries(4, c.coeffs()));
    for (const auto& [g, c] : b2.terms()) b4.add_term(g, USeries(4, c.coeffs()));
    const Rational u(1, 3);
    EXPECT_EQ(specialize_u(a4 * b4, u), specialize_u(a4, u) * specialize_u(b4, u));
  }
  FS no_unit(ring, 3, 1);
  no_unit.add_term(CorootVector({1}), ring.one());
  EXPECT_THROW(invert(no_unit), std::domain_error);
}

TEST(FormalSeries, GeometricFactors) {
  const FormalRing ring{3};
  const int n = 6;
  const CorootVector b({1, 1});
  const auto gk = gk_factor(b, n, ring);
  const auto fl = flipped_factor(b, n, ring);
  EXPECT_EQ(gk.size(), 4u);  // e^0, e^-b, e^-2b, e^-3b
  EXPECT_EQ(gk.coefficient(CorootVector({2, 2})), ring.one() - ring.u());
  EXPECT_EQ(fl.coefficient(CorootVector({0, 0})), ring.u());
  EXPECT_EQ(fl.coefficient(CorootVector({3, 3})), ring.u() - ring.one());
  // gk_factor(b) (1 - e^-b) = 1 - u e^-b
  auto one_minus = FS::one(ring, n, 2);
  one_minus.add_term(b, ring.zero() - ring.one());
  auto expect = FS::one(ring, n, 2);
  expect.add_term(b, ring.zero() - ring.u());
  EXPECT_EQ(gk * one_minus, expect);
  // flipped_factor(b) (1 - e^-b) = u - e^-b
  auto expect_f = FS::constant(ring, n, 2, ring.u());
  expect_f.add_term(b, ring.zero() - ring.one());
  EXPECT_EQ(fl * one_minus, expect_f);
  // times_geometric agrees with multiplying by the factor
  std::mt19937 rng(3);
  const auto a = random_series(rng, ring, n, 2, 8);
  EXPECT_EQ(a.times_geometric(b, ring.one(), ring.one() - ring.u()), a * gk);
  EXPECT_EQ(a.times_geometric(b, ring.u(), ring.u() - ring.one()), a * fl);
  EXPECT_THROW(gk_factor(CorootVector({0, 0}), n, ring), std::invalid_argument);
  EXPECT_THROW(flipped_factor(CorootVector({1, -1}), n, ring), std::invalid_argument);
}

TEST(FormalSeries, WindowAndKeys) {
  const FormalRing ring{2};
  FS s(ring, 3, 2);
  s.add_term(CorootVector({2, 2}), ring.one());  // above the window: dropped
  EXPECT_TRUE(s.is_zero());
  EXPECT_THROW(s.add_term(CorootVector({1, -1}), ring.one()), std::invalid_argument);
  EXPECT_THROW(s.add_term(CorootVector({1}), ring.one()), std::invalid_argument);
  EXPECT_THROW(s.coefficient(CorootVector({4, 0})), OutOfWindow);
  EXPECT_THROW(FS(ring, -1, 2), std::invalid_argument);
  EXPECT_THROW(s + FS(ring, 4, 2), std::invalid_argument);
  EXPECT_THROW(s + FS(FormalRing{3}, 3, 2), std::invalid_argument);
  s.add_term(CorootVector({1, 0}), ring.u());
  s.add_term(CorootVector({1, 0}), ring.zero() - ring.u());
  EXPECT_TRUE(s.is_zero());
}

TEST(FormalSeries, TruncationIsARingMap) {
  std::mt19937 rng(5);
  const FormalRing big{5};
  for (int t = 0; t < 10; ++t) {
    const auto a = random_series(rng, big, 7, 2, 8), b = random_series(rng, big, 7, 2, 8);
    EXPECT_EQ(truncate(a * b, 4, 3), truncate(a, 4, 3) * truncate(b, 4, 3));
    EXPECT_EQ(truncate(a + b, 4, 3), truncate(a, 4, 3) + truncate(b, 4, 3));
  }
}

TEST(FormalSeries, GradedLexIteration) {
  const FormalRing ring{0};
  FS s(ring, 4, 2);
  for (auto g : {CorootVector({0, 2}), CorootVector({1, 0}), CorootVector({0, 1}), CorootVector({2, 0})})
    s.add_term(g, ring.one());
  std::vector<CorootVector> order;
  for (const auto& [g, c] : s.terms()) order.push_back(g);
  EXPECT_EQ(order, (std::vector<CorootVector>{CorootVector({1, 0}), CorootVector({0, 1}), CorootVector({2, 0}),
                                              CorootVector({0, 2})}));
}

TEST(Parallel, SumIndependentOfThreadCount) {
  const FormalRing ring{3};
  auto f = [&](FS& acc, std::size_t i) {
    acc.add_term(CorootVector({static_cast<int>(i % 4), 0}), ring.u_power(static_cast<int>(i % 3)) * Rational(1, static_cast<long>(i + 1)));
  };
  const FS zero(ring, 5, 2);
  const auto one = parallel_sum(40, 1, zero, f);
  EXPECT_EQ(parallel_sum(40, 3, zero, f), one);
  EXPECT_EQ(parallel_sum(40, 8, zero, f), one);
  EXPECT_THROW(parallel_sum(5, 2, zero, [](FS&, std::size_t) { throw std::runtime_error("x"); }), std::runtime_error);
}
