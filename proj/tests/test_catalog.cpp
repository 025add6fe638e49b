#include "symcd/catalog.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

namespace symcd {
namespace {

NSClass lin(Ambient amb, Rational t, Rational x) { return NSClass::theta(amb) * t + NSClass::x(amb) * x; }

// Coefficient-by-coefficient construction of gamma_d(g^r_n) with 64-bit
// falling factorials, independent of symcd::binomial.
NSClass gamma_oracle(Ambient amb, int n, int r) {
  NSClass out(amb);
  const long long top = n - amb.g() - r;
  for (int j = 0; j <= amb.d() - r; ++j) {
    long long falling = 1, jfact = 1, rest = 1;
    for (int i = 0; i < j; ++i) falling *= top - i;
    for (int i = 2; i <= j; ++i) jfact *= i;
    for (int i = 2; i <= amb.d() - r - j; ++i) rest *= i;
    out += NSClass::monomial(amb, j, amb.d() - r - j, Rational(falling) / Rational(jfact * rest));
  }
  return out;
}

TEST(SubordinateClass, PencilOnC4) {
  const Ambient amb(6, 4);
  const NSClass expected = NSClass::monomial(amb, 0, 3, Rational(1, 6)) - NSClass::monomial(amb, 1, 2) +
                           NSClass::monomial(amb, 2, 1, 3) - NSClass::monomial(amb, 3, 0, 4);
  EXPECT_EQ(subordinate_class(amb, {5, 1}), expected);
  EXPECT_EQ(subordinate_class(amb, {5, 1}).pure_degree(), 3);
}

TEST(SubordinateClass, MatchesFallingFactorialOracle) {
  for (int g = 2; g <= 12; ++g)
    for (int d = 1; d <= g; ++d)
      for (int r = 0; r <= d; ++r)
        for (int n = d; n <= d + 4; ++n) EXPECT_EQ(subordinate_class(Ambient(g, d), {n, r}), gamma_oracle(Ambient(g, d), n, r));
}

TEST(SubordinateClass, FullDimensionalSeriesIsFundamentalClass) {
  for (int g = 2; g <= 10; ++g)
    for (int d = 1; d <= g + 2; ++d) EXPECT_EQ(subordinate_class(Ambient(g, d), {d + 3, d}), NSClass::constant(Ambient(g, d), 1));
}

TEST(SubordinateClass, CodimensionOne) {
  for (int g = 2; g <= 10; ++g)
    for (int d = 1; d <= g; ++d)
      for (int n = d; n <= d + 5; ++n) {
        const Ambient amb(g, d);
        EXPECT_EQ(subordinate_class(amb, {n, d - 1}), lin(amb, 1, n - g - d + 1));
      }
}

TEST(SubordinateClass, Constraints) {
  const Ambient amb(6, 4);
  EXPECT_THROW(subordinate_class(amb, {3, 1}), std::invalid_argument);
  EXPECT_THROW(subordinate_class(amb, {8, 5}), std::invalid_argument);
  try {
    subordinate_class(amb, {3, 1});
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("series/degree constraint"), std::string::npos);
  }
}

TEST(SubordinateClass, PencilPairingsOnCd) {
  // theta.gamma_d(g^1_d) = 0 and x.gamma_d(g^1_d) = 1.
  for (int g = 2; g <= 20; ++g)
    for (int d = 2; d <= g; ++d) {
      const Ambient amb(g, d);
      const NSClass gamma = subordinate_class(amb, {d, 1});
      EXPECT_EQ(pair(NSClass::theta(amb), gamma), 0) << g << "," << d;
      EXPECT_EQ(pair(NSClass::x(amb), gamma), 1) << g << "," << d;
    }
}

TEST(DiagonalClass, Examples) {
  EXPECT_EQ(diagonal_class(Ambient(6, 4)), lin(Ambient(6, 4), -2, 18));
  EXPECT_EQ(diagonal_class(Ambient(5, 3)), lin(Ambient(5, 3), -2, 14));
  EXPECT_EQ(diagonal_class(Ambient(2, 2)), lin(Ambient(2, 2), -2, 6));
  EXPECT_THROW(diagonal_class(Ambient(4, 1)), std::invalid_argument);
}

TEST(C1dClass, Examples) {
  const Ambient a5(6, 5), a4(6, 4);
  EXPECT_EQ(c1d_class(a5), NSClass::monomial(a5, 0, 2, Rational(1, 2)) - NSClass::monomial(a5, 1, 1));
  EXPECT_EQ(c1d_class(a4), NSClass::monomial(a4, 0, 3, Rational(1, 6)) - NSClass::monomial(a4, 1, 2, Rational(1, 2)));
  for (int g = 2; g <= 10; ++g) EXPECT_EQ(c1d_class(Ambient(g, g)), lin(Ambient(g, g), 1, -1));
  try {
    c1d_class(Ambient(6, 3));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "class degree exceeds dimension");
  }
}

TEST(PushPull, KZeroIsIdentity) {
  testing::Gen gen(21);
  for (int t = 0; t < 100; ++t) {
    const Ambient amb = gen.evaluable_ambient();
    const NSClass c = gen.pure(amb, gen.uniform(0, amb.d()));
    EXPECT_EQ(pushpull(0, c), c);
  }
}

TEST(PushPull, PureXPowers) {
  for (int g = 2; g <= 12; ++g)
    for (int d = 2; d <= g + 2; ++d)
      for (int a = 0; a <= d; ++a)
        for (int k = 0; k < d; ++k) {
          const NSClass out = pushpull(k, NSClass::monomial(Ambient(g, d), a, 0));
          EXPECT_EQ(out, NSClass::monomial(Ambient(g, d - k), a - k < 0 ? 0 : a - k, 0, Rational(binomial(a, k))));
        }
}

TEST(PushPull, PencilLocusOnCgMinus2) {
  for (int g = 4; g <= 40; ++g) {
    const NSClass out = pushpull(1, c1d_class(Ambient(g, g - 1)));
    EXPECT_EQ(out, lin(Ambient(g, g - 2), g - 2, -g)) << g;
  }
}

TEST(PushPull, HandExpansionG6) {
  // B_1(theta^2/2) = 5 theta, B_1(x theta) = theta + 6x.
  const Ambient a5(6, 5), a4(6, 4);
  EXPECT_EQ(pushpull(1, NSClass::monomial(a5, 0, 2, Rational(1, 2))), lin(a4, 5, 0));
  EXPECT_EQ(pushpull(1, NSClass::monomial(a5, 1, 1)), lin(a4, 1, 6));
}

TEST(PushPull, Errors) {
  const Ambient amb(6, 4);
  EXPECT_THROW(pushpull(-1, NSClass::x(amb)), std::invalid_argument);
  EXPECT_THROW(pushpull(4, NSClass::x(amb)), std::invalid_argument);
  EXPECT_THROW(pushpull(1, NSClass::x(amb) + NSClass::constant(amb, 1)), std::invalid_argument);
}

TEST(PushPull, Linear) {
  testing::Gen gen(23);
  for (int t = 0; t < 300; ++t) {
    const Ambient amb(gen.uniform(2, 14), gen.uniform(2, 12));
    const int deg = gen.uniform(0, amb.d());
    const int k = gen.uniform(0, amb.d() - 1);
    const NSClass a = gen.pure(amb, deg), b = gen.pure(amb, deg);
    const Rational s = gen.rational();
    EXPECT_EQ(pushpull(k, a + b * s), pushpull(k, a) + pushpull(k, b) * s);
  }
}

TEST(DmClass, Examples) {
  EXPECT_EQ(dm_class(6, 1), lin(Ambient(6, 4), 4, -6));
  EXPECT_EQ(dm_class(8, 2), lin(Ambient(8, 4), 14, -28));
  for (int g = 4; g <= 30; ++g) EXPECT_EQ(dm_class(g, 1), lin(Ambient(g, g - 2), g - 2, -g));
  EXPECT_THROW(dm_class(6, 0), std::invalid_argument);
  EXPECT_THROW(dm_class(6, 3), std::invalid_argument);
  EXPECT_THROW(dm_class(7, 3), std::invalid_argument);
}

TEST(SystemC1, Examples) {
  EXPECT_EQ(system_c1(Ambient(6, 4), {2, 15, 8}), lin(Ambient(6, 4), 2, -3));
  for (int g = 5; g <= 30; ++g) {
    const Ambient amb(g, g - 2);
    EXPECT_EQ(system_c1(amb, {g - 2, 2 * g * g - 8 * g + 7, (g - 2) * (g - 2)}), lin(amb, g - 2, -(g - 1)));
  }
  try {
    system_c1(Ambient(6, 4), {2, 15, 7});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("not a virtual divisor configuration"), std::string::npos);
  }
}

TEST(SystemC1, RankOneMatchesSubordinateClass) {
  for (int g = 3; g <= 25; ++g)
    for (int d = 2; d <= g - 1; ++d)
      for (int n = d; n <= 2 * g; ++n) {
        const Ambient amb(g, d);
        EXPECT_EQ(system_c1(amb, {1, n, d}), subordinate_class(amb, {n, d - 1}));
      }
}

TEST(ChernCharacter, LowDegreeParts) {
  const Ambient amb(6, 4);
  const NSClass ch = chern_character(amb, 2, 15, 2);
  EXPECT_EQ(ch.part(0), NSClass::constant(amb, 8));
  EXPECT_EQ(ch.part(1), lin(amb, 2, -3));
  // (rd + rg - f - r)/2 x^2 - r x theta
  EXPECT_EQ(ch.part(2), NSClass::monomial(amb, 2, 0, Rational(3, 2)) - NSClass::monomial(amb, 1, 1, 2));
}

TEST(ChernCharacter, MatchesTermwiseExpansion) {
  // (f + r(1-g)) + A e^{-x} + r theta e^{-x}, A = rd + rg - f - r, written out
  // coefficient by coefficient.
  testing::Gen gen(29);
  for (int t = 0; t < 200; ++t) {
    const Ambient amb(gen.uniform(2, 15), gen.uniform(1, 10));
    const int r = gen.uniform(1, 8), f = gen.uniform(-50, 80), top = gen.uniform(0, amb.d());
    const int g = amb.g(), d = amb.d();
    const Rational A = r * d + r * g - f - r;
    NSClass expected(amb);
    expected += NSClass::constant(amb, f + r * (1 - g));
    Rational kfact = 1;
    for (int k = 0; k <= top; ++k) {
      if (k > 0) kfact *= k;
      const Rational sign = k % 2 == 0 ? 1 : -1;
      expected += NSClass::monomial(amb, k, 0, A * sign / kfact);
      if (k + 1 <= top) expected += NSClass::monomial(amb, k, 1, Rational(r) * sign / kfact);
    }
    EXPECT_EQ(chern_character(amb, r, f, top), expected);
  }
}

TEST(ChernCharacter, RankAndFirstChernClass) {
  testing::Gen gen(31);
  for (int t = 0; t < 250; ++t) {
    const int g = gen.uniform(2, 30), d = gen.uniform(1, 30), r = gen.uniform(1, 10), f = gen.uniform(-100, 200);
    const Ambient amb(g, d);
    const NSClass ch = chern_character(amb, r, f, 1);
    EXPECT_EQ(ch.part(0), NSClass::constant(amb, r * d));
    EXPECT_EQ(ch.part(1), system_c1(amb, {r, f, r * d}));
  }
  EXPECT_THROW(chern_character(Ambient(6, 4), 2, 15, 5), std::invalid_argument);
}

TEST(KernelBundle, Examples) {
  EXPECT_EQ(kernel_bundle({5, 3}), (BundleNumbers{2, -5}));
  for (int g = 3; g <= 20; ++g) EXPECT_EQ(kernel_bundle({2 * g - 3, g - 1}), (BundleNumbers{g - 2, -(2 * g - 3)}));
  EXPECT_EQ(kernel_bundle({7, 2}), (BundleNumbers{1, -7}));
  EXPECT_THROW(kernel_bundle({3, 1}), std::invalid_argument);
}

TEST(H1Rules, PencilRuleAndDimensionCount) {
  for (int g = 5; g <= 40; ++g) EXPECT_EQ(h1_from_pencil_rule({2 * g - 3, g - 1}), g - 1);
  EXPECT_EQ(h1_from_pencil_rule({6, 3}), std::nullopt);
  EXPECT_EQ(h1_from_pencil_rule({3, 2}), std::nullopt);
  // chi(K_C (x) M_Q) = 15 + 2(1 - 6) = 5, and dim V = 2*4 = 8.
  EXPECT_EQ(h1_from_dimension(6, {5, 3}, 4), 3);
  EXPECT_EQ(h1_from_pencil_rule({5, 3}), 3);
}

TEST(TwistedKernelClass, PlaneQuintic) {
  const auto tk = twisted_kernel_class(6, {5, 3}, 3);
  EXPECT_EQ(tk.ambient, Ambient(6, 4));
  EXPECT_EQ(tk.system.rank, 2);
  EXPECT_EQ(tk.system.degree, 15);
  EXPECT_EQ(tk.cls, lin(Ambient(6, 4), 2, -3));
}

TEST(TwistedKernelClass, CanonicalMinusPoint) {
  for (int g = 5; g <= 40; ++g) {
    const auto tk = twisted_kernel_class(g, {2 * g - 3, g - 1}, g - 1);
    EXPECT_EQ(tk.ambient, Ambient(g, g - 2));
    EXPECT_EQ(tk.system.degree, 2 * g * g - 8 * g + 7);
    EXPECT_EQ(tk.cls, lin(Ambient(g, g - 2), g - 2, -(g - 1)));
  }
}

TEST(TwistedKernelClass, WrongH1FailsDimensionCondition) {
  for (int delta : {-1, 1}) {
    EXPECT_THROW(twisted_kernel_class(6, {5, 3}, 3 + delta), std::invalid_argument);
    for (int g = 5; g <= 20; ++g)
      EXPECT_THROW(twisted_kernel_class(g, {2 * g - 3, g - 1}, g - 1 + delta), std::invalid_argument);
  }
}

TEST(BrillNoether, Rho) {
  EXPECT_EQ(brill_noether_rho(6, 1, 5), 2);
  for (int g = 2; g <= 30; ++g) {
    EXPECT_EQ(brill_noether_rho(g, 1, g - 1), g - 4);
    EXPECT_EQ(brill_noether_rho(g, 0, g), g);
  }
  EXPECT_THROW(brill_noether_rho(0, 1, 1), std::invalid_argument);
}

TEST(MultDegeneracyClass, Examples) {
  EXPECT_EQ(mult_degeneracy_class(6, 4, 2), lin(Ambient(6, 4), 2, -3));
  EXPECT_EQ(mult_degeneracy_class(5, 3, 2), lin(Ambient(5, 3), 2, -3));
  const auto t = mult_degeneracy_terms(6, 4, 2);
  EXPECT_EQ(t.c1_g, lin(Ambient(6, 4), -1, -6));
  EXPECT_EQ(t.inverse_canonical, lin(Ambient(6, 4), -1, -1));
  EXPECT_THROW(mult_degeneracy_class(6, 4, 1), std::invalid_argument);
  EXPECT_THROW(mult_degeneracy_class(6, 1, 3), std::invalid_argument);
  EXPECT_THROW(mult_degeneracy_class(6, 6, 3), std::invalid_argument);
}

TEST(MultDegeneracyClass, Sweep) {
  for (int g = 3; g <= 40; ++g)
    for (int d = 2; d <= g - 1; ++d)
      for (int r = 1; r <= 8; ++r) {
        if (r * (g - d) < d) continue;
        EXPECT_EQ(mult_degeneracy_class(g, d, r), lin(Ambient(g, d), r, -(r + 1)));
      }
}

}  // namespace
}  // namespace symcd
