#include "chevh1/paperchecks.hpp"
#include "chevh1/weyl.hpp"
#include "oracles/lie_oracles.hpp"
#include "oracles/strong_linkage_oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace chevh1;

namespace {

const RootSystemId kSmall[] = {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3},
                               {Family::C, 3}, {Family::D, 4}, {Family::G, 2}, {Family::F, 4}};

Weight random_weight(std::mt19937& gen, Index n, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  Weight w = Weight::Zero(n);
  for (Index i = 0; i < n; ++i) w[i] = d(gen);
  return w;
}

}  // namespace

TEST(Weyl, GroupOrderFromRegularOrbit) {
  const std::pair<RootSystemId, std::size_t> orders[] = {{{Family::A, 3}, 24}, {{Family::B, 3}, 48},  {{Family::C, 3}, 48},
                                                         {{Family::D, 4}, 192}, {{Family::F, 4}, 1152}, {{Family::G, 2}, 12}};
  for (const auto& [id, order] : orders) {
    const RootSystem rs = RootSystem::build(id);
    EXPECT_EQ(orbit(rs, rs.rho()).size(), order) << id.str();
    EXPECT_EQ(oracle::Sys(rs.cartan()).weyl_words().size(), order) << id.str();
  }
}

TEST(Weyl, OrbitMatchesWordEnumeration) {
  std::mt19937 gen(7);
  for (const RootSystemId& id : kSmall) {
    const RootSystem rs = RootSystem::build(id);
    const oracle::Sys sys(rs.cartan());
    const auto words = sys.weyl_words();
    for (int trial = 0; trial < 5; ++trial) {
      const Weight lambda = random_weight(gen, rs.rank(), 3);
      std::set<oracle::LVec> expected;
      for (const auto& w : words) expected.insert(sys.apply(w, lambda.to_longs()));
      std::set<oracle::LVec> got;
      for (const Weight& mu : orbit(rs, lambda)) got.insert(mu.to_longs());
      EXPECT_EQ(got, expected) << id.str() << " " << lambda;
    }
  }
}

TEST(Weyl, OrbitRefusesLargeRank) {
  const RootSystem e8 = RootSystem::build({Family::E, 8});
  EXPECT_THROW(orbit(e8, e8.rho()), OrbitTooLarge);
}

TEST(Weyl, MakeDominantReplaysItsWord) {
  std::mt19937 gen(11);
  for (const RootSystemId& id : kSmall) {
    const RootSystem rs = RootSystem::build(id);
    for (int trial = 0; trial < 50; ++trial) {
      const Weight lambda = random_weight(gen, rs.rank(), 6);
      const Reduced r = make_dominant(rs, lambda);
      EXPECT_TRUE(is_dominant(r.weight));
      EXPECT_EQ(r.word.apply(rs, lambda), r.weight);
      EXPECT_EQ(inner(rs, lambda, lambda), inner(rs, r.weight, r.weight));
    }
  }
}

TEST(Weyl, DualWeightFollowsLongestElement) {
  for (const RootSystemId& id : {RootSystemId{Family::A, 5}, RootSystemId{Family::D, 5}, RootSystemId{Family::E, 6}}) {
    const RootSystem rs = RootSystem::build(id);
    for (Index i = 0; i < rs.rank(); ++i) EXPECT_EQ(dual_weight(rs, rs.fundamental(i)), rs.fundamental(rs.w0_perm()[i]));
  }
}

TEST(Weyl, CanonicalRepresentativeProperties) {
  std::mt19937 gen(2024);
  for (const RootSystemId& id : kSmall) {
    const RootSystem rs = RootSystem::build(id);
    for (long p : {2L, 3L, 5L, 7L}) {
      for (int trial = 0; trial < 40; ++trial) {
        const Weight lambda = random_weight(gen, rs.rank(), 25);
        const Reduced r = dot_canonical_rep(rs, p, lambda);
        ASSERT_TRUE(in_fundamental_alcove(rs, p, r.weight)) << id.str() << " p=" << p << " " << lambda;
        EXPECT_EQ(r.word.apply(rs, lambda), r.weight);
        EXPECT_EQ(dot_canonical_rep(rs, p, r.weight).weight, r.weight);
        EXPECT_TRUE(dot_canonical_rep(rs, p, r.weight).word.empty());
        // |x + rho|^2 is invariant modulo 2p along the W_p dot orbit.
        EXPECT_TRUE(is_integral((norm_shift(rs, lambda) - norm_shift(rs, r.weight)) / Rational(2 * p)));
      }
    }
  }
}

TEST(Weyl, LinkedAgreesWithAffineComponents) {
  for (const RootSystemId& id : {RootSystemId{Family::A, 1}, RootSystemId{Family::A, 2}, RootSystemId{Family::B, 2}}) {
    const RootSystem rs = RootSystem::build(id);
    const oracle::Sys sys(rs.cartan());
    for (long p : {3L, 5L}) {
      oracle::AffineComponents comps(sys, p, 40);
      std::vector<Weight> pts;
      const long B = 6;
      if (rs.rank() == 1)
        for (long a = -B; a <= B; ++a) pts.push_back(Weight{a});
      else
        for (long a = -B; a <= B; ++a)
          for (long b = -B; b <= B; ++b) pts.push_back(Weight{a, b});
      for (const Weight& x : pts)
        for (const Weight& y : pts)
          ASSERT_EQ(linked(rs, p, x, y), comps.same(x.to_longs(), y.to_longs())) << id.str() << " p=" << p << " " << x << " " << y;
    }
  }
}

TEST(Weyl, StrongLinkageMatchesExhaustiveChains) {
  struct Case {
    RootSystemId id;
    long bound;
  };
  for (const Case& c : {Case{{Family::A, 2}, 6}, Case{{Family::B, 2}, 6}, Case{{Family::G, 2}, 5}, Case{{Family::A, 3}, 2},
                        Case{{Family::B, 3}, 2}, Case{{Family::C, 3}, 2}}) {
    const RootSystem rs = RootSystem::build(c.id);
    for (long p : {2L, 3L, 5L}) {
      std::vector<long> coords(static_cast<std::size_t>(rs.rank()), 0);
      for (;;) {
        const Weight lambda(coords);
        auto got = strong_linkage_down(rs, p, lambda);
        auto want = oracle::strong_linkage_exact(rs, p, lambda);
        std::sort(want.begin(), want.end());
        ASSERT_EQ(got, want) << c.id.str() << " p=" << p << " " << lambda;
        std::size_t i = 0;
        while (i < coords.size() && coords[i] == c.bound) coords[i++] = 0;
        if (i == coords.size()) break;
        ++coords[i];
      }
    }
  }
}

TEST(Weyl, StrongLinkageIsBelowAndLinked) {
  const RootSystem e7 = RootSystem::build({Family::E, 7});
  const Weight lambda{0, 0, 0, 1, 0, 0, 0};
  for (long p : {5L, 7L}) {
    for (const Weight& s : strong_linkage_down(e7, p, lambda)) {
      EXPECT_TRUE(is_dominant(s));
      EXPECT_TRUE(linked(e7, p, s, lambda));
      EXPECT_TRUE(weight_to_root_combo(e7, lambda - s)->all_nonnegative());
    }
  }
}

TEST(Weyl, AffineReflectionOfZero) {
  const RootSystem e8 = RootSystem::build({Family::E, 8});
  EXPECT_EQ(dot_reflect(e8, e8.alpha0(), 1, 31, e8.zero_weight()), 2 * e8.fundamental(7));
  const Weight x{1, -2, 0, 3, 0, 0, 1, 0};
  EXPECT_EQ(dot_reflect(e8, 3, 0, 31, dot_reflect(e8, 3, 0, 31, x)), x);
}

TEST(Weyl, G2CorootOrbit) {
  const RootSystem g2 = RootSystem::build({Family::G, 2});
  const auto orb = orbit(g2, g2.coroot(g2.alpha0()));
  EXPECT_EQ(std::set<Coroot>(orb.begin(), orb.end()),
            (std::set<Coroot>{{2, 3}, {-2, -3}, {1, 0}, {-1, 0}, {1, 3}, {-1, -3}}));
}
