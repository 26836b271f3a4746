#include "chevh1/arith.hpp"
#include "chevh1/fixtures.hpp"
#include "chevh1/h1.hpp"
#include "chevh1/paperchecks.hpp"
#include "chevh1/posets.hpp"
#include "chevh1/weyl.hpp"
#include "oracles/lie_oracles.hpp"

#include <gtest/gtest.h>

using namespace chevh1;

namespace {

// Dominant mu has nonnegative root coordinates, so lambda - mu is bounded by the
// (rounded up) root coordinates of lambda.
oracle::LVec theta_box(const RootSystem& rs, const Weight& lambda) {
  oracle::LVec bound(static_cast<std::size_t>(rs.rank()), 0);
  for (Index i = 0; i < rs.rank(); ++i) {
    Rational c = 0;
    for (Index j = 0; j < rs.rank(); ++j) c += rs.cartan_inverse()(i, j) * Rational(lambda[j]);
    const Integer up = (c.get_num() + c.get_den() - 1) / c.get_den();
    bound[static_cast<std::size_t>(i)] = up.get_si();
  }
  return bound;
}

std::set<oracle::LVec> as_set(const std::vector<Weight>& ws) {
  std::set<oracle::LVec> out;
  for (const Weight& w : ws) out.insert(w.to_longs());
  return out;
}

}  // namespace

TEST(Posets, LowerSetMatchesBoxScan) {
  const std::pair<RootSystemId, Weight> cases[] = {
      {{Family::A, 2}, Weight{3, 3}},       {{Family::B, 2}, Weight{2, 3}},    {{Family::G, 2}, Weight{2, 2}},
      {{Family::C, 3}, Weight{1, 1, 2}},    {{Family::B, 3}, Weight{2, 0, 2}}, {{Family::A, 3}, Weight{2, 1, 2}},
      {{Family::D, 4}, Weight{1, 1, 0, 1}}, {{Family::F, 4}, Weight{0, 0, 1, 0}}};
  for (const auto& [id, lambda] : cases) {
    const RootSystem rs = RootSystem::build(id);
    const oracle::Sys sys(rs.cartan());
    const auto got = dominant_lower_set(rs, lambda);
    EXPECT_EQ(as_set(got), oracle::lower_set_box(sys, lambda.to_longs(), theta_box(rs, lambda))) << id.str();
    EXPECT_EQ(got.front(), lambda);
    for (const Weight& mu : got) EXPECT_TRUE(leq(rs, mu, lambda));
    for (std::size_t i = 1; i < got.size(); ++i) EXPECT_GE(weight_height(rs, got[i - 1]), weight_height(rs, got[i]));
  }
}

TEST(Posets, LeqIsAPartialOrder) {
  const RootSystem rs = RootSystem::build({Family::B, 3});
  const auto set = dominant_lower_set(rs, Weight{2, 1, 2});
  for (const Weight& a : set) {
    EXPECT_TRUE(leq(rs, a, a));
    for (const Weight& b : set) {
      if (a != b && leq(rs, a, b)) EXPECT_FALSE(leq(rs, b, a));
      for (const Weight& c : set)
        if (leq(rs, a, b) && leq(rs, b, c)) EXPECT_TRUE(leq(rs, a, c));
    }
  }
  // Different cosets of the root lattice are incomparable.
  EXPECT_FALSE(leq(rs, Weight{0, 0, 1}, Weight{1, 0, 0}));
  EXPECT_FALSE(leq(rs, Weight{1, 0, 0}, Weight{0, 0, 1}));
}

TEST(Posets, HasseEdgesAreExactlyTheCovers) {
  for (const RootSystemId& id : {RootSystemId{Family::E, 6}, RootSystemId{Family::F, 4}, RootSystemId{Family::C, 4},
                                 RootSystemId{Family::G, 2}, RootSystemId{Family::D, 5}}) {
    const RootSystem rs = RootSystem::build(id);
    std::vector<Weight> tops;
    for (Index i = 0; i < rs.rank(); ++i) tops.push_back(rs.fundamental(i));
    const HasseDiagram h = hasse(rs, tops, {5, 7});
    std::set<std::pair<std::size_t, std::size_t>> edges(h.edges.begin(), h.edges.end());
    const auto& v = h.vertices;
    for (std::size_t u = 0; u < v.size(); ++u)
      for (std::size_t l = 0; l < v.size(); ++l) {
        bool cover = u != l && leq(rs, v[l], v[u]);
        for (std::size_t m = 0; cover && m < v.size(); ++m)
          if (m != u && m != l && leq(rs, v[l], v[m]) && leq(rs, v[m], v[u])) cover = false;
        EXPECT_EQ(edges.count({u, l}) == 1, cover) << id.str() << ' ' << v[u] << " > " << v[l];
      }
    ASSERT_EQ(h.annotations.size(), v.size());
  }
}

TEST(Posets, CountsBelowFundamentals) {
  const std::pair<RootSystemId, std::size_t> counts[] = {
      {{Family::E, 6}, 8}, {{Family::E, 7}, 13}, {{Family::E, 8}, 24}, {{Family::F, 4}, 7}, {{Family::G, 2}, 3}};
  for (const auto& [id, n] : counts) EXPECT_EQ(weights_under_fundamentals(RootSystem::build(id)).size(), n) << id.str();
}

TEST(Posets, AnnotationsRespectTheNormInvariant) {
  for (const RootSystemId& id : {RootSystemId{Family::E, 7}, RootSystemId{Family::E, 8}, RootSystemId{Family::F, 4}}) {
    const RootSystem rs = RootSystem::build(id);
    std::vector<Weight> tops;
    for (Index i = 0; i < rs.rank(); ++i) tops.push_back(rs.fundamental(i));
    const HasseDiagram h = hasse(rs, tops, primes_in(5, 31));
    for (std::size_t v = 0; v < h.vertices.size(); ++v)
      for (long p : primes_in(5, 31)) {
        const bool annotated = std::ranges::find(h.annotations[v], p) != h.annotations[v].end();
        EXPECT_EQ(annotated, linked(rs, p, h.vertices[v], rs.zero_weight()));
        if (annotated) EXPECT_TRUE(is_integral(norm_shift(rs, h.vertices[v]) / Rational(2 * p)));
      }
  }
}

TEST(Posets, DiagramsAgreeWithTranscribedFigures) {
  const FixtureStore store;
  for (const char* name : {"E6", "E7", "E8", "F4", "G2"}) {
    const RootSystem rs = RootSystem::build(parse_root_system_id(name));
    const HasseFixture fx = store.hasse(name);
    std::vector<Weight> tops;
    for (Index i = 0; i < rs.rank(); ++i) tops.push_back(rs.fundamental(i));
    const HasseDiagram h = hasse(rs, tops, fx.primes);
    std::set<oracle::LVec> want_vertices;
    for (const auto& vx : fx.vertices) want_vertices.insert(vx.weight.to_longs());
    EXPECT_EQ(as_set(h.vertices), want_vertices) << name;
    std::set<std::pair<oracle::LVec, oracle::LVec>> want_edges, got_edges;
    for (const auto& [a, b] : fx.edges) {
      const bool a_top = leq(rs, b, a);
      want_edges.insert(a_top ? std::pair{a.to_longs(), b.to_longs()} : std::pair{b.to_longs(), a.to_longs()});
    }
    for (const auto& [u, l] : h.edges) got_edges.insert({h.vertices[u].to_longs(), h.vertices[l].to_longs()});
    EXPECT_EQ(got_edges, want_edges) << name;
  }
}

TEST(Posets, Minuscule) {
  auto labels = [](RootSystemId id) {
    std::vector<std::string> out;
    for (const Weight& w : minuscule_list(RootSystem::build(id))) out.push_back(weight_label(w));
    std::ranges::sort(out);
    return out;
  };
  EXPECT_EQ(labels({Family::A, 3}), (std::vector<std::string>{"w1", "w2", "w3"}));
  EXPECT_EQ(labels({Family::B, 4}), (std::vector<std::string>{"w4"}));
  EXPECT_EQ(labels({Family::C, 4}), (std::vector<std::string>{"w1"}));
  EXPECT_EQ(labels({Family::D, 5}), (std::vector<std::string>{"w1", "w4", "w5"}));
  EXPECT_EQ(labels({Family::E, 6}), (std::vector<std::string>{"w1", "w6"}));
  EXPECT_EQ(labels({Family::E, 7}), (std::vector<std::string>{"w7"}));
  EXPECT_TRUE(labels({Family::E, 8}).empty());
  EXPECT_TRUE(labels({Family::F, 4}).empty());
  EXPECT_TRUE(labels({Family::G, 2}).empty());
  const RootSystem e7 = RootSystem::build({Family::E, 7});
  EXPECT_TRUE(is_minuscule(e7, e7.fundamental(6)));
  EXPECT_FALSE(is_minuscule(e7, e7.zero_weight()));
}

TEST(Posets, UnderFundamental) {
  const RootSystem e8 = RootSystem::build({Family::E, 8});
  EXPECT_EQ(under_fundamental(e8, e8.zero_weight()), Index{0});
  EXPECT_EQ(under_fundamental(e8, Weight{0, 0, 0, 0, 0, 0, 0, 2}), Index{2});
  EXPECT_EQ(under_fundamental(e8, Weight{0, 0, 0, 0, 0, 0, 0, 3}), Index{3});
  EXPECT_FALSE(under_fundamental(e8, Weight{0, 0, 0, 2, 0, 0, 0, 0}).has_value());
  const RootSystem a3 = RootSystem::build({Family::A, 3});
  EXPECT_EQ(under_fundamental(a3, Weight{0, 0, 1}), Index{2});
  EXPECT_FALSE(under_fundamental(a3, Weight{1, 0, 1}).has_value());
}
