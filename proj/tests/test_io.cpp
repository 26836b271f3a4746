#include "chevh1/io.hpp"

#include <gtest/gtest.h>

using namespace chevh1;

namespace {

template <class T, class From>
void expect_round_trip(const T& value, From from) {
  const Json j = to_json(value);
  EXPECT_EQ(to_json(from(Json::parse(j.dump()))).dump(), j.dump());
}

}  // namespace

TEST(Io, WeightRoundTripKeepsBigIntegers) {
  Weight w{1, -2, 0};
  w[2] = Integer("123456789012345678901234567890");
  const Json j = to_json(w);
  EXPECT_TRUE(j[2].is_string());
  EXPECT_EQ(weight_from_json(j), w);
}

TEST(Io, H1ResultRoundTrip) {
  const H1Result r = h1_dim(Query{{Family::F, 4}, 13, 1, Weight{0, 0, 0, 2}});
  expect_round_trip(r, h1_result_from_json);
  const Json j = to_json(r);
  EXPECT_EQ(j["status"], "ProvedOne");
  EXPECT_EQ(j["dimension"], 1);
  EXPECT_TRUE(to_json(h1_dim(Query{{Family::E, 7}, 5, 1, Weight{0, 0, 0, 0, 0, 0, 2}}))["dimension"].is_null());
}

TEST(Io, HasseRoundTrip) {
  const RootSystem f4 = RootSystem::build({Family::F, 4});
  expect_round_trip(hasse(f4, f4.fundamental(1), {5, 7, 11, 13}), hasse_from_json);
}

TEST(Io, WeightListingRoundTrip) {
  const RootSystem g2 = RootSystem::build({Family::G, 2});
  const Weight tau{0, 1};
  expect_round_trip(WeightListing{dominant_mults(g2, tau), weight_support(g2, tau)}, weight_listing_from_json);
  expect_round_trip(WeightListing{dominant_mults(g2, tau), {}}, weight_listing_from_json);
}

TEST(Io, ReportRoundTripAndTimings) {
  VerificationReport r{{check_g2_p5(RootSystem::build({Family::G, 2})), check_t3_remark()}};
  r.checks[0].elapsed_seconds = 0.25;
  const Json plain = to_json(r);
  EXPECT_FALSE(plain["checks"][0].contains("elapsed_seconds"));
  EXPECT_EQ(to_json(report_from_json(plain)).dump(), plain.dump());
  const Json timed = to_json(r, true);
  EXPECT_EQ(report_from_json(timed).checks[0].elapsed_seconds, 0.25);
}

TEST(Io, EnvelopeRoundTrip) {
  const OutputEnvelope e{kSchemaVersion, Json{{"command", "h1"}}, Json{{"status", "ProvedZero"}}};
  EXPECT_EQ(envelope_from_json(to_json(e)), e);
  EXPECT_EQ(to_json(e).begin().key(), "schema_version");
}

TEST(Io, DotListsEveryVertexAndEdge) {
  const RootSystem g2 = RootSystem::build({Family::G, 2});
  const HasseDiagram h = hasse(g2, g2.fundamental(1), {5, 7});
  const std::string dot = to_dot(h, "G2");
  EXPECT_EQ(dot.rfind("digraph G2 {", 0), 0u);
  for (std::size_t v = 0; v < h.vertices.size(); ++v) EXPECT_NE(dot.find("v" + std::to_string(v) + " [label="), std::string::npos);
  EXPECT_EQ(static_cast<std::size_t>(std::count(dot.begin(), dot.end(), '>')), h.edges.size());
}

TEST(Io, MarkdownListsCounterexamples) {
  VerificationReport r{{check_restriction_nondivisible(RootSystem::build({Family::A, 2}), 3, 1)}};
  const std::string md = to_markdown(r);
  EXPECT_NE(md.find("Overall: **pass**"), std::string::npos);
  EXPECT_NE(md.find("## Counterexamples"), std::string::npos);
  EXPECT_NE(md.find("(outside hypotheses)"), std::string::npos);
}
