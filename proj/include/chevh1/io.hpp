#pragma once

// Machine (JSON) and human (text, Markdown, DOT) renderings of results.
//
// JSON is the interchange format: every result type converts to JSON and back
// without loss, and the conversion is deterministic (fixed key order via
// nlohmann::ordered_json), so equal values give byte-identical output.

#include "chevh1/charweights.hpp"
#include "chevh1/h1.hpp"
#include "chevh1/paperchecks.hpp"
#include "chevh1/posets.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace chevh1 {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

/// {schema_version, query, result}.
struct OutputEnvelope {
  std::string schema_version = kSchemaVersion;
  Json query;
  Json result;

  friend bool operator==(const OutputEnvelope&, const OutputEnvelope&) = default;
};

Json to_json(const OutputEnvelope& e);
OutputEnvelope envelope_from_json(const Json& j);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json to_json(const H1Result& r);
H1Result h1_result_from_json(const Json& j);

Json to_json(const HasseDiagram& h);
HasseDiagram hasse_from_json(const Json& j);

struct WeightListing {
  WeightMultiplicityTable table;
  std::vector<SupportEntry> support;  // empty when only dominant multiplicities were computed
};
Json to_json(const WeightListing& w);
WeightListing weight_listing_from_json(const Json& j);

/// Elapsed times are included only on request so that reports stay reproducible.
Json to_json(const VerificationReport& r, bool timings = false);
VerificationReport report_from_json(const Json& j);

std::string to_text(const Query& q, const H1Result& r);
std::string to_text(const WeightListing& w);
std::string to_markdown(const VerificationReport& r, bool timings = false);
/// One node per vertex labelled by its coordinates; edges point downwards;
/// linked-to-zero primes in a `linked="p1,p2"` attribute.
std::string to_dot(const HasseDiagram& h, const std::string& name = "hasse");

}  // namespace chevh1
