#include "chevh1/io.hpp"

#include <iomanip>
#include <sstream>

namespace chevh1 {

namespace {

// Integers that fit a machine word are JSON numbers; larger ones are decimal strings.
Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long>());
}

template <class Tag>
Json lattice_json(const LatticeVector<Tag>& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(to_json(v[i]));
  return a;
}

template <class V>
V lattice_from_json(const Json& j) {
  V v = V::Zero(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Index>(i)] = integer_from_json(j[i]);
  return v;
}

Json pairs_json(const std::vector<std::pair<std::string, std::string>>& pairs) {
  Json a = Json::array();
  for (const auto& [k, v] : pairs) a.push_back(Json::array({k, v}));
  return a;
}

std::vector<std::pair<std::string, std::string>> pairs_from_json(const Json& j) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& kv : j) out.emplace_back(kv.at(0).get<std::string>(), kv.at(1).get<std::string>());
  return out;
}

H1Status status_from_string(const std::string& s) {
  for (H1Status st : {H1Status::ProvedZero, H1Status::ProvedOne, H1Status::OpenCase, H1Status::OutOfScope})
    if (to_string(st) == s) return st;
  throw std::invalid_argument("unknown H1 status " + s);
}

CheckStatus check_status_from_string(const std::string& s) {
  for (CheckStatus st : {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::Informational})
    if (to_string(st) == s) return st;
  throw std::invalid_argument("unknown check status " + s);
}

std::string join(const std::vector<long>& xs, const char* sep) {
  std::string out;
  for (long x : xs) out += (out.empty() ? "" : sep) + std::to_string(x);
  return out;
}

}  // namespace

Json to_json(const OutputEnvelope& e) {
  return Json{{"schema_version", e.schema_version}, {"query", e.query}, {"result", e.result}};
}

OutputEnvelope envelope_from_json(const Json& j) {
  return {j.at("schema_version").get<std::string>(), j.at("query"), j.at("result")};
}

Json to_json(const Weight& w) { return lattice_json(w); }
Weight weight_from_json(const Json& j) { return lattice_from_json<Weight>(j); }

Json to_json(const H1Result& r) {
  Json trace = Json::array();
  for (const auto& t : r.trace) trace.push_back(Json{{"rule", t.rule}, {"fired", t.fired}, {"detail", t.detail}});
  const auto dim = r.dimension();
  return Json{{"status", to_string(r.status)},
              {"dimension", dim ? Json(*dim) : Json(nullptr)},
              {"rule", r.rule},
              {"trace", trace}};
}

H1Result h1_result_from_json(const Json& j) {
  H1Result r;
  r.status = status_from_string(j.at("status").get<std::string>());
  r.rule = j.at("rule").get<std::string>();
  for (const auto& t : j.at("trace")) r.trace.push_back({t.at("rule").get<std::string>(), t.at("fired").get<bool>(), t.at("detail").get<std::string>()});
  return r;
}

Json to_json(const HasseDiagram& h) {
  Json vertices = Json::array();
  for (std::size_t v = 0; v < h.vertices.size(); ++v)
    vertices.push_back(Json{{"label", weight_label(h.vertices[v])}, {"weight", to_json(h.vertices[v])}, {"linked", h.annotations[v]}});
  Json edges = Json::array();
  for (const auto& [u, l] : h.edges) edges.push_back(Json::array({u, l}));
  return Json{{"primes", h.primes}, {"vertices", vertices}, {"edges", edges}};
}

HasseDiagram hasse_from_json(const Json& j) {
  HasseDiagram h;
  h.primes = j.at("primes").get<std::vector<long>>();
  for (const auto& v : j.at("vertices")) {
    h.vertices.push_back(weight_from_json(v.at("weight")));
    h.annotations.push_back(v.at("linked").get<std::vector<long>>());
  }
  for (const auto& e : j.at("edges")) h.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  return h;
}

Json to_json(const WeightListing& w) {
  Json dominant = Json::array();
  for (const auto& [mu, m] : w.table.dominant_mults)
    dominant.push_back(Json{{"weight", to_json(mu)}, {"label", weight_label(mu)}, {"mult", to_json(m)}});
  Json support = Json::array();
  for (const auto& s : w.support)
    support.push_back(Json{{"nu", to_json(s.nu)}, {"theta", lattice_json(s.theta)}, {"mult", to_json(s.mult)}});
  return Json{{"highest", to_json(w.table.highest)},
              {"dimension", to_json(w.table.total_dim)},
              {"dominant", dominant},
              {"support", support}};
}

WeightListing weight_listing_from_json(const Json& j) {
  WeightListing w;
  w.table.highest = weight_from_json(j.at("highest"));
  w.table.total_dim = integer_from_json(j.at("dimension"));
  for (const auto& d : j.at("dominant")) w.table.dominant_mults.emplace_back(weight_from_json(d.at("weight")), integer_from_json(d.at("mult")));
  for (const auto& s : j.at("support"))
    w.support.push_back({weight_from_json(s.at("nu")), lattice_from_json<RootCombo>(s.at("theta")), integer_from_json(s.at("mult"))});
  return w;
}

Json to_json(const VerificationReport& r, bool timings) {
  Json checks = Json::array();
  for (const CheckEntry& c : r.checks) {
    Json scope{{"system", c.scope.system},
               {"p", c.scope.p ? Json(*c.scope.p) : Json(nullptr)},
               {"r", c.scope.r ? Json(*c.scope.r) : Json(nullptr)},
               {"weights", c.scope.weights}};
    Json ces = Json::array();
    for (const Counterexample& ce : c.counterexamples)
      ces.push_back(Json{{"fields", pairs_json(ce.fields)}, {"within_hypotheses", ce.within_hypotheses}});
    Json entry{{"id", c.id},
               {"scope", scope},
               {"within_hypotheses", c.within_hypotheses},
               {"status", to_string(c.status)},
               {"counterexamples", ces},
               {"observations", pairs_json(c.observations)}};
    if (timings) entry["elapsed_seconds"] = c.elapsed_seconds;
    checks.push_back(std::move(entry));
  }
  return Json{{"passed", r.passed()}, {"checks", checks}};
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  for (const auto& c : j.at("checks")) {
    CheckEntry e;
    e.id = c.at("id").get<std::string>();
    const Json& s = c.at("scope");
    e.scope.system = s.at("system").get<std::string>();
    if (!s.at("p").is_null()) e.scope.p = s.at("p").get<long>();
    if (!s.at("r").is_null()) e.scope.r = s.at("r").get<int>();
    e.scope.weights = s.at("weights").get<std::string>();
    e.within_hypotheses = c.at("within_hypotheses").get<bool>();
    e.status = check_status_from_string(c.at("status").get<std::string>());
    for (const auto& ce : c.at("counterexamples"))
      e.counterexamples.push_back({pairs_from_json(ce.at("fields")), ce.at("within_hypotheses").get<bool>()});
    e.observations = pairs_from_json(c.at("observations"));
    if (c.contains("elapsed_seconds")) e.elapsed_seconds = c.at("elapsed_seconds").get<double>();
    r.checks.push_back(std::move(e));
  }
  return r;
}

std::string to_text(const Query& q, const H1Result& r) {
  std::ostringstream os;
  os << "H^1(" << q.system.str() << "(F_" << q.p;
  if (q.r > 1) os << '^' << q.r;
  os << "), L(" << weight_label(q.lambda) << ")) : ";
  if (auto d = r.dimension())
    os << "dimension " << *d;
  else
    os << to_string(r.status);
  os << "\nrule: " << r.rule << '\n';
  // Each detail states the condition tested; yes means it held and decided the result.
  for (const auto& t : r.trace) os << (t.fired ? "  yes " : "  no  ") << t.rule << ": " << t.detail << '\n';
  return os.str();
}

std::string to_text(const WeightListing& w) {
  std::ostringstream os;
  os << "H0(" << weight_label(w.table.highest) << "), dimension " << w.table.total_dim.get_str() << '\n';
  if (w.support.empty()) {
    os << std::left << std::setw(24) << "dominant weight" << "mult\n";
    for (const auto& [mu, m] : w.table.dominant_mults) os << std::setw(24) << weight_label(mu) << m.get_str() << '\n';
    return os.str();
  }
  os << std::left << std::setw(24) << "nu" << std::setw(24) << "theta" << "mult\n";
  for (const auto& s : w.support)
    os << std::setw(24) << ("(" + s.nu.str() + ")") << std::setw(24) << root_label(s.theta) << s.mult.get_str() << '\n';
  return os.str();
}

std::string to_markdown(const VerificationReport& r, bool timings) {
  std::ostringstream os;
  os << "# Verification report\n\n";
  os << "Overall: **" << (r.passed() ? "pass" : "fail") << "** (" << r.checks.size() << " checks)\n\n";
  os << "| check | system | p | r | hypotheses | status | counterexamples |" << (timings ? " seconds |" : "") << '\n';
  os << "|---|---|---|---|---|---|---|" << (timings ? "---|" : "") << '\n';
  for (const CheckEntry& c : r.checks) {
    os << "| " << c.id << " | " << c.scope.system << " | " << (c.scope.p ? std::to_string(*c.scope.p) : "") << " | "
       << (c.scope.r ? std::to_string(*c.scope.r) : "") << " | " << (c.within_hypotheses ? "within" : "outside") << " | "
       << to_string(c.status) << " | " << c.counterexamples.size() << " |";
    if (timings) os << ' ' << std::fixed << std::setprecision(3) << c.elapsed_seconds << " |";
    os << '\n';
  }
  bool header = false;
  for (const CheckEntry& c : r.checks) {
    if (c.counterexamples.empty()) continue;
    if (!header) os << "\n## Counterexamples\n";
    header = true;
    os << "\n### " << c.id << ' ' << c.scope.system;
    if (c.scope.p) os << " p=" << *c.scope.p;
    os << " (" << to_string(c.status) << ")\n\n";
    for (const Counterexample& ce : c.counterexamples) {
      os << "- ";
      bool first = true;
      for (const auto& [k, v] : ce.fields) os << (first ? "" : ", ") << k << " = `" << v << '`', first = false;
      if (!ce.within_hypotheses) os << " (outside hypotheses)";
      os << '\n';
    }
  }
  return os.str();
}

std::string to_dot(const HasseDiagram& h, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=TB;\n  node [shape=box];\n";
  for (std::size_t v = 0; v < h.vertices.size(); ++v) {
    os << "  v" << v << " [label=\"" << weight_label(h.vertices[v]) << "\\n(" << h.vertices[v].str() << ")\"";
    if (!h.annotations[v].empty()) os << ", linked=\"" << join(h.annotations[v], ",") << "\"";
    os << "];\n";
  }
  for (const auto& [u, l] : h.edges) os << "  v" << u << " -> v" << l << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace chevh1
