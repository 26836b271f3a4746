#include "cli.hpp"

#include "chevh1/arith.hpp"
#include "chevh1/fixtures.hpp"
#include "chevh1/io.hpp"
#include "chevh1/weyl.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace chevh1::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<long> parse_longs(const std::string& s, const std::string& what) {
  std::vector<long> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw UsageError(what + ": '" + item + "' is not an integer");
    }
    if (used != item.size()) throw UsageError(what + ": '" + item + "' is not an integer");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(what + " is empty");
  return out;
}

/// "lo..hi" (primes in the range) or a comma-separated prime list.
std::vector<long> parse_primes(const std::string& s) {
  if (auto dots = s.find(".."); dots != std::string::npos) {
    const auto lo = parse_longs(s.substr(0, dots), "--primes"), hi = parse_longs(s.substr(dots + 2), "--primes");
    if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0]) throw UsageError("--primes: expected lo..hi with lo <= hi");
    return primes_in(lo[0], hi[0]);
  }
  std::vector<long> ps = parse_longs(s, "--primes");
  for (long p : ps)
    if (!is_prime(p)) throw UsageError("--primes: " + std::to_string(p) + " is not prime");
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

RootSystemId system_id(const std::string& type, int rank) {
  try {
    RootSystemId id{parse_family(type), rank};
    validate(id);
    return id;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Weight weight_arg(const std::string& s, const RootSystem& rs, const std::string& flag) {
  const std::vector<long> c = parse_longs(s, flag);
  if (static_cast<Index>(c.size()) != rs.rank())
    throw UsageError(flag + " has " + std::to_string(c.size()) + " coordinates, expected " + std::to_string(rs.rank()));
  return Weight(c);
}

Json longs_json(const std::vector<long>& v) { return Json(v); }

/// Writes to --out when given, otherwise to stdout.
void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out_path);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

/// Memoizes envelopes on disk keyed by (command, flags, schema version).
class Cache {
 public:
  explicit Cache(std::string dir) : dir_(std::move(dir)) {
    if (const char* env = std::getenv("CHEVH1_CACHE"); env && *env) dir_ = env;
  }

  template <class Compute>
  OutputEnvelope get(const Json& query, Compute&& compute) const {
    if (dir_.empty()) return compute();
    const std::filesystem::path file = std::filesystem::path(dir_) / (sha256_hex(query.dump() + kSchemaVersion) + ".json");
    if (std::ifstream in(file); in) {
      try {
        OutputEnvelope cached = envelope_from_json(Json::parse(in));
        if (cached.schema_version == kSchemaVersion && cached.query == query) return cached;
      } catch (const std::exception&) {
        // Unreadable entry: recompute and overwrite.
      }
    }
    OutputEnvelope fresh = compute();
    std::filesystem::create_directories(dir_);
    const std::filesystem::path tmp = file.string() + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
      std::ofstream f(tmp, std::ios::binary);
      f << to_json(fresh).dump();
    }
    std::filesystem::rename(tmp, file);
    return fresh;
  }

 private:
  std::string dir_;
};

struct Common {
  std::string format;
  std::string out;
  std::string cache;
};

int cmd_h1(const std::string& type, int rank, long p, int r, const std::string& lambda_s, const Common& c, std::ostream& out) {
  const RootSystemId id = system_id(type, rank);
  const RootSystem rs = RootSystem::build(id);
  const Query q{id, p, r, weight_arg(lambda_s, rs, "--lambda")};
  H1Result res;
  try {
    res = h1_dim(rs, q);
  } catch (const InvalidQuery& e) {
    throw UsageError(e.what());
  }
  if (c.format == "text") {
    emit(to_text(q, res), c.out, out);
  } else {
    const Json query{{"command", "h1"}, {"type", type}, {"rank", rank}, {"p", p}, {"r", r}, {"lambda", to_json(q.lambda)}};
    emit(dump(to_json(OutputEnvelope{kSchemaVersion, query, to_json(res)})), c.out, out);
  }
  switch (res.status) {
    case H1Status::OpenCase:
      return kOpenCase;
    case H1Status::OutOfScope:
      return kOutOfScope;
    default:
      return kOk;
  }
}

int cmd_hasse(const std::string& type, int rank, const std::string& lambda_s, int fundamental, const std::string& primes_s,
              const Common& c, std::ostream& out) {
  const RootSystemId id = system_id(type, rank);
  const RootSystem rs = RootSystem::build(id);
  if (!lambda_s.empty() && fundamental) throw UsageError("--lambda and --fundamental are exclusive");
  std::vector<Weight> tops;
  if (!lambda_s.empty()) {
    tops.push_back(weight_arg(lambda_s, rs, "--lambda"));
    if (!is_dominant(tops.back())) throw UsageError("--lambda must be dominant");
  } else if (fundamental) {
    if (fundamental < 1 || fundamental > rank) throw UsageError("--fundamental must lie in 1.." + std::to_string(rank));
    tops.push_back(rs.fundamental(fundamental - 1));
  } else {
    for (Index i = 0; i < rs.rank(); ++i) tops.push_back(rs.fundamental(i));
  }
  const std::vector<long> primes = parse_primes(primes_s);
  Json top_json = Json::array();
  for (const Weight& t : tops) top_json.push_back(to_json(t));
  const Json query{{"command", "hasse"}, {"type", type}, {"rank", rank}, {"tops", top_json}, {"primes", longs_json(primes)}};
  const OutputEnvelope env = Cache(c.cache).get(query, [&] {
    return OutputEnvelope{kSchemaVersion, query, to_json(hasse(rs, tops, primes))};
  });
  if (c.format == "dot")
    emit(to_dot(hasse_from_json(env.result), id.str()), c.out, out);
  else
    emit(dump(to_json(env)), c.out, out);
  return kOk;
}

int cmd_weights(const std::string& type, int rank, const std::string& lambda_s, bool force, bool dominant_only, const Common& c,
                std::ostream& out) {
  const RootSystemId id = system_id(type, rank);
  const RootSystem rs = RootSystem::build(id);
  const Weight lambda = weight_arg(lambda_s, rs, "--lambda");
  if (!is_dominant(lambda)) throw UsageError("--lambda must be dominant");
  if (!dominant_only && rank > 2 && !force)
    throw UsageError("full weight support is limited to rank <= 2; pass --force or --dominant-only");
  WeightListing listing{dominant_mults(rs, lambda), {}};
  if (!dominant_only) listing.support = weight_support(rs, lambda, OrbitLimit{8, 50'000'000});
  if (c.format == "json") {
    const Json query{{"command", "weights"}, {"type", type}, {"rank", rank}, {"lambda", to_json(lambda)}, {"dominant_only", dominant_only}};
    emit(dump(to_json(OutputEnvelope{kSchemaVersion, query, to_json(listing)})), c.out, out);
  } else {
    emit(to_text(listing), c.out, out);
  }
  return kOk;
}

int cmd_linkage(const std::string& type, int rank, long p, const std::string& lambda_s, const std::string& mu_s, const Common& c,
                std::ostream& out) {
  if (!is_prime(p)) throw UsageError("-p must be prime");
  const RootSystemId id = system_id(type, rank);
  const RootSystem rs = RootSystem::build(id);
  const Weight lambda = weight_arg(lambda_s, rs, "--lambda");
  const Weight mu = mu_s.empty() ? rs.zero_weight() : weight_arg(mu_s, rs, "--mu");
  const Reduced a = dot_canonical_rep(rs, p, lambda), b = dot_canonical_rep(rs, p, mu);
  const bool is_linked = linked(rs, p, lambda, mu);
  if (c.format == "text") {
    std::ostringstream os;
    os << weight_label(lambda) << (is_linked ? " is" : " is not") << " linked to " << weight_label(mu) << " at p = " << p << '\n'
       << "  " << weight_label(lambda) << " -> " << weight_label(a.weight) << " via " << (a.word.empty() ? "1" : a.word.str(rs)) << '\n'
       << "  " << weight_label(mu) << " -> " << weight_label(b.weight) << " via " << (b.word.empty() ? "1" : b.word.str(rs)) << '\n';
    emit(os.str(), c.out, out);
  } else {
    auto side = [&](const Weight& w, const Reduced& red) {
      return Json{{"weight", to_json(w)}, {"canonical", to_json(red.weight)}, {"word", red.word.str(rs)}};
    };
    const Json query{{"command", "linkage"}, {"type", type}, {"rank", rank}, {"p", p}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)}};
    const Json result{{"linked", is_linked}, {"lambda", side(lambda, a)}, {"mu", side(mu, b)}};
    emit(dump(to_json(OutputEnvelope{kSchemaVersion, query, result})), c.out, out);
  }
  return kOk;
}

int cmd_verify(const std::string& suite, std::optional<int> max_rank, const std::string& primes_s, unsigned jobs, bool timings,
               const std::string& fixtures, const Common& c, std::ostream& out) {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
  if (max_rank && *max_rank < 1) throw UsageError("--max-rank must be positive");
  RunConfig config = RunConfig::defaults(max_rank && suite != "ks" ? *max_rank : 8);
  if (suite != "all") config.suites = {suite};
  if (max_rank && (suite == "ks" || suite == "all")) config.ks_n_max = std::max(*max_rank, suite == "ks" ? 3 : 200);
  config.primes = parse_primes(primes_s);
  config.jobs = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
  if (!fixtures.empty()) config.fixture_dir = fixtures;

  Json query{{"command", "verify"}, {"suite", suite}, {"max_rank", max_rank ? Json(*max_rank) : Json(nullptr)},
             {"primes", longs_json(config.primes)}, {"fixtures", config.fixture_dir.string()}};
  auto compute = [&] { return OutputEnvelope{kSchemaVersion, query, to_json(run_all(config), timings)}; };
  // Timed reports are not reproducible, so they bypass the cache.
  const OutputEnvelope env = timings ? compute() : Cache(c.cache).get(query, compute);
  const VerificationReport report = report_from_json(env.result);
  if (c.format == "md")
    emit(to_markdown(report, timings), c.out, out);
  else
    emit(dump(to_json(env)), c.out, out);
  return report.passed() ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide H^1(G(F_q), L(lambda)) for lambda below a fundamental weight, and verify the supporting arithmetic.", "chevh1"};
  app.require_subcommand(1);

  std::string type, lambda, mu, primes, suite = "all", fixtures;
  int rank = 0, r = 1, fundamental = 0;
  long p = 0;
  unsigned jobs = 0;
  bool force = false, dominant_only = false, timings = false;
  std::optional<int> max_rank;
  Common common;

  auto add_system = [&](CLI::App* sub) {
    sub->add_option("--type", type, "Root system family A-G")->required();
    sub->add_option("--rank", rank, "Rank")->required();
  };
  auto add_io = [&](CLI::App* sub, std::string formats, std::string fallback) {
    common.format = fallback;
    sub->add_option("--format,--report", common.format, "Output format")->check(CLI::IsMember(CLI::detail::split(formats, '|')));
    sub->add_option("--out", common.out, "Write output to FILE instead of stdout");
  };

  CLI::App* h1 = app.add_subcommand("h1", "Dimension of H^1(G(F_q), L(lambda)) with its decision trace");
  add_system(h1);
  h1->add_option("-p", p, "Prime")->required();
  h1->add_option("-r", r, "Exponent of q = p^r")->capture_default_str();
  h1->add_option("--lambda", lambda, "Weight coordinates c1,...,cn")->required();

  CLI::App* hs = app.add_subcommand("hasse", "Dominance-order Hasse diagram with linked-to-zero annotations");
  add_system(hs);
  hs->add_option("--lambda", lambda, "Top weight coordinates");
  hs->add_option("--fundamental", fundamental, "Top weight omega_j (1-based)");
  primes = "5..31";
  hs->add_option("--primes", primes, "Primes lo..hi or p1,p2,...")->capture_default_str();
  hs->add_option("--cache", common.cache, "Cache directory (overridden by CHEVH1_CACHE)");

  CLI::App* wt = app.add_subcommand("weights", "Weights nu = lambda - theta of H0(lambda) with multiplicities");
  add_system(wt);
  wt->add_option("--lambda", lambda, "Highest weight coordinates")->required();
  wt->add_flag("--force", force, "Allow full weight support above rank 2");
  wt->add_flag("--dominant-only", dominant_only, "Only dominant weights (any rank)");

  CLI::App* vf = app.add_subcommand("verify", "Run the verification suites");
  vf->add_option("--suite", suite, "all or one of: gamma restriction socle qkos qkl linkage ks tables g2 e8 s0 largeprime t3")
      ->capture_default_str();
  vf->add_option("--max-rank", max_rank, "Largest classical rank swept (largest n of C_n for the ks suite)");
  vf->add_option("--primes", primes, "Primes lo..hi or p1,p2,... (default 2..31)");
  vf->add_option("--jobs", jobs, "Worker threads (default: hardware concurrency)");
  vf->add_flag("--timings", timings, "Include elapsed times (disables caching)");
  vf->add_option("--fixtures", fixtures, "Fixture directory");
  vf->add_option("--cache", common.cache, "Cache directory (overridden by CHEVH1_CACHE)");

  CLI::App* lk = app.add_subcommand("linkage", "Whether lambda and mu lie in one W_p dot orbit");
  add_system(lk);
  lk->add_option("-p", p, "Prime")->required();
  lk->add_option("--lambda", lambda, "Weight coordinates")->required();
  lk->add_option("--mu", mu, "Second weight (default 0)");

  add_io(h1, "json|text", "json");
  add_io(hs, "dot|json", "dot");
  add_io(wt, "text|json", "text");
  add_io(vf, "json|md", "json");
  add_io(lk, "json|text", "json");

  // The formats differ per subcommand, so the default is set after parsing.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  auto format_or = [&](CLI::App* sub, const std::string& fallback) {
    if (sub->count("--format") == 0) common.format = fallback;
  };

  try {
    if (*h1) return format_or(h1, "json"), cmd_h1(type, rank, p, r, lambda, common, out);
    if (*hs) return format_or(hs, "dot"), cmd_hasse(type, rank, lambda, fundamental, primes, common, out);
    if (*wt) return format_or(wt, "text"), cmd_weights(type, rank, lambda, force, dominant_only, common, out);
    if (*vf) {
      format_or(vf, "json");
      return cmd_verify(suite, max_rank, vf->count("--primes") ? primes : "2..31", jobs, timings, fixtures, common, out);
    }
    if (*lk) return format_or(lk, "json"), cmd_linkage(type, rank, p, lambda, mu, common, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace chevh1::cli
