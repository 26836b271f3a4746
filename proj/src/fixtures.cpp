#include "chevh1/fixtures.hpp"

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#ifndef CHEVH1_FIXTURE_DIR
#define CHEVH1_FIXTURE_DIR "data/fixtures"
#endif

namespace chevh1 {

using nlohmann::json;

std::string sha256_hex(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 || EVP_DigestFinal_ex(ctx.get(), md, &len) != 1)
    throw FixtureError("SHA-256 computation failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

std::filesystem::path default_fixture_dir() { return CHEVH1_FIXTURE_DIR; }

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FixtureError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string normalize(std::string rel) {
  if (rel.rfind("./", 0) == 0) rel.erase(0, 2);
  return rel;
}

template <class V>
V vector_from(const json& j) {
  return V(j.get<std::vector<long>>());
}

}  // namespace

FixtureStore::FixtureStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::istringstream manifest(slurp(dir_ / "SHA256SUMS"));
  std::string digest, rel;
  while (manifest >> digest >> rel) {
    rel = normalize(rel);
    digests_[rel] = digest;
    order_.push_back(rel);
  }
  if (order_.empty()) throw FixtureError("empty manifest in " + dir_.string());
}

std::string FixtureStore::read_verified(const std::string& relative) const {
  auto it = digests_.find(relative);
  if (it == digests_.end()) throw FixtureError(relative + " is not listed in the manifest");
  std::string bytes = slurp(dir_ / relative);
  if (sha256_hex(bytes) != it->second) throw FixtureError("checksum mismatch for " + relative);
  return bytes;
}

bool FixtureStore::has_hasse(const std::string& system) const { return digests_.count("hasse/" + system + ".json") > 0; }

HasseFixture FixtureStore::hasse(const std::string& system) const {
  const json doc = json::parse(read_verified("hasse/" + system + ".json"));
  HasseFixture f;
  f.system = doc.at("system").get<std::string>();
  f.primes = doc.at("primes").get<std::vector<long>>();
  for (const auto& v : doc.at("vertices"))
    f.vertices.push_back({v.at("label").get<std::string>(), vector_from<Weight>(v.at("weight")),
                          v.at("linked").get<std::vector<long>>()});
  for (const auto& e : doc.at("edges")) f.edges.emplace_back(vector_from<Weight>(e.at(0)), vector_from<Weight>(e.at(1)));
  return f;
}

std::vector<TableFixture> FixtureStore::tables() const {
  std::vector<TableFixture> out;
  for (const auto& rel : order_) {
    if (rel.rfind("tables/", 0) != 0) continue;
    const json doc = json::parse(read_verified(rel));
    TableFixture t;
    t.name = std::filesystem::path(rel).stem().string();
    t.system = doc.at("system").get<std::string>();
    if (doc.contains("cartan")) {
      const auto rows = doc.at("cartan").get<std::vector<std::vector<long>>>();
      IntMatrix c(static_cast<Index>(rows.size()), static_cast<Index>(rows.size()));
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) c(static_cast<Index>(i), static_cast<Index>(j)) = rows[i].at(j);
      t.cartan = std::move(c);
    }
    t.highest = vector_from<Weight>(doc.at("highest"));
    for (const auto& r : doc.at("rows")) t.rows.push_back({vector_from<Weight>(r.at("nu")), vector_from<RootCombo>(r.at("theta"))});
    out.push_back(std::move(t));
  }
  return out;
}

RootSystem TableFixture::root_system() const {
  return cartan ? RootSystem::from_cartan(*cartan) : RootSystem::build(parse_root_system_id(system));
}

}  // namespace chevh1
