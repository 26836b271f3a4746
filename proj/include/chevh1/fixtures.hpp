#pragma once

// Transcribed reference data: Hasse diagrams with linked-to-zero annotations
// and (nu, theta) weight tables.  Files live under a fixture directory next
// to a SHA256SUMS manifest; every file is checked against it before parsing
// and nothing here ever writes to the directory.

#include "chevh1/rootsys.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevh1 {

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HasseFixture {
  struct Vertex {
    std::string label;
    Weight weight;
    std::vector<long> linked;  // primes annotated on the vertex
  };
  std::string system;
  std::vector<long> primes;  // annotation range covered by the figure
  std::vector<Vertex> vertices;
  std::vector<std::pair<Weight, Weight>> edges;  // unordered as drawn
};

struct TableFixture {
  struct Row {
    Weight nu;
    RootCombo theta;
  };
  std::string name;    // file stem, e.g. "G2_w2"
  std::string system;  // "A2", or "A1xA1" for the reducible case
  std::optional<IntMatrix> cartan;
  Weight highest;
  std::vector<Row> rows;

  RootSystem root_system() const;
};

/// Directory baked in at configure time.
std::filesystem::path default_fixture_dir();

class FixtureStore {
 public:
  /// Reads and verifies the manifest; throws FixtureError on a missing file or checksum mismatch.
  explicit FixtureStore(std::filesystem::path dir = default_fixture_dir());

  const std::filesystem::path& dir() const { return dir_; }

  bool has_hasse(const std::string& system) const;
  HasseFixture hasse(const std::string& system) const;

  /// All weight tables, in manifest order.
  std::vector<TableFixture> tables() const;

 private:
  std::string read_verified(const std::string& relative) const;

  std::filesystem::path dir_;
  std::map<std::string, std::string> digests_;  // relative path -> lowercase hex
  std::vector<std::string> order_;
};

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace chevh1
