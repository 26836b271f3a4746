#pragma once

// Dominance order on dominant weights.
//
// mu <= lambda iff lambda - mu is a nonnegative integral combination of simple
// roots.  Lower sets are generated by subtracting positive roots: for dominant
// mu < lambda some positive beta has lambda - beta dominant and mu <= lambda - beta,
// so the breadth-first search over dominant weights reaches every member.

#include "chevh1/rootsys.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace chevh1 {

bool leq(const RootSystem& rs, const Weight& mu, const Weight& lambda);

/// Sum of the alpha-coordinates.
Rational weight_height(const RootSystem& rs, const Weight& w);

/// Dominant mu <= lambda, highest first (height descending, then lexicographic descending).
std::vector<Weight> dominant_lower_set(const RootSystem& rs, const Weight& lambda);

/// Union of dominant_lower_set over several tops, same order.
std::vector<Weight> dominant_lower_set(const RootSystem& rs, const std::vector<Weight>& tops);

/// Every dominant weight below some fundamental weight.
std::vector<Weight> weights_under_fundamentals(const RootSystem& rs);

struct HasseDiagram {
  std::vector<Weight> vertices;
  /// Covering pairs (upper, lower) as vertex indices, lower < upper.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Primes p in the configured range with vertex linked to 0; every vertex has an entry.
  std::vector<std::vector<long>> annotations;
  std::vector<long> primes;
};

/// Covering relations and linkage annotations over the lower set of lambda.
HasseDiagram hasse(const RootSystem& rs, const Weight& lambda, const std::vector<long>& primes);

/// Same over the union of lower sets (the figures draw all fundamental weights at once).
HasseDiagram hasse(const RootSystem& rs, const std::vector<Weight>& tops, const std::vector<long>& primes);

/// Nonzero with every (lambda, beta^vee) in {-1, 0, 1}.
bool is_minuscule(const RootSystem& rs, const Weight& lambda);

/// Least j (0-based) with lambda <= omega_j.
std::optional<Index> under_fundamental(const RootSystem& rs, const Weight& lambda);

}  // namespace chevh1
