#pragma once

// Weight multiplicities of induced modules H0(tau) via Freudenthal's recursion.

#include "chevh1/rootsys.hpp"
#include "chevh1/weyl.hpp"

#include <vector>

namespace chevh1 {

struct WeightMultiplicityTable {
  Weight highest;
  /// Dominant weights below highest with their multiplicities, highest first.
  std::vector<std::pair<Weight, Integer>> dominant_mults;
  Integer total_dim;

  /// 0 when mu is not a dominant weight of the table.
  Integer mult(const Weight& mu) const;
};

struct SupportEntry {
  Weight nu;
  RootCombo theta;  // highest - nu
  Integer mult;
};

class NonIntegralMultiplicity : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

WeightMultiplicityTable dominant_mults(const RootSystem& rs, const Weight& tau);

/// Every weight of H0(tau) with theta = tau - nu, theta height ascending then nu descending.
std::vector<SupportEntry> weight_support(const RootSystem& rs, const Weight& tau, OrbitLimit limit = {});

Integer weyl_dim(const RootSystem& rs, const Weight& tau);

/// |W mu| for dominant mu.
Integer orbit_size(const RootSystem& rs, const Weight& mu);

/// theta in N J with lambda - theta a weight of the Levi-induced module H0_J(lambda).
/// J lists at most two simple-root indices.
std::vector<RootCombo> levi_weight_drops(const RootSystem& rs, const Weight& lambda, const std::vector<Index>& J);

/// max over weights nu of H0(tau) of (nu, delta^vee), delta the positive root with index k.
Integer max_pairing_over_support(const RootSystem& rs, const Weight& tau, std::size_t k);

/// Index of the dominant root in the W-orbit of positive root k.
std::size_t dominant_root(const RootSystem& rs, std::size_t k);

}  // namespace chevh1
