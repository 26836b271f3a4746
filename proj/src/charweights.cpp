#include "chevh1/charweights.hpp"

#include "chevh1/posets.hpp"

#include <algorithm>
#include <map>

namespace chevh1 {

Integer WeightMultiplicityTable::mult(const Weight& mu) const {
  for (const auto& [w, m] : dominant_mults)
    if (w == mu) return m;
  return 0;
}

WeightMultiplicityTable dominant_mults(const RootSystem& rs, const Weight& tau) {
  if (!is_dominant(tau)) throw std::invalid_argument("dominant_mults: " + weight_label(tau) + " is not dominant");
  const std::vector<Weight> lower = dominant_lower_set(rs, tau);
  const Weight rho2 = 2 * rs.rho();
  std::map<Weight, Integer> mult;

  // m(mu) (tau - mu, tau + mu + 2 rho) = 2 sum_{beta > 0} sum_{k >= 1} m(mu + k beta) (mu + k beta, beta)
  for (const Weight& mu : lower) {
    if (mu == tau) {
      mult[mu] = 1;
      continue;
    }
    Integer rhs = 0;
    for (std::size_t b = 0; b < rs.num_positive_roots(); ++b) {
      const Weight& beta = rs.root_weight(b);
      Weight nu = mu + beta;
      for (;;) {
        auto it = mult.find(make_dominant(rs, nu).weight);
        if (it == mult.end()) break;  // weights form unbroken strings
        rhs += it->second * inner(rs, nu, rs.root(b));
        nu += beta;
      }
    }
    rhs *= 2;
    const RootCombo theta = *weight_to_root_combo(rs, tau - mu);
    const Integer denom = inner(rs, tau + mu + rho2, theta);
    if (denom <= 0 || rhs % denom != 0)
      throw NonIntegralMultiplicity("Freudenthal recursion produced " + rhs.get_str() + "/" + denom.get_str() + " at " +
                                    weight_label(mu));
    mult[mu] = rhs / denom;
  }

  WeightMultiplicityTable table{tau, {}, 0};
  for (const Weight& mu : lower) {
    const Integer& m = mult[mu];
    if (m == 0) continue;
    table.dominant_mults.emplace_back(mu, m);
    table.total_dim += m * orbit_size(rs, mu);
  }
  return table;
}

std::vector<SupportEntry> weight_support(const RootSystem& rs, const Weight& tau, OrbitLimit limit) {
  const WeightMultiplicityTable table = dominant_mults(rs, tau);
  std::vector<SupportEntry> out;
  for (const auto& [mu, m] : table.dominant_mults)
    for (Weight& nu : orbit(rs, mu, limit)) out.push_back({nu, *weight_to_root_combo(rs, tau - nu), m});
  std::sort(out.begin(), out.end(), [](const SupportEntry& a, const SupportEntry& b) {
    Integer ha = a.theta.sum(), hb = b.theta.sum();
    if (ha != hb) return ha < hb;
    return a.nu > b.nu;
  });
  return out;
}

Integer weyl_dim(const RootSystem& rs, const Weight& tau) {
  Rational prod = 1;
  const Weight shifted = tau + rs.rho();
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
    prod *= Rational(pairing(rs, shifted, k), rs.coroot_height(k));
  prod.canonicalize();
  if (!is_integral(prod)) throw std::logic_error("Weyl dimension is not integral");
  return prod.get_num();
}

Integer orbit_size(const RootSystem& rs, const Weight& mu) {
  // |W / W_mu| = prod over beta > 0 outside the stabiliser of (ht(beta^vee) + 1) / ht(beta^vee).
  Rational prod = 1;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
    if (pairing(rs, mu, k) == 0) continue;
    const long h = rs.coroot_height(k);
    prod *= Rational(h + 1, h);
  }
  prod.canonicalize();
  return prod.get_num();
}

std::vector<RootCombo> levi_weight_drops(const RootSystem& rs, const Weight& lambda, const std::vector<Index>& J) {
  if (J.size() > 2) throw std::invalid_argument("levi_weight_drops: |J| must be at most 2");
  const Index n = rs.rank();
  if (J.empty()) return {RootCombo::Zero(n)};
  const Index m = static_cast<Index>(J.size());
  IntMatrix sub(m, m);
  Weight restricted = Weight::Zero(m);
  for (Index a = 0; a < m; ++a) {
    restricted[a] = lambda[J[static_cast<std::size_t>(a)]];
    for (Index b = 0; b < m; ++b) sub(a, b) = rs.cartan()(J[static_cast<std::size_t>(a)], J[static_cast<std::size_t>(b)]);
  }
  const RootSystem levi = RootSystem::from_cartan(sub);
  std::vector<RootCombo> out;
  for (const SupportEntry& e : weight_support(levi, restricted)) {
    RootCombo theta = RootCombo::Zero(n);
    for (Index a = 0; a < m; ++a) theta[J[static_cast<std::size_t>(a)]] = e.theta[a];
    out.push_back(std::move(theta));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t dominant_root(const RootSystem& rs, std::size_t k) {
  const Weight top = make_dominant(rs, rs.root_weight(k)).weight;
  return *rs.index_of(*weight_to_root_combo(rs, top));
}

Integer max_pairing_over_support(const RootSystem& rs, const Weight& tau, std::size_t k) {
  return pairing(rs, tau, dominant_root(rs, k));
}

}  // namespace chevh1
