#include "chevh1/weyl.hpp"

#include <deque>
#include <set>
#include <unordered_set>

namespace chevh1 {

Weight ReflectionWord::apply(const RootSystem& rs, Weight lambda) const {
  for (const auto& s : steps_) {
    lambda = action_ == Action::Linear ? reflect(rs, s.root, lambda) : dot_reflect(rs, s.root, s.m, p_, lambda);
  }
  return lambda;
}

std::string ReflectionWord::str(const RootSystem& rs) const {
  std::string out;
  for (const auto& s : steps_) {
    if (!out.empty()) out += ' ';
    if (s.m == 0 && s.root < static_cast<std::size_t>(rs.rank())) {
      out += "s" + std::to_string(s.root + 1);
    } else {
      out += "s_{" + root_label(rs.root(s.root)) + "," + s.m.get_str() + "p}";
    }
  }
  return out;
}

Weight reflect(const RootSystem& rs, std::size_t k, const Weight& lambda) {
  return lambda - pairing(rs, lambda, k) * rs.root_weight(k);
}

Weight dot_reflect(const RootSystem& rs, std::size_t k, const Integer& m, long p, const Weight& lambda) {
  Integer c = pairing(rs, lambda + rs.rho(), k) - m * p;
  return lambda - c * rs.root_weight(k);
}

Reduced make_dominant(const RootSystem& rs, const Weight& lambda) {
  Reduced out{lambda, ReflectionWord(Action::Linear, 0)};
  for (;;) {
    Index i = 0;
    while (i < out.weight.size() && out.weight[i] >= 0) ++i;
    if (i == out.weight.size()) return out;
    out.weight = reflect(rs, static_cast<std::size_t>(i), out.weight);
    out.word.push(static_cast<std::size_t>(i));
  }
}

Reduced dot_make_dominant(const RootSystem& rs, const Weight& lambda) {
  Reduced out{lambda, ReflectionWord(Action::Dot, 0)};
  for (;;) {
    Index i = 0;
    while (i < out.weight.size() && out.weight[i] >= -1) ++i;
    if (i == out.weight.size()) return out;
    out.weight = dot_reflect(rs, static_cast<std::size_t>(i), 0, 0, out.weight);
    out.word.push(static_cast<std::size_t>(i));
  }
}

Weight dual_weight(const RootSystem& rs, const Weight& lambda) { return make_dominant(rs, -lambda).weight; }

bool in_fundamental_alcove(const RootSystem& rs, long p, const Weight& lambda) {
  const Weight shifted = lambda + rs.rho();
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
    Integer c = pairing(rs, shifted, k);
    if (c < 0 || c > p) return false;
  }
  return true;
}

Reduced dot_canonical_rep(const RootSystem& rs, long p, const Weight& lambda) {
  // Each fold reflects across a wall strictly separating lambda + rho from the
  // open fundamental alcove, so the distance to any interior point decreases.
  Reduced out{lambda, ReflectionWord(Action::Dot, p)};
  const Integer pz = p;
  for (;;) {
    const Weight shifted = out.weight + rs.rho();
    bool folded = false;
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
      Integer c = pairing(rs, shifted, k);
      if (c >= 0 && c <= pz) continue;
      Integer m = 0;
      if (c > pz) {
        m = floor_div(c, pz);
        if (m * pz == c) m -= 1;  // c on a wall: fold across the one below it
      }
      out.weight = dot_reflect(rs, k, m, p, out.weight);
      out.word.push(k, m);
      folded = true;
      break;
    }
    if (!folded) return out;
  }
}

bool linked(const RootSystem& rs, long p, const Weight& lambda, const Weight& mu) {
  if (lambda == mu) return true;
  return dot_canonical_rep(rs, p, lambda).weight == dot_canonical_rep(rs, p, mu).weight;
}

namespace {

bool below_or_equal(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
  auto theta = weight_to_root_combo(rs, lambda - mu);
  return theta && theta->all_nonnegative();
}

}  // namespace

std::vector<Weight> strong_linkage_down(const RootSystem& rs, long p, const Weight& lambda) {
  // Dominant-only closure.  From a dominant sigma, each s_{beta,mp} . sigma
  // below sigma is folded back to its dominant dot-conjugate z, kept when z is
  // dominant and strictly below sigma.  Dominant z <= sigma forces
  // |z + rho| <= |sigma + rho|, and |y + rho| = |z + rho| for y = sigma - d beta,
  // so 0 < d <= c = (sigma + rho, beta^vee), i.e. 0 <= m p < c.
  std::set<Weight> found{lambda};
  std::deque<Weight> frontier{lambda};
  const Weight rho = rs.rho();
  while (!frontier.empty()) {
    Weight sigma = frontier.front();
    frontier.pop_front();
    const Weight shifted = sigma + rho;
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
      const Integer c = pairing(rs, shifted, k);
      for (Integer mp = 0; mp < c; mp += p) {
        Weight y = sigma - (c - mp) * rs.root_weight(k);
        Weight z = dot_make_dominant(rs, y).weight;
        if (!is_dominant(z) || z == sigma || found.count(z)) continue;
        if (!below_or_equal(rs, z, sigma)) continue;
        found.insert(z);
        frontier.push_back(z);
      }
    }
  }
  return {found.begin(), found.end()};
}

namespace {

template <class V, class Reflect>
std::vector<V> bfs_orbit(const RootSystem& rs, const V& start, OrbitLimit limit, Reflect&& step) {
  if (rs.rank() > limit.max_rank)
    throw OrbitTooLarge("orbit enumeration refused for rank " + std::to_string(rs.rank()) + " (limit " +
                        std::to_string(limit.max_rank) + ")");
  std::unordered_set<V> seen{start};
  std::deque<V> queue{start};
  while (!queue.empty()) {
    V v = queue.front();
    queue.pop_front();
    for (Index i = 0; i < rs.rank(); ++i) {
      V u = step(v, i);
      if (seen.insert(u).second) {
        if (seen.size() > limit.max_size) throw OrbitTooLarge("orbit exceeds " + std::to_string(limit.max_size) + " elements");
        queue.push_back(std::move(u));
      }
    }
  }
  std::set<V> sorted(seen.begin(), seen.end());
  return {sorted.begin(), sorted.end()};
}

}  // namespace

std::vector<Weight> orbit(const RootSystem& rs, const Weight& lambda, OrbitLimit limit) {
  return bfs_orbit(rs, lambda, limit, [&](const Weight& v, Index i) { return reflect(rs, static_cast<std::size_t>(i), v); });
}

std::vector<Coroot> orbit(const RootSystem& rs, const Coroot& c, OrbitLimit limit) {
  // s_i c = c - (alpha_i, c) alpha_i^vee with (alpha_i, alpha_k^vee) = cartan(k, i).
  return bfs_orbit(rs, c, limit, [&](const Coroot& v, Index i) {
    Integer t = 0;
    for (Index k = 0; k < v.size(); ++k) t += v[k] * rs.cartan()(k, i);
    Coroot u = v;
    u[i] -= t;
    return u;
  });
}

}  // namespace chevh1
