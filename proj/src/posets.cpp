#include "chevh1/posets.hpp"

#include "chevh1/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace chevh1 {

bool leq(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
  auto theta = weight_to_root_combo(rs, lambda - mu);
  return theta && theta->all_nonnegative();
}

Rational weight_height(const RootSystem& rs, const Weight& w) {
  const IntVector a = rs.scaled_cartan_inverse() * w.vec();
  Integer s = 0;
  for (Index i = 0; i < a.size(); ++i) s += a(i);
  return Rational(s, rs.cartan_inverse_den());
}

namespace {

void sort_highest_first(const RootSystem& rs, std::vector<Weight>& ws) {
  std::vector<std::pair<Rational, Weight>> keyed;
  keyed.reserve(ws.size());
  for (auto& w : ws) keyed.emplace_back(weight_height(rs, w), std::move(w));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  });
  ws.clear();
  for (auto& [h, w] : keyed) ws.push_back(std::move(w));
}

}  // namespace

std::vector<Weight> dominant_lower_set(const RootSystem& rs, const std::vector<Weight>& tops) {
  std::set<Weight> seen;
  std::deque<Weight> queue;
  for (const auto& t : tops) {
    if (!is_dominant(t)) throw std::invalid_argument("dominant_lower_set: " + weight_label(t) + " is not dominant");
    if (seen.insert(t).second) queue.push_back(t);
  }
  while (!queue.empty()) {
    Weight mu = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
      const Weight& beta = rs.root_weight(k);
      // mu - beta is dominant iff beta_i <= mu_i everywhere; test before allocating.
      bool dominant = true;
      for (Index i = 0; i < beta.size() && dominant; ++i) dominant = beta[i] <= mu[i];
      if (!dominant) continue;
      Weight next = mu - beta;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  sort_highest_first(rs, out);
  return out;
}

std::vector<Weight> dominant_lower_set(const RootSystem& rs, const Weight& lambda) {
  return dominant_lower_set(rs, std::vector<Weight>{lambda});
}

std::vector<Weight> weights_under_fundamentals(const RootSystem& rs) {
  std::vector<Weight> tops;
  for (Index j = 0; j < rs.rank(); ++j) tops.push_back(rs.fundamental(j));
  return dominant_lower_set(rs, tops);
}

HasseDiagram hasse(const RootSystem& rs, const std::vector<Weight>& tops, const std::vector<long>& primes) {
  HasseDiagram d;
  d.vertices = dominant_lower_set(rs, tops);
  d.primes = primes;
  const std::size_t n = d.vertices.size();

  std::vector<RatVector> coords;
  for (const auto& v : d.vertices) coords.push_back(rs.cartan_inverse() * v.vec().cast<Rational>());
  // below[i][j]: v_i < v_j.
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      RatVector diff = coords[j] - coords[i];
      bool ok = true;
      for (Index k = 0; k < diff.size() && ok; ++k) ok = is_integral(diff(k)) && diff(k) >= 0;
      below[i][j] = ok;
    }
  }
  for (std::size_t upper = 0; upper < n; ++upper) {
    for (std::size_t lower = 0; lower < n; ++lower) {
      if (!below[lower][upper]) continue;
      bool cover = true;
      for (std::size_t mid = 0; mid < n && cover; ++mid) cover = !(below[lower][mid] && below[mid][upper]);
      if (cover) d.edges.emplace_back(upper, lower);
    }
  }

  const Weight zero = rs.zero_weight();
  d.annotations.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (long p : primes)
      if (linked(rs, p, d.vertices[i], zero)) d.annotations[i].push_back(p);
  return d;
}

HasseDiagram hasse(const RootSystem& rs, const Weight& lambda, const std::vector<long>& primes) {
  return hasse(rs, std::vector<Weight>{lambda}, primes);
}

bool is_minuscule(const RootSystem& rs, const Weight& lambda) {
  if (lambda.is_zero()) return false;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
    Integer c = pairing(rs, lambda, k);
    if (c < -1 || c > 1) return false;
  }
  return true;
}

std::optional<Index> under_fundamental(const RootSystem& rs, const Weight& lambda) {
  for (Index j = 0; j < rs.rank(); ++j)
    if (leq(rs, lambda, rs.fundamental(j))) return j;
  return std::nullopt;
}

}  // namespace chevh1
