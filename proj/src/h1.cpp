#include "chevh1/h1.hpp"

#include "chevh1/arith.hpp"
#include "chevh1/posets.hpp"
#include "chevh1/weyl.hpp"

#include <algorithm>

namespace chevh1 {

std::string to_string(H1Status s) {
  switch (s) {
    case H1Status::ProvedZero:
      return "ProvedZero";
    case H1Status::ProvedOne:
      return "ProvedOne";
    case H1Status::OpenCase:
      return "OpenCase";
    case H1Status::OutOfScope:
      return "OutOfScope";
  }
  return "?";
}

std::optional<int> H1Result::dimension() const {
  if (status == H1Status::ProvedZero) return 0;
  if (status == H1Status::ProvedOne) return 1;
  return std::nullopt;
}

int ks_cn(long n, long p, long j) {
  const std::vector<long> b = digits(n + 1, p);
  long power = 1;
  for (std::size_t i = 0; i + 1 < b.size(); ++i, power *= p)
    if (b[i] != 0 && j == 2 * b[i] * power) return 1;
  return 0;
}

namespace {

bool exceptional(Family f) { return f == Family::E || f == Family::F || f == Family::G; }

bool simply_laced_classical(Family f) { return f == Family::A || f == Family::D; }

bool is_fundamental(const Weight& w) {
  Integer total = 0;
  for (Index i = 0; i < w.size(); ++i) {
    if (w[i] != 0 && w[i] != 1) return false;
    total += w[i];
  }
  return total == 1;
}

Index fundamental_index(const Weight& w) {
  for (Index i = 0; i < w.size(); ++i)
    if (w[i] == 1) return i;
  return -1;
}

struct Case {
  int rank;
  long p;
  std::vector<long> lambda;
};

bool matches(const RootSystemId& id, Family f, long p, const Weight& lambda, const std::vector<Case>& table) {
  if (id.family != f) return false;
  return std::any_of(table.begin(), table.end(), [&](const Case& c) {
    return c.rank == id.rank && c.p == p && Weight(c.lambda) == lambda;
  });
}

const std::vector<Case> kNonfundamentalOneF{{4, 13, {0, 0, 0, 2}}};
const std::vector<Case> kNonfundamentalOneE{{7, 19, {2, 0, 0, 0, 0, 0, 0}}, {8, 31, {0, 0, 0, 0, 0, 0, 0, 2}}};
const std::vector<Case> kOpenE{
    {7, 5, {0, 0, 0, 0, 0, 0, 2}},
    {7, 7, {0, 1, 0, 0, 0, 0, 1}},
    {8, 7, {0, 0, 0, 0, 0, 0, 2, 0}},
    {8, 7, {1, 0, 0, 0, 0, 0, 1, 0}},
    {8, 7, {0, 1, 0, 0, 0, 0, 0, 1}},
};
const std::vector<Case> kTranslationZeroE{{8, 31, {0, 0, 0, 0, 0, 0, 1, 1}}, {8, 31, {0, 0, 0, 0, 0, 1, 0, 1}}};
const std::vector<Case> kGoodFilteredE{{8, 7, {0, 0, 1, 0, 0, 0, 0, 0}}};

class Cascade {
 public:
  explicit Cascade(H1Result& out) : out_(out) {}

  // Records the evaluation; returns `fired` so rules read as `if (rule(...)) return ...`.
  bool rule(const std::string& name, bool fired, std::string detail = {}) {
    out_.trace.push_back({name, fired, std::move(detail)});
    return fired;
  }

  H1Result& decide(H1Status s) {
    out_.status = s;
    out_.rule = out_.trace.back().rule;
    return out_;
  }

 private:
  H1Result& out_;
};

}  // namespace

long fundamental_prime_bound(const RootSystemId& id) {
  if (simply_laced_classical(id.family)) return 2;
  return id.family == Family::E && id.rank == 8 ? 5 : 3;
}

long below_fundamental_prime_bound(const RootSystemId& id) {
  if (simply_laced_classical(id.family)) return 2;
  if (id.family == Family::E) return id.rank == 6 ? 3 : 7;
  return 3;
}

long constraint_search_prime_bound(const RootSystemId& id) {
  if (simply_laced_classical(id.family)) return 2;
  if ((id.family == Family::E && id.rank == 8) || id.family == Family::G) return 5;
  return 3;
}

long socle_prime_bound(const RootSystemId& id) {
  if (id.family == Family::F || (id.family == Family::E && id.rank >= 7)) return 3;
  return 2;
}

H1Result h1_dim(const Query& q) { return h1_dim(RootSystem::build(q.system), q); }

H1Result h1_dim(const RootSystem& rs, const Query& q) {
  if (!is_prime(q.p)) throw InvalidQuery("p = " + std::to_string(q.p) + " is not prime");
  if (q.r < 1) throw InvalidQuery("r must be >= 1");
  if (q.lambda.size() != rs.rank())
    throw InvalidQuery("lambda has " + std::to_string(q.lambda.size()) + " coordinates, expected " + std::to_string(rs.rank()));
  if (!is_dominant(q.lambda)) throw InvalidQuery("lambda = " + weight_label(q.lambda) + " is not dominant");

  const RootSystemId& id = q.system;
  const Weight& lambda = q.lambda;
  const long p = q.p;
  H1Result out;
  Cascade c(out);

  const auto j = under_fundamental(rs, lambda);
  if (c.rule("hypothesis:below-fundamental", !j.has_value(), "lambda <= omega_j fails for every j"))
    return c.decide(H1Status::OutOfScope);

  const bool small_q = [&] {
    // q <= 3 iff r = 1 and p <= 3.
    return q.r == 1 && p <= 3;
  }();
  if (c.rule("hypothesis:q>3", small_q, "q = " + std::to_string(p) + "^" + std::to_string(q.r)))
    return c.decide(H1Status::OutOfScope);

  if (c.rule("trivial-module", lambda.is_zero(), "H^1 of the trivial module vanishes"))
    return c.decide(H1Status::ProvedZero);

  const bool type_ad = id.family == Family::A || id.family == Family::D;
  const bool type_b = id.family == Family::B || (id.family == Family::C && id.rank == 2);
  if (c.rule("classical:L=H0", (type_ad && p > 2) || (type_b && p > 3),
             "L(lambda) = H0(lambda) for types A, B, D"))
    return c.decide(H1Status::ProvedZero);

  if (id.family == Family::C && id.rank >= 3 && p > 3) {
    const long jj = is_fundamental(lambda) ? static_cast<long>(fundamental_index(lambda)) + 1 : -1;
    const int dim = jj < 0 ? 0 : ks_cn(id.rank, p, jj);
    c.rule("kleshchev-sheth", true, "ks_cn(" + std::to_string(id.rank) + ", " + std::to_string(p) + ", " + std::to_string(jj) + ") = " + std::to_string(dim));
    return c.decide(dim == 1 ? H1Status::ProvedOne : H1Status::ProvedZero);
  }
  c.rule("kleshchev-sheth", false, "not type C_n (n >= 3) with p > 3");

  if (c.rule("g2", id.family == Family::G && p > 3, "type G2 with p > 3")) return c.decide(H1Status::ProvedZero);

  if (exceptional(id.family) && is_fundamental(lambda) && p > fundamental_prime_bound(id)) {
    const bool one = id.family == Family::E && id.rank == 7 && p == 7 && fundamental_index(lambda) == 5;
    c.rule("exceptions:fundamental", true, one ? "E7, p = 7, omega_6" : "no exception row matches");
    return c.decide(one ? H1Status::ProvedOne : H1Status::ProvedZero);
  }
  c.rule("exceptions:fundamental", false, "not an exceptional fundamental weight within the prime bounds");

  if (exceptional(id.family) && !is_fundamental(lambda) && p > below_fundamental_prime_bound(id)) {
    const bool one = matches(id, Family::F, p, lambda, kNonfundamentalOneF) || matches(id, Family::E, p, lambda, kNonfundamentalOneE);
    c.rule("exceptions:below-fundamental", true, one ? "s_0 . 0 row matches" : "no exception row matches");
    return c.decide(one ? H1Status::ProvedOne : H1Status::ProvedZero);
  }
  c.rule("exceptions:below-fundamental", false, "not an exceptional non-fundamental weight within the prime bounds");

  if (c.rule("open-case", matches(id, Family::E, p, lambda, kOpenE), "undecided by the theory"))
    return c.decide(H1Status::OpenCase);

  if (c.rule("translation:e8-p31", matches(id, Family::E, p, lambda, kTranslationZeroE),
             "trivial module is not a composition factor of H0(lambda)"))
    return c.decide(H1Status::ProvedZero);

  const bool linkage_hyp = exceptional(id.family) && p > 3 && !(id.family == Family::E && id.rank == 8 && p <= 5);
  if (linkage_hyp) {
    const bool is_linked = linked(rs, p, lambda, rs.zero_weight());
    if (c.rule("linkage-vanishing", !is_linked, is_linked ? "lambda is linked to 0" : "lambda is not linked to 0"))
      return c.decide(H1Status::ProvedZero);
    if (c.rule("good-filtration:e8-p7-omega3", matches(id, Family::E, p, lambda, kGoodFilteredE), "L(lambda) = H0(lambda)"))
      return c.decide(H1Status::ProvedZero);
  } else {
    c.rule("linkage-vanishing", false, "prime outside the linkage-vanishing hypotheses");
  }

  c.rule("hypothesis:prime-bounds", true, "p = " + std::to_string(p) + " is outside every applicable theorem for " + id.str());
  return c.decide(H1Status::OutOfScope);
}

SocleDescription socle_u1(const RootSystem& rs, long p, const Weight& lambda) {
  if (p <= 2) throw std::invalid_argument("socle_u1 requires p > 2");
  if (!is_restricted(lambda, Integer(p))) throw std::invalid_argument("socle_u1: " + weight_label(lambda) + " is not p-restricted");
  SocleDescription d;
  for (Index a = 0; a < rs.rank(); ++a) {
    if (lambda[a] == p - 1) continue;
    d.kostant.push_back({a, -dot_reflect(rs, static_cast<std::size_t>(a), 0, p, lambda)});
  }
  for (Weight& sigma : strong_linkage_down(rs, p, lambda)) {
    std::optional<int> m;
    if (sigma == lambda) m = 0;
    d.kl.push_back({std::move(sigma), m});
  }
  return d;
}

std::vector<Weight> minuscule_list(const RootSystem& rs) {
  std::vector<Weight> out;
  for (Index i = 0; i < rs.rank(); ++i)
    if (is_minuscule(rs, rs.fundamental(i))) out.push_back(rs.fundamental(i));
  return out;
}

}  // namespace chevh1
