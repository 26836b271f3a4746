#pragma once

// Decision procedure for dim H^1(G(F_q), L(lambda)) with lambda below a
// fundamental weight, q = p^r.
//
// The cascade encodes the theorem hypotheses literally and never
// extrapolates: anything outside them is OutOfScope, and the five cases the
// theory leaves undecided are OpenCase.

#include "chevh1/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chevh1 {

struct Query {
  RootSystemId system;
  long p = 0;
  int r = 1;
  Weight lambda;
};

enum class H1Status { ProvedZero, ProvedOne, OpenCase, OutOfScope };

std::string to_string(H1Status s);

struct RuleEvaluation {
  std::string rule;
  bool fired = false;
  std::string detail;
};

struct H1Result {
  H1Status status = H1Status::OutOfScope;
  /// Rule that decided the status.
  std::string rule;
  /// Every rule evaluated, in cascade order; the last entry fired.
  std::vector<RuleEvaluation> trace;

  /// 0 or 1 when proved.
  std::optional<int> dimension() const;
};

class InvalidQuery : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Prime hypotheses.  Each returns b such that the statement assumes p > b.

/// Vanishing for fundamental weights, and H^1(G(F_q)) = H^1(G) there.
long fundamental_prime_bound(const RootSystemId& id);
/// Vanishing for weights strictly below a fundamental weight.
long below_fundamental_prime_bound(const RootSystemId& id);
/// Infeasibility of the Kostant and Kazhdan-Lusztig constraint systems.
long constraint_search_prime_bound(const RootSystemId& id);
/// (lambda, alpha^vee) != p - 1 for lambda below a fundamental weight.
long socle_prime_bound(const RootSystemId& id);

/// 1 iff n + 1 = sum b_i p^i (b_t != 0) has some i < t with b_i != 0 and j = 2 b_i p^i.
int ks_cn(long n, long p, long j);

/// Throws InvalidQuery when p is not prime, r < 1, or lambda has the wrong length or is not dominant.
H1Result h1_dim(const Query& q);

/// Same, reusing a prebuilt root system for sweeps.
H1Result h1_dim(const RootSystem& rs, const Query& q);

struct KostantTerm {
  Index alpha;  // simple root index
  Weight weight;  // -s_alpha . lambda
};

struct KlTerm {
  Weight sigma;
  /// Known multiplicity; empty means the symbolic dim Ext^1_G(L(lambda), H0(sigma)).
  std::optional<int> m;
};

struct SocleDescription {
  std::vector<KostantTerm> kostant;
  std::vector<KlTerm> kl;
};

/// Weights of the B/U_1-socle of Ext^1_{U_1}(L(lambda), k); lambda p-restricted, p > 2.
SocleDescription socle_u1(const RootSystem& rs, long p, const Weight& lambda);

std::vector<Weight> minuscule_list(const RootSystem& rs);

}  // namespace chevh1
