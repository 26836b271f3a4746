#pragma once

// Finite and affine Weyl group actions on weights.
//
// Linear action: s_beta(l) = l - (l, beta^vee) beta.
// Dot action:    w . l = w(l + rho) - rho.
// Affine dot reflection s_{beta, m p}: l -> l - ((l + rho, beta^vee) - m p) beta.
// W_p = W x| p ZPhi acting by the dot action; its closed fundamental alcove
//   { l : 0 <= (l + rho, beta^vee) <= p for all beta > 0 }
// meets every orbit in exactly one point.

#include "chevh1/rootsys.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace chevh1 {

enum class Action { Linear, Dot };

/// One reflection s_{beta, m p}; for the linear action m is always 0.
struct ReflectionStep {
  std::size_t root = 0;
  Integer m = 0;
  friend bool operator==(const ReflectionStep&, const ReflectionStep&) = default;
};

/// Audit trail: applying the steps left to right to the input reproduces the output.
class ReflectionWord {
 public:
  ReflectionWord() = default;
  ReflectionWord(Action action, long p) : action_(action), p_(p) {}

  Action action() const { return action_; }
  long p() const { return p_; }
  const std::vector<ReflectionStep>& steps() const { return steps_; }
  bool empty() const { return steps_.empty(); }
  std::size_t size() const { return steps_.size(); }

  void push(std::size_t root, Integer m = 0) { steps_.push_back({root, std::move(m)}); }

  Weight apply(const RootSystem& rs, Weight lambda) const;

  /// "s3 s1 s_{a0,31}"-style rendering with 1-based indices, application order.
  std::string str(const RootSystem& rs) const;

 private:
  Action action_ = Action::Linear;
  long p_ = 0;
  std::vector<ReflectionStep> steps_;
};

/// Weight together with the word that produced it from the input.
struct Reduced {
  Weight weight;
  ReflectionWord word;
};

class OrbitTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Weight reflect(const RootSystem& rs, std::size_t k, const Weight& lambda);

Weight dot_reflect(const RootSystem& rs, std::size_t k, const Integer& m, long p, const Weight& lambda);

/// Unique dominant weight in W lambda; always reflects at the lowest negative coordinate.
Reduced make_dominant(const RootSystem& rs, const Weight& lambda);

/// Dominant weight in the dot orbit W . lambda, i.e. make_dominant(lambda + rho) - rho
/// (it is dominant exactly when lambda + rho is regular).
Reduced dot_make_dominant(const RootSystem& rs, const Weight& lambda);

/// lambda* = -w0 lambda.
Weight dual_weight(const RootSystem& rs, const Weight& lambda);

/// Representative of the W_p dot orbit in the closed fundamental alcove.
Reduced dot_canonical_rep(const RootSystem& rs, long p, const Weight& lambda);

bool in_fundamental_alcove(const RootSystem& rs, long p, const Weight& lambda);

bool linked(const RootSystem& rs, long p, const Weight& lambda, const Weight& mu);

/// Dominant sigma with sigma strongly linked below lambda (lambda included), ascending order.
std::vector<Weight> strong_linkage_down(const RootSystem& rs, long p, const Weight& lambda);

/// Guard for explicit orbit enumeration.
struct OrbitLimit {
  Index max_rank = 4;
  std::size_t max_size = 2'000'000;
};

/// Full W orbit by breadth-first search over simple reflections, ascending order.
std::vector<Weight> orbit(const RootSystem& rs, const Weight& lambda, OrbitLimit limit = {});
std::vector<Coroot> orbit(const RootSystem& rs, const Coroot& c, OrbitLimit limit = {});

}  // namespace chevh1
