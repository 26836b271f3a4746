#pragma once

// Root system data for the irreducible types A-G with Bourbaki numbering.
//
// Conventions (0-based indices in code, 1-based in labels and on the CLI):
//   cartan(i, j) = (alpha_j, alpha_i^vee), so column j is alpha_j written in
//   the fundamental-weight basis and root_to_weight(theta) = cartan * theta.
//   Short roots have squared length 2.
//   B2: alpha_1 long, alpha_2 short.  G2: alpha_1 short, alpha_2 long.
//   D3 is accepted and equals A3 after the node relabelling
//   (D3: 1,2,3) -> (A3: 2,1,3); it keeps family D for hypothesis lookups.
//   Positive roots are ordered by height, then by coefficient vector in
//   decreasing lexicographic order, so the simple roots come first and in
//   index order: positive root k < rank is alpha_{k+1}.

#include "chevh1/lattice.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevh1 {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family parse_family(const std::string& s);

struct RootSystemId {
  Family family = Family::A;
  int rank = 1;

  std::string str() const;  // "E8", "A1", ...
  friend bool operator==(const RootSystemId&, const RootSystemId&) = default;
  friend auto operator<=>(const RootSystemId&, const RootSystemId&) = default;
};

class InvalidRootSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws InvalidRootSystem naming the violated constraint.
void validate(const RootSystemId& id);

/// Parses "E8", "B2", "C12", ... and validates.
RootSystemId parse_root_system_id(const std::string& s);

/// Bourbaki Cartan matrix for a valid id.
IntMatrix cartan_matrix(const RootSystemId& id);

class RootSystem {
 public:
  /// Irreducible system of the given type.
  static RootSystem build(const RootSystemId& id);

  /// Any symmetrizable finite-type Cartan matrix, possibly reducible
  /// (used for Levi subsystems such as A1 x A1).  Throws on non-finite input.
  static RootSystem from_cartan(const IntMatrix& cartan);

  const std::optional<RootSystemId>& id() const { return d_->id; }
  Index rank() const { return d_->cartan.rows(); }
  const IntMatrix& cartan() const { return d_->cartan; }
  /// d_i with diag(d) * cartan symmetric; d_i = (alpha_i, alpha_i) / 2.
  const IntVector& symmetrizer() const { return d_->symmetrizer; }

  std::size_t num_positive_roots() const { return d_->roots.size(); }
  const std::vector<RootCombo>& positive_roots() const { return d_->roots; }
  const RootCombo& root(std::size_t k) const { return d_->roots.at(k); }
  /// Positive root k in the fundamental-weight basis.
  const Weight& root_weight(std::size_t k) const { return d_->root_weights.at(k); }
  /// Coefficients c_i of beta^vee in the simple-coroot basis: (lambda, beta^vee) = sum c_i lambda_i.
  const Coroot& coroot(std::size_t k) const { return d_->coroots.at(k); }
  /// (beta, beta) for positive root k.
  const Integer& root_length2(std::size_t k) const { return d_->length2.at(k); }
  bool is_long(std::size_t k) const { return d_->length2.at(k) != d_->short_length2; }
  long height(std::size_t k) const { return d_->heights.at(k); }
  /// (rho, beta^vee), the height of the coroot.
  long coroot_height(std::size_t k) const { return d_->coroot_heights.at(k); }

  /// Index of a positive root given by its coefficients, if it is one.
  std::optional<std::size_t> index_of(const RootCombo& r) const;

  Weight rho() const { return Weight(IntVector::Constant(rank(), Integer(1))); }
  Weight fundamental(Index i) const { return Weight::Unit(rank(), i); }
  Weight zero_weight() const { return Weight::Zero(rank()); }

  bool irreducible() const { return d_->irreducible; }
  /// Highest short root (the highest root when simply laced).  Irreducible only.
  std::size_t alpha0() const { return require_irreducible(), d_->alpha0; }
  std::size_t highest_long() const { return require_irreducible(), d_->highest_long; }
  /// Coxeter number h = (rho, alpha0^vee) + 1.  Irreducible only.
  long coxeter() const { return require_irreducible(), d_->coxeter; }
  /// pi with -w0 omega_i = omega_{pi(i)}.
  const std::vector<Index>& w0_perm() const { return d_->w0_perm; }

  /// cartan^{-1} as exact rationals.
  const RatMatrix& cartan_inverse() const { return d_->cartan_inverse; }
  /// cartan^{-1} = scaled_cartan_inverse() / cartan_inverse_den() with integer entries.
  const IntMatrix& scaled_cartan_inverse() const { return d_->scaled_inverse; }
  const Integer& cartan_inverse_den() const { return d_->inverse_den; }
  /// Gram matrix of the fundamental weights: inner(l, m) = l^T G m.
  const RatMatrix& weight_gram() const { return d_->weight_gram; }

 private:
  struct Data {
    std::optional<RootSystemId> id;
    IntMatrix cartan;
    IntVector symmetrizer;
    std::vector<RootCombo> roots;
    std::vector<Weight> root_weights;
    std::vector<Coroot> coroots;
    std::vector<Integer> length2;
    std::vector<long> heights;
    std::vector<long> coroot_heights;
    std::map<RootCombo, std::size_t> index;
    Integer short_length2;
    bool irreducible = false;
    std::size_t alpha0 = 0;
    std::size_t highest_long = 0;
    long coxeter = 0;
    std::vector<Index> w0_perm;
    RatMatrix cartan_inverse;
    IntMatrix scaled_inverse;
    Integer inverse_den;
    RatMatrix weight_gram;
  };

  void require_irreducible() const {
    if (!d_->irreducible) throw std::logic_error("root system is reducible");
  }

  std::shared_ptr<const Data> d_;
};

/// (lambda, beta^vee) for positive root index k.  For simple alpha_j this is lambda_j.
Integer pairing(const RootSystem& rs, const Weight& lambda, std::size_t k);

/// (lambda, c) for a coroot written in the simple-coroot basis.
Integer pairing(const Weight& lambda, const Coroot& c);

Weight root_to_weight(const RootSystem& rs, const RootCombo& theta);

/// Unique solution of root_to_weight(theta) = lambda if it is integral.
std::optional<RootCombo> weight_to_root_combo(const RootSystem& rs, const Weight& lambda);

/// Exact W-invariant inner product, short roots of squared length 2.
Rational inner(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// (lambda, beta) for a weight and a root combination; always an integer.
Integer inner(const RootSystem& rs, const Weight& lambda, const RootCombo& beta);

bool is_dominant(const Weight& lambda);

/// All coordinates < p^r.
bool is_restricted(const Weight& lambda, const Integer& bound);

}  // namespace chevh1
