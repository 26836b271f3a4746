#pragma once

// Strongly typed integer lattice vectors.
//
// A Weight is written in the fundamental-weight basis, a RootCombo in the
// simple-root basis and a Coroot in the simple-coroot basis.  All three are
// plain integer vectors underneath; the tag keeps them from being mixed up.

#include "chevh1/scalar.hpp"

#include <compare>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace chevh1 {

template <class Tag>
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(IntVector coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long> coords) : coords_(static_cast<Index>(coords.size())) {
    Index i = 0;
    for (long c : coords) coords_(i++) = c;
  }
  explicit LatticeVector(const std::vector<long>& coords) : coords_(static_cast<Index>(coords.size())) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords_(static_cast<Index>(i)) = coords[i];
  }

  static LatticeVector Zero(Index n) { return LatticeVector(IntVector::Constant(n, Integer(0))); }
  static LatticeVector Unit(Index n, Index i) {
    LatticeVector v = Zero(n);
    v.coords_(i) = 1;
    return v;
  }

  Index size() const { return coords_.size(); }
  const Integer& operator[](Index i) const { return coords_(i); }
  Integer& operator[](Index i) { return coords_(i); }
  const IntVector& vec() const { return coords_; }
  IntVector& vec() { return coords_; }

  bool is_zero() const {
    for (Index i = 0; i < size(); ++i)
      if (coords_(i) != 0) return false;
    return true;
  }
  bool all_nonnegative() const {
    for (Index i = 0; i < size(); ++i)
      if (coords_(i) < 0) return false;
    return true;
  }
  Integer sum() const {
    Integer s = 0;
    for (Index i = 0; i < size(); ++i) s += coords_(i);
    return s;
  }

  std::vector<long> to_longs() const {
    std::vector<long> out(static_cast<std::size_t>(size()));
    for (Index i = 0; i < size(); ++i) out[static_cast<std::size_t>(i)] = to_long(coords_(i));
    return out;
  }

  /// Comma-separated coordinates, e.g. "0,1,-2".
  std::string str() const {
    std::string s;
    for (Index i = 0; i < size(); ++i) {
      if (i) s += ',';
      s += coords_(i).get_str();
    }
    return s;
  }

  LatticeVector& operator+=(const LatticeVector& o) {
    coords_ += o.coords_;
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    coords_ -= o.coords_;
    return *this;
  }
  LatticeVector& operator*=(const Integer& k) {
    for (Index i = 0; i < size(); ++i) coords_(i) *= k;
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator-(LatticeVector a) {
    for (Index i = 0; i < a.size(); ++i) a.coords_(i) = -a.coords_(i);
    return a;
  }
  friend LatticeVector operator*(const Integer& k, LatticeVector a) { return a *= k; }
  friend LatticeVector operator*(long k, LatticeVector a) { return a *= Integer(k); }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) return false;
    for (Index i = 0; i < a.size(); ++i)
      if (a.coords_(i) != b.coords_(i)) return false;
    return true;
  }
  /// Lexicographic order; only used to give containers a deterministic order.
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (Index i = 0; i < a.size(); ++i) {
      int c = cmp(a.coords_(i), b.coords_(i));
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << '(' << v.str() << ')'; }

 private:
  IntVector coords_;
};

struct WeightTag {};
struct RootTag {};
struct CorootTag {};

using Weight = LatticeVector<WeightTag>;
using RootCombo = LatticeVector<RootTag>;
using Coroot = LatticeVector<CorootTag>;

/// Human-readable label in the fundamental-weight basis: "0", "w4", "w1+w6", "2w4", "-w1+2w2".
std::string weight_label(const Weight& w);

/// Label in the simple-root basis: "0", "a1", "2a1+a2".
std::string root_label(const RootCombo& r);

}  // namespace chevh1

template <class Tag>
struct std::hash<chevh1::LatticeVector<Tag>> {
  std::size_t operator()(const chevh1::LatticeVector<Tag>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (chevh1::Index i = 0; i < v.size(); ++i) {
      h ^= static_cast<std::size_t>(mpz_get_si(v[i].get_mpz_t())) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};
