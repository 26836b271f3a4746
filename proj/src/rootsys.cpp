#include "chevh1/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

namespace chevh1 {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family parse_family(const std::string& s) {
  if (s.size() == 1) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
  }
  throw InvalidRootSystem("unknown root system family '" + s + "' (expected one of A-G)");
}

std::string RootSystemId::str() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

void validate(const RootSystemId& id) {
  const int n = id.rank;
  auto fail = [&](const std::string& why) { throw InvalidRootSystem(id.str() + ": " + why); };
  switch (id.family) {
    case Family::A:
      if (n < 1) fail("type A requires rank >= 1");
      break;
    case Family::B:
      if (n < 2) fail("type B requires rank >= 2");
      break;
    case Family::C:
      if (n < 2) fail("type C requires rank >= 2");
      break;
    case Family::D:
      if (n < 3) fail("type D requires rank >= 3");
      break;
    case Family::E:
      if (n < 6 || n > 8) fail("type E requires rank in {6,7,8}");
      break;
    case Family::F:
      if (n != 4) fail("type F requires rank 4");
      break;
    case Family::G:
      if (n != 2) fail("type G requires rank 2");
      break;
  }
}

RootSystemId parse_root_system_id(const std::string& s) {
  if (s.size() < 2 || !std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InvalidRootSystem("malformed root system '" + s + "' (expected e.g. E8)");
  RootSystemId id{parse_family(s.substr(0, 1)), std::stoi(s.substr(1))};
  validate(id);
  return id;
}

IntMatrix cartan_matrix(const RootSystemId& id) {
  validate(id);
  const Index n = id.rank;
  IntMatrix a = IntMatrix::Constant(n, n, Integer(0));
  for (Index i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](Index i, Index j) { a(i, j) = a(j, i) = -1; };
  switch (id.family) {
    case Family::A:
      for (Index i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (Index i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;
      break;
    case Family::C:
      for (Index i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;
      break;
    case Family::D:
      // For n = 3 node 0 is the branch point: the A3 diagram read as 2-1-3.
      for (Index i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      link(0, 2);
      for (Index i = 2; i + 1 < n; ++i) link(i, i + 1);
      link(1, 3);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a(2, 1) = -2;
      break;
    case Family::G:
      a(0, 1) = -3;
      a(1, 0) = -1;
      break;
  }
  return a;
}

namespace {

bool connected(const IntMatrix& a) {
  const Index n = a.rows();
  if (n == 0) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<Index> queue{0};
  seen[0] = true;
  Index count = 1;
  while (!queue.empty()) {
    Index i = queue.front();
    queue.pop_front();
    for (Index j = 0; j < n; ++j) {
      if (a(i, j) != 0 && !seen[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
        ++count;
        queue.push_back(j);
      }
    }
  }
  return count == n;
}

// d_i a(i,j) = d_j a(j,i); smallest positive integers per connected component.
IntVector symmetrize(const IntMatrix& a) {
  const Index n = a.rows();
  std::vector<Rational> d(static_cast<std::size_t>(n), Rational(0));
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int ncomp = 0;
  for (Index s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::deque<Index> queue{s};
    comp[static_cast<std::size_t>(s)] = ncomp;
    d[static_cast<std::size_t>(s)] = 1;
    while (!queue.empty()) {
      Index i = queue.front();
      queue.pop_front();
      for (Index j = 0; j < n; ++j) {
        if (i == j || a(i, j) == 0) continue;
        if (a(j, i) == 0) throw std::invalid_argument("Cartan matrix has asymmetric zero pattern");
        Rational dj = d[static_cast<std::size_t>(i)] * Rational(a(i, j)) / Rational(a(j, i));
        auto& slot = d[static_cast<std::size_t>(j)];
        if (comp[static_cast<std::size_t>(j)] < 0) {
          comp[static_cast<std::size_t>(j)] = ncomp;
          slot = dj;
          queue.push_back(j);
        } else if (slot != dj) {
          throw std::invalid_argument("Cartan matrix is not symmetrizable");
        }
      }
    }
    ++ncomp;
  }
  IntVector out(n);
  for (int c = 0; c < ncomp; ++c) {
    Integer den = 1;
    for (Index i = 0; i < n; ++i)
      if (comp[static_cast<std::size_t>(i)] == c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d[static_cast<std::size_t>(i)].get_den_mpz_t());
    Integer g = 0;
    for (Index i = 0; i < n; ++i) {
      if (comp[static_cast<std::size_t>(i)] != c) continue;
      Rational v = d[static_cast<std::size_t>(i)] * den;
      out(i) = v.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out(i).get_mpz_t());
    }
    for (Index i = 0; i < n; ++i)
      if (comp[static_cast<std::size_t>(i)] == c) out(i) /= g;
  }
  return out;
}

bool positive_definite(const RatMatrix& m) {
  for (Index k = 1; k <= m.rows(); ++k) {
    if (!(m.topLeftCorner(k, k).fullPivLu().determinant() > 0)) return false;
  }
  return true;
}

// a * v touching only nonzero entries; Cartan matrices and roots are both sparse.
IntVector sparse_product(const IntMatrix& a, const IntVector& v) {
  IntVector out = IntVector::Zero(a.rows());
  for (Index j = 0; j < v.size(); ++j) {
    if (sgn(v(j)) == 0) continue;
    for (Index i = 0; i < a.rows(); ++i)
      if (sgn(a(i, j)) != 0) out(i) += a(i, j) * v(j);
  }
  return out;
}

Integer length2_of(const IntMatrix& a, const IntVector& d, const RootCombo& beta) {
  IntVector w = sparse_product(a, beta.vec());
  Integer s = 0;
  for (Index k = 0; k < beta.size(); ++k) s += beta[k] * d(k) * w(k);
  return s;
}

// Positive roots by alpha-string closure, level by level in height.
std::vector<RootCombo> close_roots(const IntMatrix& a) {
  const Index n = a.rows();
  std::vector<RootCombo> all;
  std::map<RootCombo, bool> member;
  std::vector<RootCombo> level;
  for (Index i = 0; i < n; ++i) level.push_back(RootCombo::Unit(n, i));
  constexpr std::size_t kLimit = 100000;
  while (!level.empty()) {
    for (const auto& r : level) member[r] = true;
    all.insert(all.end(), level.begin(), level.end());
    std::map<RootCombo, bool> next;
    for (const auto& beta : level) {
      IntVector pair = sparse_product(a, beta.vec());
      for (Index i = 0; i < n; ++i) {
        if (beta == RootCombo::Unit(n, i)) continue;
        long r = 0;
        RootCombo down = beta;
        while (true) {
          down[i] -= 1;
          if (!member.count(down)) break;
          ++r;
        }
        Integer q = Integer(r) - pair(i);
        if (q > 0) {
          RootCombo up = beta;
          up[i] += 1;
          next[up] = true;
        }
      }
    }
    level.clear();
    for (auto& [r, _] : next) level.push_back(r);
    if (all.size() > kLimit) throw std::invalid_argument("Cartan matrix is not of finite type");
  }
  std::sort(all.begin(), all.end(), [](const RootCombo& x, const RootCombo& y) {
    Integer hx = x.sum(), hy = y.sum();
    if (hx != hy) return hx < hy;
    return y < x;
  });
  return all;
}

Weight make_dominant_linear(const IntMatrix& a, Weight w) {
  for (;;) {
    Index i = 0;
    while (i < w.size() && w[i] >= 0) ++i;
    if (i == w.size()) return w;
    Integer c = w[i];
    for (Index k = 0; k < w.size(); ++k) w[k] -= c * a(k, i);
  }
}

}  // namespace

RootSystem RootSystem::build(const RootSystemId& id) {
  RootSystem rs = from_cartan(cartan_matrix(id));
  auto data = std::make_shared<Data>(*rs.d_);
  data->id = id;
  rs.d_ = std::move(data);
  return rs;
}

RootSystem RootSystem::from_cartan(const IntMatrix& cartan) {
  const Index n = cartan.rows();
  if (n == 0 || cartan.cols() != n) throw std::invalid_argument("Cartan matrix must be square and non-empty");
  for (Index i = 0; i < n; ++i) {
    if (cartan(i, i) != 2) throw std::invalid_argument("Cartan matrix diagonal must be 2");
    for (Index j = 0; j < n; ++j)
      if (i != j && cartan(i, j) > 0) throw std::invalid_argument("Cartan matrix off-diagonal entries must be <= 0");
  }
  auto d = std::make_shared<Data>();
  d->cartan = cartan;
  d->symmetrizer = symmetrize(cartan);

  RatMatrix sym(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) sym(i, j) = Rational(d->symmetrizer(i) * cartan(i, j));
  if (!positive_definite(sym)) throw std::invalid_argument("Cartan matrix is not of finite type");

  d->cartan_inverse = cartan.cast<Rational>().fullPivLu().inverse();
  d->inverse_den = 1;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) d->inverse_den = lcm(d->inverse_den, d->cartan_inverse(i, j).get_den());
  d->scaled_inverse.resize(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) d->scaled_inverse(i, j) = Integer(d->cartan_inverse(i, j) * Rational(d->inverse_den));
  RatMatrix dmat = RatMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) dmat(i, i) = Rational(d->symmetrizer(i));
  d->weight_gram = d->cartan_inverse.transpose() * dmat;

  d->roots = close_roots(cartan);
  d->short_length2 = 0;
  for (std::size_t k = 0; k < d->roots.size(); ++k) {
    const RootCombo& beta = d->roots[k];
    d->index[beta] = k;
    d->root_weights.emplace_back(sparse_product(cartan, beta.vec()));
    Integer len2 = length2_of(cartan, d->symmetrizer, beta);
    IntVector c(n);
    for (Index i = 0; i < n; ++i) {
      Integer num = 2 * beta[i] * d->symmetrizer(i);
      if (num % len2 != 0) throw std::logic_error("non-integral coroot");
      c(i) = num / len2;
    }
    d->coroots.emplace_back(std::move(c));
    d->heights.push_back(to_long(beta.sum()));
    d->coroot_heights.push_back(to_long(d->coroots.back().sum()));
    if (d->short_length2 == 0 || len2 < d->short_length2) d->short_length2 = len2;
    d->length2.push_back(std::move(len2));
  }

  d->irreducible = connected(cartan);
  if (d->irreducible) {
    d->highest_long = d->roots.size() - 1;
    for (std::size_t k = 0; k < d->roots.size(); ++k)
      if (d->length2[k] == d->short_length2) d->alpha0 = k;
    d->coxeter = d->coroot_heights[d->alpha0] + 1;
  }

  for (Index i = 0; i < n; ++i) {
    Weight w = make_dominant_linear(cartan, -Weight::Unit(n, i));
    Index target = 0;
    while (target < n && w != Weight::Unit(n, target)) ++target;
    if (target == n) throw std::logic_error("-w0 does not permute fundamental weights");
    d->w0_perm.push_back(target);
  }

  RootSystem rs;
  rs.d_ = std::move(d);
  return rs;
}

std::optional<std::size_t> RootSystem::index_of(const RootCombo& r) const {
  auto it = d_->index.find(r);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

Integer pairing(const RootSystem& rs, const Weight& lambda, std::size_t k) { return pairing(lambda, rs.coroot(k)); }

Integer pairing(const Weight& lambda, const Coroot& c) { return dot(lambda.vec(), c.vec()); }

Weight root_to_weight(const RootSystem& rs, const RootCombo& theta) { return Weight(IntVector(rs.cartan() * theta.vec())); }

std::optional<RootCombo> weight_to_root_combo(const RootSystem& rs, const Weight& lambda) {
  IntVector out = sparse_product(rs.scaled_cartan_inverse(), lambda.vec());
  const Integer& den = rs.cartan_inverse_den();
  if (den == 1) return RootCombo(std::move(out));
  for (Index i = 0; i < out.size(); ++i) {
    if (out(i) % den != 0) return std::nullopt;
    out(i) /= den;
  }
  return RootCombo(std::move(out));
}

Rational inner(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  RatVector m = rs.weight_gram() * mu.vec().cast<Rational>();
  Rational s = 0;
  for (Index i = 0; i < m.size(); ++i) s += Rational(lambda[i]) * m(i);
  return s;
}

Integer inner(const RootSystem& rs, const Weight& lambda, const RootCombo& beta) {
  Integer s = 0;
  for (Index k = 0; k < beta.size(); ++k) s += beta[k] * rs.symmetrizer()(k) * lambda[k];
  return s;
}

bool is_dominant(const Weight& lambda) { return lambda.all_nonnegative(); }

bool is_restricted(const Weight& lambda, const Integer& bound) {
  for (Index i = 0; i < lambda.size(); ++i)
    if (lambda[i] < 0 || lambda[i] >= bound) return false;
  return true;
}

}  // namespace chevh1
