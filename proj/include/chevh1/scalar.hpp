#pragma once

// Exact scalar types and the Eigen dense aliases used throughout the library.
//
// Every quantity in this library is an exact integer or rational: divisibility
// tests such as "q - 1 divides every coordinate" must never see rounding.  GMP
// supplies the arithmetic; Eigen supplies the dense containers and the
// matrix/vector expressions built on top of them.

#include <gmpxx.h>

#include <Eigen/Core>
#include <Eigen/LU>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace chevh1 {

using Integer = mpz_class;
using Rational = mpq_class;
using Index = Eigen::Index;

template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = VectorX<Integer>;
using IntMatrix = MatrixX<Integer>;
using RatVector = VectorX<Rational>;
using RatMatrix = MatrixX<Rational>;

/// Narrow an exact integer to a machine long; throws if it does not fit.
inline long to_long(const Integer& x) {
  if (!x.fits_slong_p()) {
    throw std::overflow_error("integer " + x.get_str() + " does not fit in long");
  }
  return x.get_si();
}

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

/// Floor division for exact integers (rounds toward negative infinity).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Dot product of two integer vectors without building an Eigen expression.
template <class DerivedA, class DerivedB>
Integer dot(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  Integer s = 0;
  for (Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

template <class Derived>
Integer gcd_of(const Eigen::MatrixBase<Derived>& v) {
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(v(i)).get_mpz_t());
  }
  return g;
}

}  // namespace chevh1
