#pragma once

// 2x2 matrix coefficients. All cochain values live in the complex 2x2
// matrix algebra; special unitary and anti-hermitian traceless matrices are
// distinguished classes inside it, not separate types.

#include <stdexcept>

#include <Eigen/Dense>

#include "dec4/scalar.hpp"

namespace dec4 {

template <class S>
using Mat2 = Eigen::Matrix<S, 2, 2>;

template <class S>
Mat2<S> mat_zero() {
  return Mat2<S>::Zero();
}

template <class S>
Mat2<S> mat_identity() {
  return Mat2<S>::Identity();
}

/// Conjugate transpose through ScalarOps. Never use Eigen's adjoint() on
/// these matrices: the exact scalar is registered with IsComplex = 0, so
/// adjoint() would silently skip conjugation.
template <class S>
Mat2<S> dagger(const Mat2<S>& m) {
  Mat2<S> out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out(r, c) = ScalarOps<S>::conj(m(c, r));
  return out;
}

template <class S>
Mat2<S> commutator(const Mat2<S>& a, const Mat2<S>& b) {
  return a * b - b * a;
}

template <class S>
bool mat_is_zero(const Mat2<S>& m) {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (!ScalarOps<S>::is_zero(m(r, c))) return false;
  return true;
}

template <class S>
bool mat_equal(const Mat2<S>& a, const Mat2<S>& b) {
  return mat_is_zero<S>(a - b);
}

template <class S>
double mat_max_abs(const Mat2<S>& m) {
  double v = 0.0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) v = std::max(v, ScalarOps<S>::magnitude(m(r, c)));
  return v;
}

template <class S>
bool mat_approx_zero(const Mat2<S>& m, double tol) {
  return mat_max_abs<S>(m) <= tol;
}

template <class S>
bool mat_approx(const Mat2<S>& a, const Mat2<S>& b, double tol) {
  return mat_approx_zero<S>(Mat2<S>(a - b), tol);
}

/// Basis of the anti-hermitian traceless matrices with real structure
/// constants: lie_basis(i) * lie_basis(j) - lie_basis(j) * lie_basis(i) =
/// lie_basis(k) for (i,j,k) cyclic in (0,1,2).
template <class S>
Mat2<S> lie_basis(int alpha) {
  const S i = ScalarOps<S>::imag_unit();
  const S half = ScalarOps<S>::one() / ScalarOps<S>::from_int(2);
  const S mhi = -(i * half);
  Mat2<S> m = Mat2<S>::Zero();
  switch (alpha) {
    case 0:
      m(0, 1) = mhi;
      m(1, 0) = mhi;
      break;
    case 1:
      m(0, 1) = -half;
      m(1, 0) = half;
      break;
    case 2:
      m(0, 0) = mhi;
      m(1, 1) = i * half;
      break;
    default:
      throw std::out_of_range("dec4: lie_basis index must be 0, 1 or 2");
  }
  return m;
}

enum class MatrixClass { special_unitary, unitary_algebra, traceless, invertible, singular };

inline const char* to_string(MatrixClass c) {
  switch (c) {
    case MatrixClass::special_unitary: return "special_unitary";
    case MatrixClass::unitary_algebra: return "unitary_algebra";
    case MatrixClass::traceless: return "traceless";
    case MatrixClass::invertible: return "invertible";
    case MatrixClass::singular: return "singular";
  }
  return "unknown";
}

/// Most specific class first: special unitary, then anti-hermitian traceless,
/// then traceless, then merely invertible. Float mode compares entrywise
/// against `tol`; exact mode requires literal equality.
template <class S>
MatrixClass classify(const Mat2<S>& m, double tol = 1e-10) {
  const auto near = [&](const Mat2<S>& a, const Mat2<S>& b) {
    return ScalarOps<S>::exact ? mat_equal<S>(a, b) : mat_approx<S>(a, b, tol);
  };
  const auto scalar_near = [&](const S& a, const S& b) {
    return ScalarOps<S>::exact ? a == b : ScalarOps<S>::magnitude(a - b) <= tol;
  };
  const Mat2<S> dg = dagger(m);
  const S det = m.determinant();
  if (near(Mat2<S>(dg * m), mat_identity<S>()) && scalar_near(det, ScalarOps<S>::one()))
    return MatrixClass::special_unitary;
  const bool traceless = scalar_near(m.trace(), ScalarOps<S>::zero());
  if (traceless && near(dg, Mat2<S>(-m))) return MatrixClass::unitary_algebra;
  if (traceless) return MatrixClass::traceless;
  if (!scalar_near(det, ScalarOps<S>::zero())) return MatrixClass::invertible;
  return MatrixClass::singular;
}

/// Unit-determinant unitary from a quaternion (a,b,c,d) scaled by 1/r where
/// r*r = a*a + b*b + c*c + d*d; throws if the norm condition fails. Over the
/// exact scalar this builds honest special unitary matrices from Pythagorean
/// quadruples like (1,2,2,0)/3.
template <class S>
Mat2<S> su2_from_quaternion(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                            std::int64_t r) {
  if (r <= 0 || a * a + b * b + c * c + d * d != r * r)
    throw std::invalid_argument("dec4: quaternion norm does not match scale");
  const S i = ScalarOps<S>::imag_unit();
  const auto f = [&](std::int64_t num) {
    return ScalarOps<S>::from_int(num) / ScalarOps<S>::from_int(r);
  };
  Mat2<S> m;
  m(0, 0) = f(a) + i * f(b);
  m(0, 1) = f(c) + i * f(d);
  m(1, 0) = -f(c) + i * f(d);
  m(1, 1) = f(a) - i * f(b);
  return m;
}

/// Inverse with an explicit singularity check; exact mode rejects det == 0,
/// float mode rejects |det| <= tol.
template <class S>
Mat2<S> inverse_checked(const Mat2<S>& m, double tol = 1e-14) {
  const S det = m.determinant();
  const bool singular =
      ScalarOps<S>::exact ? ScalarOps<S>::is_zero(det) : ScalarOps<S>::magnitude(det) <= tol;
  if (singular) throw std::domain_error("dec4: matrix is not invertible");
  return m.inverse();
}

}  // namespace dec4
