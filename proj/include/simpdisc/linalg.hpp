#pragma once
//
// Dense matrices over an exact field (cpp_rational), the integers (cpp_int)
// or doubles.  Only what rank decisions, small solves and Smith normal form
// need.
//

#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "simpdisc/error.hpp"

namespace simpdisc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<long>(r * cols_),
                          data_.begin() + static_cast<long>((r + 1) * cols_));
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }
  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class T>
inline constexpr bool is_exact_v = !std::is_floating_point_v<T>;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

template <class T>
T from_rational(const Rational& q) {
  if constexpr (std::is_floating_point_v<T>)
    return q.convert_to<T>();
  else
    return T(q);
}

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Incrementally maintained span.  add() reports whether a vector is
/// independent of everything added before.  Exact scalars use a reduced
/// echelon basis; doubles use twice-orthogonalized Gram-Schmidt with a
/// relative tolerance on the residual norm.
template <class T>
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t dim, double tol = 1e-9) : dim_(dim), tol_(tol) {}

  bool add(std::vector<T> v) {
    if (v.size() != dim_) throw DimensionMismatch("basis: vector has wrong length");
    if constexpr (is_exact_v<T>) {
      for (std::size_t b = 0; b < basis_.size(); ++b) {
        const auto p = pivots_[b];
        if (v[p] == 0) continue;
        const T factor = v[p] / basis_[b][p];
        for (std::size_t i = 0; i < dim_; ++i)
          if (basis_[b][i] != 0) v[i] -= factor * basis_[b][i];
      }
      for (std::size_t i = 0; i < dim_; ++i)
        if (v[i] != 0) {
          basis_.push_back(std::move(v));
          pivots_.push_back(i);
          return true;
        }
      return false;
    } else {
      const double norm0 = norm(v);
      if (norm0 == 0.0) return false;
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& q : basis_) {
          double dot = 0;
          for (std::size_t i = 0; i < dim_; ++i) dot += q[i] * v[i];
          for (std::size_t i = 0; i < dim_; ++i) v[i] -= dot * q[i];
        }
      const double r = norm(v);
      if (r <= tol_ * norm0) return false;
      for (auto& x : v) x /= r;
      basis_.push_back(std::move(v));
      return true;
    }
  }
  std::size_t rank() const { return basis_.size(); }

 private:
  static double norm(const std::vector<T>& v) {
    double s = 0;
    for (const auto& x : v) s += static_cast<double>(x) * static_cast<double>(x);
    return std::sqrt(s);
  }

  std::size_t dim_;
  double tol_;
  std::vector<std::vector<T>> basis_;
  std::vector<std::size_t> pivots_;
};

/// Rank of `m`.  Exact for rational input; tolerance-based for doubles.
template <class T>
std::size_t rank(const Matrix<T>& m, double tol = 1e-9) {
  IncrementalBasis<T> b(m.cols(), tol);
  for (std::size_t r = 0; r < m.rows(); ++r) b.add(m.row(r));
  return b.rank();
}

/// Solves a x = rhs for square invertible `a` (Gaussian elimination with
/// partial pivoting).  Throws NumericInconsistency if `a` is singular.
template <class T>
std::vector<T> solve(Matrix<T> a, std::vector<T> rhs) {
  const std::size_t n = a.rows();
  if (a.cols() != n || rhs.size() != n) throw DimensionMismatch("solve: shape mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    if constexpr (is_exact_v<T>) {
      for (std::size_t r = c; r < n; ++r)
        if (a(r, c) != 0) {
          piv = r;
          break;
        }
    } else {
      double best = 0;
      for (std::size_t r = c; r < n; ++r)
        if (std::abs(a(r, c)) > best) {
          best = std::abs(a(r, c));
          piv = r;
        }
    }
    if (piv == n || a(piv, c) == 0) throw NumericInconsistency("solve: singular system");
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      std::swap(rhs[piv], rhs[c]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const T f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) rhs[r] /= a(r, r);
  return rhs;
}

}  // namespace simpdisc
