#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "liestruct/rational.hpp"

namespace liestruct {

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Small dense row-major matrix. T is Rat (exact mode) or double (float mode);
// the two never mix implicitly.
template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, T(0)) {}
  Mat(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = int(init.size());
    cols_ = rows_ ? int(init.begin()->size()) : 0;
    a_.reserve(size_t(rows_) * cols_);
    for (const auto& r : init) {
      if (int(r.size()) != cols_) throw DimensionMismatch("ragged initializer");
      for (const auto& v : r) a_.push_back(v);
    }
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!(v == T(0))) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!((*this)(i, j) == (i == j ? T(1) : T(0)))) return false;
    return true;
  }

  Mat operator+(const Mat& o) const {
    check_same(o);
    Mat r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
  }
  Mat operator-(const Mat& o) const {
    check_same(o);
    Mat r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
  }
  Mat operator-() const {
    Mat r = *this;
    for (auto& v : r.a_) v = -v;
    return r;
  }
  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& v = (*this)(i, k);
        if (v == T(0)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
      }
    return r;
  }
  friend Mat operator*(const T& s, const Mat& m) {
    Mat r = m;
    for (auto& v : r.a_) v = s * v;
    return r;
  }

  const std::vector<T>& data() const { return a_; }
  std::vector<T>& data() { return a_; }

 private:
  void check_same(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape");
  }
  int rows_, cols_;
  std::vector<T> a_;
};

using QMat = Mat<Rat>;
using DMat = Mat<double>;
using QVec = std::vector<Rat>;

inline DMat to_double(const QMat& m) {
  DMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = rat_to_double(m(i, j));
  return r;
}

// ---------------------------------------------------------------------------
// Exact linear algebra over Rat: Gauss-Jordan based determinant, inverse, and
// reduced row echelon with pivot tracking (nullspace / affine solves).
// ---------------------------------------------------------------------------

inline Rat qdet(QMat m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("det of non-square");
  const int n = m.rows();
  Rat d(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!rat_is_zero(m(r, c))) { piv = r; break; }
    if (piv < 0) return Rat(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    const Rat pv = m(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (rat_is_zero(m(r, c))) continue;
      Rat f = m(r, c) / pv;
      for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

inline QMat qinverse(const QMat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square");
  const int n = m.rows();
  QMat w(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = m(i, j);
    w(i, n + i) = Rat(1);
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!rat_is_zero(w(r, c))) { piv = r; break; }
    if (piv < 0) throw SingularMatrix("matrix not invertible");
    if (piv != c)
      for (int j = 0; j < 2 * n; ++j) std::swap(w(piv, j), w(c, j));
    const Rat pv = w(c, c);
    for (int j = 0; j < 2 * n; ++j) w(c, j) /= pv;
    for (int r = 0; r < n; ++r) {
      if (r == c || rat_is_zero(w(r, c))) continue;
      Rat f = w(r, c);
      for (int j = 0; j < 2 * n; ++j) w(r, j) -= f * w(c, j);
    }
  }
  QMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = w(i, n + j);
  return inv;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<int> qrref(QMat& m) {
  std::vector<int> pivots;
  int pr = 0;
  for (int c = 0; c < m.cols() && pr < m.rows(); ++c) {
    int piv = -1;
    for (int r = pr; r < m.rows(); ++r)
      if (!rat_is_zero(m(r, c))) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != pr)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(pr, j));
    const Rat pv = m(pr, c);
    for (int j = 0; j < m.cols(); ++j) m(pr, j) /= pv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == pr || rat_is_zero(m(r, c))) continue;
      Rat f = m(r, c);
      for (int j = 0; j < m.cols(); ++j) m(r, j) -= f * m(pr, j);
    }
    pivots.push_back(c);
    ++pr;
  }
  return pivots;
}

// Solution of A x = b over the rationals.
struct AffineSolution {
  bool consistent = false;
  QVec particular;              // one solution (empty if inconsistent)
  std::vector<QVec> nullspace;  // basis of the homogeneous solutions
};

inline AffineSolution qsolve_affine(const QMat& A, const QVec& b) {
  const int m = A.rows(), n = A.cols();
  if (int(b.size()) != m) throw DimensionMismatch("rhs length");
  QMat w(m, n + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = A(i, j);
    w(i, n) = b[i];
  }
  std::vector<int> pivots = qrref(w);
  AffineSolution sol;
  if (!pivots.empty() && pivots.back() == n) return sol;  // pivot in rhs column
  // also catch 0 = nonzero rows below pivot rows
  for (int r = int(pivots.size()); r < m; ++r)
    if (!rat_is_zero(w(r, n))) return sol;
  sol.consistent = true;
  sol.particular.assign(n, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = w(int(r), n);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    QVec v(n, Rat(0));
    v[c] = Rat(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w(int(r), c);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

// Nullspace basis of A x = 0.
inline std::vector<QVec> qnullspace(const QMat& A) {
  return qsolve_affine(A, QVec(A.rows(), Rat(0))).nullspace;
}

// Is v in the span of the given vectors?
inline bool qin_span(const QVec& v, const std::vector<QVec>& basis) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (!rat_is_zero(x)) return false;
    return true;
  }
  const int m = int(v.size()), n = int(basis.size());
  QMat A(m, n);
  for (int j = 0; j < n; ++j) {
    if (int(basis[j].size()) != m) throw DimensionMismatch("basis vector length");
    for (int i = 0; i < m; ++i) A(i, j) = basis[j][i];
  }
  return qsolve_affine(A, v).consistent;
}

}  // namespace liestruct
