#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ring/multipoly.hpp"
#include "ring/rational.hpp"

namespace dvb {

/// Dense 3-index array, row-major in (i, j, k).
template <class T>
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2, const T& fill)
      : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2, fill) {}

  std::size_t dim0() const { return d0_; }
  std::size_t dim1() const { return d1_; }
  std::size_t dim2() const { return d2_; }

  T& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * d1_ + j) * d2_ + k]; }
  const T& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * d1_ + j) * d2_ + k]; }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.d2_ == b.d2_ && a.data_ == b.data_;
  }

 private:
  std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
  std::vector<T> data_;
};

using RatTensor3 = Tensor3<Rational>;
using PolyTensor3 = Tensor3<MultiPoly>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix scalar(std::size_t n, const Rational& s);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix transpose() const;
  RatMatrix operator-() const;
  RatVec apply(const RatVec& v) const;
  bool is_square() const { return rows_ == cols_; }

  /// Exact determinant by fraction-free (Bareiss) elimination.
  Rational determinant() const;
  /// Solves M·y = rhs exactly. Throws Error(Singular) when det M = 0.
  RatVec solve(const RatVec& rhs) const;
  RatMatrix inverse() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, const VarList& vars);

  static PolyMatrix identity(std::size_t n, const VarList& vars);
  static PolyMatrix constant(const RatMatrix& m, const VarList& vars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const VarList& vars() const { return vars_; }
  MultiPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix eval(std::span<const Rational> point) const;
  PolyMatrix transpose() const;
  PolyMatrix operator-() const;
  PolyMatrix embed(const VarList& target) const;
  std::vector<MultiPoly> apply(const std::vector<MultiPoly>& v) const;
  bool is_zero() const;

  /// Laplace expansion; intended for the small blocks used here.
  MultiPoly determinant() const;
  PolyMatrix adjugate() const;
  /// Polynomial inverse, available when det is a nonzero constant.
  /// Throws Error(Singular) otherwise.
  PolyMatrix inverse_unimodular() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  VarList vars_;
  std::vector<MultiPoly> data_;
};

/// Solves M(point)·y = rhs exactly; throws Error(Singular) when M(point) is
/// not invertible.
RatVec mat_solve_at(const PolyMatrix& m, std::span<const Rational> point, const RatVec& rhs);

}  // namespace dvb
