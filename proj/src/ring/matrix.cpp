#include "ring/matrix.hpp"

#include "error.hpp"

namespace dvb {

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

// Scales each row of a rational matrix to integers. Returns the product of
// the per-row scale factors.
mpz_class integerize(const std::vector<std::vector<Rational>>& rows, IntRows& out) {
  mpz_class scale_product = 1;
  out.assign(rows.size(), {});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    mpz_class l = 1;
    for (const auto& q : rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    out[i].reserve(rows[i].size());
    for (const auto& q : rows[i]) out[i].push_back(q.get_num() * (l / q.get_den()));
    scale_product *= l;
  }
  return scale_product;
}

// Bareiss fraction-free forward elimination on the first `pivots` columns.
// Returns false when a pivot column has no nonzero entry.
bool bareiss(IntRows& a, std::size_t pivots, int& sign) {
  sign = 1;
  mpz_class prev = 1;
  const std::size_t rows = a.size();
  for (std::size_t k = 0; k < pivots; ++k) {
    std::size_t p = k;
    while (p < rows && a[p][k] == 0) ++p;
    if (p == rows) return false;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < a[i].size(); ++j) {
        mpz_class t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return true;
}

}  // namespace

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) { return scalar(n, Rational(1)); }

RatMatrix RatMatrix::scalar(std::size_t n, const Rational& s) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix m = *this;
  for (auto& q : m.data_) q = -q;
  return m;
}

RatVec RatMatrix::apply(const RatVec& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "matrix-vector size mismatch");
  RatVec out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

Rational RatMatrix::determinant() const {
  if (!is_square()) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  if (rows_ == 0) return Rational(1);
  std::vector<std::vector<Rational>> rows(rows_);
  for (std::size_t i = 0; i < rows_; ++i) rows[i].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  IntRows a;
  const mpz_class scale = integerize(rows, a);
  int sign = 1;
  if (!bareiss(a, rows_, sign)) return Rational(0);
  Rational det(a[rows_ - 1][rows_ - 1] * sign, scale);
  det.canonicalize();
  return det;
}

RatVec RatMatrix::solve(const RatVec& rhs) const {
  if (!is_square()) throw Error(ErrorCode::ShapeMismatch, "solve needs a square matrix");
  if (rhs.size() != rows_) throw Error(ErrorCode::ShapeMismatch, "right-hand side has wrong length");
  const std::size_t n = rows_;
  std::vector<std::vector<Rational>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    rows[i].push_back(rhs[i]);
  }
  IntRows a;
  integerize(rows, a);
  int sign = 1;
  if (!bareiss(a, n, sign)) throw Error(ErrorCode::Singular, "matrix is singular at this point");
  RatVec y(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc(a[k][n]);
    for (std::size_t j = k + 1; j < n; ++j) acc -= Rational(a[k][j]) * y[j];
    y[k] = acc / Rational(a[k][k]);
  }
  return y;
}

RatMatrix RatMatrix::inverse() const {
  if (!is_square()) throw Error(ErrorCode::ShapeMismatch, "inverse of a non-square matrix");
  RatMatrix inv(rows_, rows_);
  for (std::size_t j = 0; j < rows_; ++j) {
    RatVec e(rows_, Rational(0));
    e[j] = 1;
    const RatVec col = solve(e);
    for (std::size_t i = 0; i < rows_; ++i) inv(i, j) = col[i];
  }
  return inv;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum shape mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const VarList& vars)
    : rows_(rows), cols_(cols), vars_(vars), data_(rows * cols, MultiPoly(vars)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, const VarList& vars) {
  return constant(RatMatrix::identity(n), vars);
}

PolyMatrix PolyMatrix::constant(const RatMatrix& m, const VarList& vars) {
  PolyMatrix out(m.rows(), m.cols(), vars);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = MultiPoly::constant(vars, m(i, j));
  return out;
}

RatMatrix PolyMatrix::eval(std::span<const Rational> point) const {
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).eval(point);
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, vars_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix m = *this;
  for (auto& p : m.data_) p = -p;
  return m;
}

PolyMatrix PolyMatrix::embed(const VarList& target) const {
  PolyMatrix out(rows_, cols_, target);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].embed(target);
  return out;
}

std::vector<MultiPoly> PolyMatrix::apply(const std::vector<MultiPoly>& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "matrix-vector size mismatch");
  std::vector<MultiPoly> out(rows_, MultiPoly(vars_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

namespace {

MultiPoly laplace(const PolyMatrix& m, std::vector<std::size_t>& rows, std::vector<std::size_t>& cols) {
  const std::size_t n = rows.size();
  if (n == 0) return MultiPoly::constant(m.vars(), 1);
  if (n == 1) return m(rows[0], cols[0]);
  MultiPoly acc(m.vars());
  const std::size_t r = rows.front();
  rows.erase(rows.begin());
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t col = cols[c];
    if (m(r, col).is_zero()) continue;
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(c));
    MultiPoly minor = laplace(m, rows, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(c), col);
    MultiPoly term = m(r, col) * minor;
    if (c % 2) acc -= term;
    else acc += term;
  }
  rows.insert(rows.begin(), r);
  return acc;
}

}  // namespace

MultiPoly PolyMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  std::vector<std::size_t> rows(rows_), cols(cols_);
  for (std::size_t i = 0; i < rows_; ++i) rows[i] = cols[i] = i;
  return laplace(*this, rows, cols);
}

PolyMatrix PolyMatrix::adjugate() const {
  if (rows_ != cols_) throw Error(ErrorCode::ShapeMismatch, "adjugate of a non-square matrix");
  const std::size_t n = rows_;
  PolyMatrix adj(n, n, vars_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      MultiPoly minor = laplace(*this, rows, cols);
      adj(i, j) = (i + j) % 2 ? -minor : minor;
    }
  return adj;
}

PolyMatrix PolyMatrix::inverse_unimodular() const {
  const MultiPoly det = determinant();
  const auto c = det.constant_value();
  if (!c || *c == 0) throw Error(ErrorCode::Singular, "determinant is not a nonzero constant: " + det.to_string());
  PolyMatrix inv = adjugate();
  const Rational s = 1 / *c;
  for (auto& p : inv.data_) p = p.scaled(s);
  return inv;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
  PolyMatrix out(a.rows_, b.cols_, a.vars_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const MultiPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum shape mismatch");
  PolyMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

RatVec mat_solve_at(const PolyMatrix& m, std::span<const Rational> point, const RatVec& rhs) {
  return m.eval(point).solve(rhs);
}

}  // namespace dvb
