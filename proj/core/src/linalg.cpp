#include "affalg/linalg.hpp"

#include <sstream>

namespace affalg {

Vector::Vector(Field f, std::vector<Scalar> entries)
    : field_(f), e_(std::move(entries)) {
  for (const Scalar& s : e_)
    if (!(s.field() == field_))
      throw FieldMismatch("vector entries must share one field");
}

Vector Vector::unit(Field f, std::size_t dim, std::size_t i) {
  Vector v(f, dim);
  v[i] = Scalar::one(f);
  return v;
}

Vector Vector::operator+(const Vector& o) const {
  if (dim() != o.dim()) throw DimensionMismatch("vector add");
  Vector out(field_, dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = e_[i] + o.e_[i];
  return out;
}

Vector Vector::operator-(const Vector& o) const {
  if (dim() != o.dim()) throw DimensionMismatch("vector sub");
  Vector out(field_, dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = e_[i] - o.e_[i];
  return out;
}

Vector Vector::operator-() const {
  Vector out(field_, dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = -e_[i];
  return out;
}

Vector Vector::operator*(const Scalar& s) const {
  Vector out(field_, dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = e_[i] * s;
  return out;
}

bool Vector::operator==(const Vector& o) const {
  if (dim() != o.dim() || !(field_ == o.field_)) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

bool Vector::is_zero() const {
  for (const Scalar& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

std::string Vector::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < dim(); ++i)
    os << (i ? "," : "") << e_[i].str();
  os << ")";
  return os.str();
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(f, rows[i][j]);
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix add");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix sub");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = -e_[i];
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product");
  if (!(field_ == o.field_)) throw FieldMismatch("matrix product");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out.at(i, j) += aik * o.at(k, j);
    }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.dim()) throw DimensionMismatch("matrix-vector product");
  if (!(field_ == v.field())) throw FieldMismatch("matrix-vector product");
  Vector out(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * s;
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
    return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

Matrix Matrix::transposed() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  return rows_ == cols_ && *this == identity(field_, rows_);
}

Vector Matrix::row(std::size_t i) const {
  Vector v(field_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vector Matrix::col(std::size_t j) const {
  Vector v(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? "," : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

RrefResult rref(const Matrix& a) {
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(p, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).rank(); }

SolutionSpace solve_affine(const Matrix& a, const Vector& b) {
  if (a.rows() != b.dim()) throw DimensionMismatch("solve: rows vs rhs");
  if (!(a.field() == b.field())) throw FieldMismatch("solve");
  const Field f = a.field();
  const std::size_t n = a.cols();

  Matrix aug(f, a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[i];
  }
  RrefResult rr = rref(aug);

  SolutionSpace out;
  out.ambient_dim = n;

  bool consistent = true;
  for (const std::size_t c : rr.pivot_cols)
    if (c == n) consistent = false;

  std::vector<bool> is_pivot(n, false);
  for (const std::size_t c : rr.pivot_cols)
    if (c < n) is_pivot[c] = true;

  if (consistent) {
    Vector x(f, n);
    std::size_t row = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!is_pivot[c]) continue;
      x[c] = rr.reduced.at(row, n);
      ++row;
    }
    out.particular = x;
  }

  for (std::size_t free_c = 0; free_c < n; ++free_c) {
    if (is_pivot[free_c]) continue;
    Vector v(f, n);
    v[free_c] = Scalar::one(f);
    std::size_t row = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!is_pivot[c]) continue;
      v[c] = -rr.reduced.at(row, free_c);
      ++row;
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  SolutionSpace s = solve_affine(a, b);
  return s.particular;
}

std::vector<Vector> kernel(const Matrix& a) {
  return solve_affine(a, Vector(a.field(), a.rows())).basis;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw NotSquare("inverse of non-square matrix");
  const std::size_t n = a.rows();
  const Field f = a.field();
  Matrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = Scalar::one(f);
  }
  RrefResult rr = rref(aug);
  if (rr.rank() < n || rr.pivot_cols[n - 1] >= n) return std::nullopt;
  Matrix inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.reduced.at(i, n + j);
  return inv;
}

Vector flatten(const Matrix& m) {
  Vector v(m.field(), m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
  return v;
}

Matrix unflatten(Field f, std::size_t rows, std::size_t cols, const Vector& v,
                 std::size_t offset) {
  if (v.dim() < offset + rows * cols)
    throw DimensionMismatch("unflatten: vector too short");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = v[offset + i * cols + j];
  return m;
}

bool commute(const Matrix& a, const Matrix& b) { return a * b == b * a; }

bool in_span(const std::vector<Vector>& span, const Vector& v) {
  if (span.empty()) return v.is_zero();
  const Field f = v.field();
  Matrix stacked(f, span.size() + 1, v.dim());
  for (std::size_t i = 0; i < span.size(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) stacked.at(i, j) = span[i][j];
  for (std::size_t j = 0; j < v.dim(); ++j)
    stacked.at(span.size(), j) = v[j];
  Matrix base(f, span.size(), v.dim());
  for (std::size_t i = 0; i < span.size(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) base.at(i, j) = span[i][j];
  return rank(stacked) == rank(base);
}

} // namespace affalg
