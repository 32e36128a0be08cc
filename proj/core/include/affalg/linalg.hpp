#ifndef AFFALG_LINALG_HPP
#define AFFALG_LINALG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "affalg/scalar.hpp"

namespace affalg {

/// Dense exact vector; all entries share one field.
class Vector {
public:
  Vector(Field f, std::size_t dim) : field_(f), e_(dim, Scalar::zero(f)) {}
  Vector(Field f, std::vector<Scalar> entries);
  static Vector unit(Field f, std::size_t dim, std::size_t i);

  const Field& field() const { return field_; }
  std::size_t dim() const { return e_.size(); }

  Scalar& operator[](std::size_t i) { return e_[i]; }
  const Scalar& operator[](std::size_t i) const { return e_[i]; }

  Vector operator+(const Vector& o) const;
  Vector operator-(const Vector& o) const;
  Vector operator-() const;
  Vector operator*(const Scalar& s) const;
  bool operator==(const Vector& o) const;
  bool operator!=(const Vector& o) const { return !(*this == o); }

  bool is_zero() const;
  std::string str() const;

private:
  Field field_;
  std::vector<Scalar> e_;
};

/// Dense exact matrix, row-major.
class Matrix {
public:
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols),
        e_(rows * cols, Scalar::zero(f)) {}
  static Matrix identity(Field f, std::size_t n);
  /// Builds from row-major long literals, for tests and fixtures.
  static Matrix from_rows(Field f,
                          const std::vector<std::vector<long>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator*(const Scalar& s) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transposed() const;
  bool is_zero() const;
  bool is_identity() const;
  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  std::string str() const;

private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

RrefResult rref(const Matrix& a);
std::size_t rank(const Matrix& a);

/// Exact solution of A x = b; absent when inconsistent. The canonical
/// particular solution sets every free variable to zero.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Basis of the null space {x : A x = 0}; size = cols - rank.
std::vector<Vector> kernel(const Matrix& a);

std::optional<Matrix> inverse(const Matrix& a);

/// Affine solution set of A x = b: a canonical particular solution plus a
/// kernel basis. `particular` is absent when the system is inconsistent.
struct SolutionSpace {
  std::size_t ambient_dim = 0;
  std::optional<Vector> particular;
  std::vector<Vector> basis;

  std::size_t dim() const { return basis.size(); }
  bool consistent() const { return particular.has_value(); }
};

SolutionSpace solve_affine(const Matrix& a, const Vector& b);

/// Row-major flattening, inverse of unflatten.
Vector flatten(const Matrix& m);
Matrix unflatten(Field f, std::size_t rows, std::size_t cols, const Vector& v,
                 std::size_t offset = 0);

bool commute(const Matrix& a, const Matrix& b);

/// True when v lies in the span of the given vectors (rank test).
bool in_span(const std::vector<Vector>& span, const Vector& v);

} // namespace affalg

#endif
