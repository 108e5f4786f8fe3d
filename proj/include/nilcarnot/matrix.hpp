#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nilcarnot/rational.hpp"

namespace nilcarnot {

using Vector = std::vector<Rational>;

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& c, const Vector& v);
Vector negate(const Vector& v);
Rational dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);
Vector zero_vector(std::size_t n);
Vector unit(std::size_t n, std::size_t i);
std::string vector_str(const Vector& v);

/// Dense matrix of exact rationals, row-major.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  void set_row(std::size_t r, const Vector& v);

  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Matrix applied to a column vector.
  Vector apply(const Vector& v) const;

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

struct RrefResult {
  Matrix mat;
  std::vector<std::size_t> pivot_cols;
};

/// Unique reduced row echelon form; row space preserved.
Matrix rref(const Matrix& m);
RrefResult rref_with_pivots(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Canonical rref basis of the right null space {x : m x = 0}.
Matrix kernel_basis(const Matrix& m);

/// Determinant of a square matrix (fraction-free not needed at these sizes).
Rational determinant(const Matrix& m);

/// Solves a x = b for square invertible a. Throws std::domain_error if
/// singular or inconsistent.
Vector solve(const Matrix& a, const Vector& b);

/// Solves a X = b column-wise when the solution exists and is unique;
/// nullopt when inconsistent or underdetermined.
std::optional<Matrix> try_solve_matrix(const Matrix& a, const Matrix& b);

/// Coefficients c with c^T rows = v, where the rows of `basis` are linearly
/// independent. Throws std::domain_error if v is outside the row space.
Vector coordinates_in_basis(const Matrix& basis, const Vector& v);

}  // namespace nilcarnot
