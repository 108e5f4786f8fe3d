#include "nilcarnot/matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nilcarnot {

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::domain_error("vector size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::domain_error("vector size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Rational& c, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Vector negate(const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::domain_error("vector size mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = Rational(1);
  return v;
}

std::string vector_str(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::domain_error("ragged initializer");
    for (const auto& x : r) e_.push_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::domain_error("row length mismatch");
    m.set_row(r, rows[r]);
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::domain_error("matrix shape mismatch");
  Matrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, j) += aik * b.at(k, j);
    }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return a.e_ == b.e_;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::domain_error("matrix/vector shape mismatch");
  Vector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s;
    for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "[ ";
    for (std::size_t c = 0; c < m.cols(); ++c) os << m.at(r, c) << " ";
    os << "]\n";
  }
  return os;
}

RrefResult rref_with_pivots(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(lead, c));
    Rational inv = Rational(1) / a.at(lead, col);
    for (std::size_t c = col; c < a.cols(); ++c) a.at(lead, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a.at(r, col).is_zero()) continue;
      Rational f = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(lead, c);
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(a), std::move(pivots)};
}

Matrix rref(const Matrix& m) { return rref_with_pivots(m).mat; }

std::size_t rank(const Matrix& m) { return rref_with_pivots(m).pivot_cols.size(); }

Matrix kernel_basis(const Matrix& m) {
  auto [r, pivots] = rref_with_pivots(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> rows;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vector v(m.cols());
    v[free_col] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free_col);
    rows.push_back(std::move(v));
  }
  // free-column construction already yields rref order; normalize anyway so
  // the basis is canonical by construction, not convention
  return rref(Matrix::from_rows(rows, m.cols()));
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("determinant of non-square matrix");
  Matrix a = m;
  std::size_t n = a.rows();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col).is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(piv, c), a.at(col, c));
      det = -det;
    }
    det *= a.at(col, col);
    Rational inv = Rational(1) / a.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a.at(r, col).is_zero()) continue;
      Rational f = a.at(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
    }
  }
  return det;
}

namespace {

// rref of [a | b]; returns solution if unique+consistent, throws otherwise.
Vector solve_augmented(const Matrix& a, const Vector& b, bool require_square) {
  if (a.rows() != b.size()) throw std::domain_error("solve: shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  auto [red, pivots] = rref_with_pivots(aug);
  for (auto p : pivots)
    if (p == a.cols()) throw std::domain_error("solve: inconsistent system");
  if (pivots.size() != a.cols())
    throw std::domain_error(require_square ? "solve: singular matrix"
                                           : "solve: underdetermined system");
  Vector x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red.at(i, a.cols());
  return x;
}

}  // namespace

Vector solve(const Matrix& a, const Vector& b) { return solve_augmented(a, b, true); }

Vector coordinates_in_basis(const Matrix& basis, const Vector& v) {
  // c^T basis = v  <=>  basis^T c = v^T
  return solve_augmented(basis.transpose(), v, false);
}

std::optional<Matrix> try_solve_matrix(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::domain_error("try_solve_matrix: shape mismatch");
  Matrix aug(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug.at(r, a.cols() + c) = b.at(r, c);
  }
  auto [red, pivots] = rref_with_pivots(aug);
  for (auto p : pivots)
    if (p >= a.cols()) return std::nullopt;  // inconsistent
  if (pivots.size() != a.cols()) return std::nullopt;  // underdetermined
  Matrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t c = 0; c < b.cols(); ++c) x.at(pivots[i], c) = red.at(i, a.cols() + c);
  return x;
}

}  // namespace nilcarnot
