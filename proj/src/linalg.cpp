#include "dtte/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "dtte/errors.hpp"

namespace dtte {
namespace {

void check_shape(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0 || rows > kMaxMatrixDim || cols > kMaxMatrixDim) {
    throw DomainError("matrix shape " + std::to_string(rows) + "x" + std::to_string(cols) +
                      " outside [1,16]x[1,16]");
  }
}

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError("matrix shape mismatch");
  }
}

// Reduced row echelon form in place. Returns pivot columns in order.
std::vector<std::size_t> reduce_rows(ComplexMatrix& m, double tol) {
  const double threshold = tol * m.max_abs();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = r;
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (std::abs(m(i, c)) > std::abs(m(best, c))) best = i;
    }
    if (std::abs(m(best, c)) <= threshold) {
      // Below threshold: treat the column as free and flush the residue.
      for (std::size_t i = r; i < m.rows(); ++i) m(i, c) = 0.0;
      continue;
    }
    if (best != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(best, j));
    }
    const Complex inv = 1.0 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    m(r, c) = 1.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Complex f = m(i, c);
      if (f == Complex{}) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
      m(i, c) = 0.0;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  check_shape(rows, cols);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  check_shape(rows, cols);
  if (entries_.size() != rows * cols) throw DomainError("entry count does not match shape");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_columns(std::span<const ComplexVector> columns) {
  if (columns.empty()) throw DomainError("from_columns needs at least one column");
  ComplexMatrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.rows()) throw DomainError("ragged columns");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = columns[c][r];
  }
  return m;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
  ComplexVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const { return norm(entries_); }

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  check_same_shape(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  check_same_shape(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

KetVector KetVector::from_vector(std::span<const Complex> v) {
  if (v.size() != 4) throw DomainError("ket needs exactly 4 components");
  KetVector k;
  std::copy(v.begin(), v.end(), k.c.begin());
  return k;
}

double KetVector::norm() const { return dtte::norm(c); }

KetVector operator-(const KetVector& a, const KetVector& b) {
  KetVector d;
  for (std::size_t i = 0; i < 4; ++i) d[i] = a[i] - b[i];
  return d;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matmul: inner dimensions differ");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexVector matvec(const ComplexMatrix& a, std::span<const Complex> x) {
  if (a.cols() != x.size()) throw DomainError("matvec: dimension mismatch");
  ComplexVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex s{};
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

KetVector matvec(const ComplexMatrix& a, const KetVector& x) {
  if (a.rows() != 4) throw DomainError("matvec: ket result needs 4 rows");
  return KetVector::from_vector(matvec(a, std::span<const Complex>(x.c)));
}

ComplexMatrix hermitian_transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

std::size_t rank(const ComplexMatrix& a, double tol) {
  ComplexMatrix m = a;
  return reduce_rows(m, tol).size();
}

LeastSquaresResult solve_least_squares(const ComplexMatrix& a, std::span<const Complex> b,
                                       double rank_tol) {
  if (a.rows() < a.cols()) throw DomainError("least squares needs rows >= cols");
  if (b.size() != a.rows()) throw DomainError("least squares: rhs length mismatch");
  if (rank(a, rank_tol) < a.cols()) throw DegenerateBasis("least squares: rank-deficient system");

  const ComplexMatrix ah = hermitian_transpose(a);
  ComplexMatrix gram = ah * a;
  ComplexVector rhs = matvec(ah, b);
  const std::size_t n = a.cols();

  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = c;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (std::abs(gram(i, c)) > std::abs(gram(best, c))) best = i;
    }
    if (gram(best, c) == Complex{}) throw DegenerateBasis("least squares: singular normal matrix");
    if (best != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(gram(c, j), gram(best, j));
      std::swap(rhs[c], rhs[best]);
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      const Complex f = gram(i, c) / gram(c, c);
      for (std::size_t j = c; j < n; ++j) gram(i, j) -= f * gram(c, j);
      rhs[i] -= f * rhs[c];
    }
  }
  ComplexVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex s = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= gram(i, j) * x[j];
    x[i] = s / gram(i, i);
  }

  ComplexVector r = matvec(a, x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return {std::move(x), norm(r)};
}

std::vector<ComplexVector> null_space(const ComplexMatrix& a, double tol) {
  ComplexMatrix m = a;
  const auto pivots = reduce_rows(m, tol);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<ComplexVector> raw;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    ComplexVector x(a.cols());
    x[f] = 1.0;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m(i, f);
    raw.push_back(std::move(x));
  }
  return orthonormalize(raw);
}

std::vector<ComplexVector> orthonormalize(std::span<const ComplexVector> vectors, double tol) {
  std::vector<ComplexVector> basis;
  for (const auto& v : vectors) {
    ComplexVector w = v;
    const double original = norm(w);
    for (const auto& q : basis) {
      Complex proj{};
      for (std::size_t i = 0; i < w.size(); ++i) proj += std::conj(q[i]) * w[i];
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= proj * q[i];
    }
    const double n = norm(w);
    if (original == 0.0 || n <= tol * original) continue;
    for (auto& z : w) z /= n;
    basis.push_back(std::move(w));
  }
  return basis;
}

}  // namespace dtte
