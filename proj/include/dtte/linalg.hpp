#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace dtte {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr std::size_t kMaxMatrixDim = 16;
inline constexpr double kDefaultRankTolerance = 1e-10;

// Small dense complex matrix, row-major. Both dimensions lie in [1, 16].
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_columns(std::span<const ComplexVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const Complex> entries() const { return entries_; }

  Complex operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  ComplexVector column(std::size_t c) const;

  double max_abs() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

// Four spinor components (psi^1..psi^4).
struct KetVector {
  std::array<Complex, 4> c{};

  Complex operator[](std::size_t i) const { return c[i]; }
  Complex& operator[](std::size_t i) { return c[i]; }

  ComplexVector to_vector() const { return {c.begin(), c.end()}; }
  static KetVector from_vector(std::span<const Complex> v);

  double norm() const;
  friend bool operator==(const KetVector&, const KetVector&) = default;
};

KetVector operator-(const KetVector& a, const KetVector& b);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexVector matvec(const ComplexMatrix& a, std::span<const Complex> x);
KetVector matvec(const ComplexMatrix& a, const KetVector& x);

ComplexMatrix hermitian_transpose(const ComplexMatrix& a);

double norm(std::span<const Complex> v);

// Rank by Gaussian elimination with partial pivoting. A pivot counts when its
// magnitude exceeds tol times the largest entry of `a`.
std::size_t rank(const ComplexMatrix& a, double tol = kDefaultRankTolerance);

struct LeastSquaresResult {
  ComplexVector x;
  double residual_norm;
};

// Minimizes |a x - b| through the normal equations. Throws DegenerateBasis when
// rank(a) < a.cols() and DomainError when a.rows() < a.cols().
LeastSquaresResult solve_least_squares(const ComplexMatrix& a, std::span<const Complex> b,
                                       double rank_tol = kDefaultRankTolerance);

// Orthonormal kernel basis: RREF with partial pivoting (pivots at or below
// tol * max|a_ij| are treated as zero), then modified Gram-Schmidt.
std::vector<ComplexVector> null_space(const ComplexMatrix& a, double tol = kDefaultRankTolerance);

// Modified Gram-Schmidt. Vectors whose remainder falls below tol times their
// original norm are dropped.
std::vector<ComplexVector> orthonormalize(std::span<const ComplexVector> vectors, double tol = 1e-12);

}  // namespace dtte
