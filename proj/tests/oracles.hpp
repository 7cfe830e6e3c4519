#pragma once

// Test-only reference computations. Nothing here calls the bitmask sign
// routines, the elimination kernels, or the symbol-matrix solver it checks.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "dtte/blade_algebra.hpp"
#include "dtte/ideal_repr.hpp"
#include "dtte/linalg.hpp"

namespace oracle {

using dtte::BladeIndex;
using dtte::Complex;
using dtte::ComplexMatrix;
using dtte::Multivector;

// Product of two blades by writing out both index words and bubble-sorting:
// adjacent distinct indices swap with a sign flip, adjacent equal indices
// contract to eta^{mm}.
inline dtte::SignedBlade clifford_by_sequence(BladeIndex a, BladeIndex b) {
  std::vector<int> word;
  for (int mu = 0; mu < 4; ++mu)
    if (a.contains(mu)) word.push_back(mu);
  for (int mu = 0; mu < 4; ++mu)
    if (b.contains(mu)) word.push_back(mu);
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] == word[i + 1]) {
        sign *= dtte::kMetric[word[i]];
        word.erase(word.begin() + i, word.begin() + i + 2);
        changed = true;
        break;
      }
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  unsigned mask = 0;
  for (int mu : word) mask |= 1u << mu;
  return {sign, BladeIndex{mask}};
}

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

inline Eigen::VectorXcd to_eigen(const Multivector& u) {
  Eigen::VectorXcd v(16);
  for (int i = 0; i < 16; ++i) v(i) = u.coeffs()[i];
  return v;
}

// Numerical rank from singular values relative to the largest one.
inline std::size_t rank_svd(const Eigen::MatrixXcd& m, double rel_tol = 1e-10) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  std::size_t r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++r;
  return r;
}

inline std::size_t rank_svd(const ComplexMatrix& m, double rel_tol = 1e-10) {
  return rank_svd(to_eigen(m), rel_tol);
}

// Leibniz expansion over all 24 permutations.
inline Complex determinant4(const ComplexMatrix& m) {
  std::array<int, 4> perm{0, 1, 2, 3};
  Complex det{};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Complex term = (inversions % 2) ? -1.0 : 1.0;
    for (int i = 0; i < 4; ++i) term *= m(i, perm[i]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Orthonormal basis (columns) of the kernel from the SVD.
inline Eigen::MatrixXcd kernel_svd(const Eigen::MatrixXcd& m, double rel_tol) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double top = s.size() ? s(0) : 0.0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * top) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

// Solutions of the 16-dimensional algebra equation
//   (sum_mu (i a_mu - i p_mu) e^mu + i m) Psi = 0  with  Psi t = Psi,
// i.e. the kernel of the stacked 32x16 system [L ; R_t - 1], where L is left
// multiplication and R_t right multiplication by t, both assembled blade by
// blade from Multivector products.
inline Eigen::MatrixXcd algebra_route_kernel(const dtte::Covector& p, const dtte::Covector& a, double m,
                                             const Multivector& t) {
  const Complex i{0.0, 1.0};
  Multivector op = Multivector::scalar(i * m);
  for (int mu = 0; mu < 4; ++mu) op = op + (i * (a[mu] - p[mu])) * Multivector::basis(mu);
  Eigen::MatrixXcd stacked = Eigen::MatrixXcd::Zero(32, 16);
  for (unsigned n = 0; n < 16; ++n) {
    const auto blade = Multivector::blade(BladeIndex{n});
    const auto left = op * blade;
    const auto right = blade * t - blade;
    for (int k = 0; k < 16; ++k) {
      stacked(k, n) = left.coeffs()[k];
      stacked(16 + k, n) = right.coeffs()[k];
    }
  }
  return kernel_svd(stacked, 1e-10);
}

// |P_a - P_b|_2 for the orthogonal projectors onto two column spans; equals
// the sine of the largest principal angle when the dimensions agree.
inline double subspace_gap(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.cols() != b.cols()) return 1.0;
  if (a.cols() == 0) return 0.0;
  const Eigen::MatrixXcd qa = Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ() *
                              Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  const Eigen::MatrixXcd qb = Eigen::HouseholderQR<Eigen::MatrixXcd>(b).householderQ() *
                              Eigen::MatrixXcd::Identity(b.rows(), b.cols());
  const Eigen::MatrixXcd diff = qa * qa.adjoint() - qb * qb.adjoint();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(diff);
  return svd.singularValues()(0);
}

// Central difference of a field component along x^mu.
template <class Field>
Multivector central_difference(const Field& f, dtte::Covector x, int mu, double h = 1e-5) {
  dtte::Covector xp = x, xm = x;
  xp[mu] += h;
  xm[mu] -= h;
  return (1.0 / (2.0 * h)) * (f.evaluate(xp) - f.evaluate(xm));
}

}  // namespace oracle
