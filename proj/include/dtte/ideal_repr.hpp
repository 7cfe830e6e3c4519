#pragma once

// Tetrad, the idempotent t = 1/4 (1 + h^0)(1 + i h^1 h^2), the basis
// t_1..t_4 of the minimal left ideal I(t) = {U t}, and the induced map from
// forms to 4x4 complex matrices.

#include <array>
#include <utility>

#include "dtte/blade_algebra.hpp"
#include "dtte/linalg.hpp"

namespace dtte {

using Covector = std::array<double, 4>;
// h[mu][a]: row mu is the tensorial index, column a the tetrad index.
using RealMatrix4 = std::array<std::array<double, 4>, 4>;

inline constexpr double kTetradTolerance = 1e-10;
inline constexpr double kIdealMembershipTolerance = 1e-9;

RealMatrix4 identity_matrix4();
RealMatrix4 boost_matrix(int axis, double rapidity);
// Rotation by `angle` in the spatial plane (axis_a, axis_b), both in 1..3.
RealMatrix4 rotation_matrix(int axis_a, int axis_b, double angle);
RealMatrix4 compose(const RealMatrix4& a, const RealMatrix4& b);

// max_{a,b} | h_mu^a eta^{mu nu} h_nu^b - eta^{ab} |
double orthonormality_defect(const RealMatrix4& h);

class Tetrad {
 public:
  const RealMatrix4& components() const { return h_; }
  // h^a = h_mu^a e^mu
  const Multivector& form(int a) const { return forms_.at(a); }
  // E = h^0
  const Multivector& time_form() const { return forms_[0]; }

  friend Tetrad build_tetrad(const RealMatrix4& h, double tol);

 private:
  Tetrad() = default;
  RealMatrix4 h_{};
  std::array<Multivector, 4> forms_{};
};

// Throws InvalidTetrad when orthonormality is violated beyond tol.
Tetrad build_tetrad(const RealMatrix4& h, double tol = kTetradTolerance);

class Idempotent {
 public:
  const Multivector& t() const { return t_; }
  const Tetrad& tetrad() const { return tetrad_; }

  friend Idempotent build_idempotent(const Tetrad& tet);

 private:
  Idempotent(Multivector t, Tetrad tet) : t_(t), tetrad_(std::move(tet)) {}
  Multivector t_;
  Tetrad tetrad_;
};

// Checks t*t = t and t^dagger = t; throws InternalConsistency otherwise.
Idempotent build_idempotent(const Tetrad& tet);

class IdealBasis {
 public:
  // k in 1..4
  const Multivector& element(int k) const { return elements_.at(k - 1); }
  const std::array<Multivector, 4>& elements() const { return elements_; }
  // 16x4, column k-1 holds the blade coefficients of t_k.
  const ComplexMatrix& matrix() const { return matrix_; }
  const Idempotent& idempotent() const { return idem_; }
  const Tetrad& tetrad() const { return idem_.tetrad(); }

  friend IdealBasis build_ideal_basis(const Idempotent& idem);

 private:
  IdealBasis(std::array<Multivector, 4> el, ComplexMatrix m, Idempotent idem)
      : elements_(el), matrix_(std::move(m)), idem_(std::move(idem)) {}
  std::array<Multivector, 4> elements_;
  ComplexMatrix matrix_;
  Idempotent idem_;
};

// t_1 = t, t_2 = -h^1 h^3 t, t_3 = h^0 h^3 t, t_4 = h^0 h^1 t.
// Throws DegenerateBasis when rank < 4.
IdealBasis build_ideal_basis(const Idempotent& idem);

// Coefficients w^K with omega = w^K t_K. Throws NotInIdeal when the
// least-squares residual exceeds tol * |omega|.
KetVector expand_in_ideal(const Multivector& omega, const IdealBasis& basis,
                          double tol = kIdealMembershipTolerance);

// |omega>, the same map as expand_in_ideal.
inline KetVector ket_of(const Multivector& omega, const IdealBasis& basis,
                        double tol = kIdealMembershipTolerance) {
  return expand_in_ideal(omega, basis, tol);
}

// Inverse of ket_of: sum_K ket^K t_K.
Multivector lift(const KetVector& ket, const IdealBasis& basis);

// gamma(U)^K_N (row K, column N) from U t_N = gamma(U)^K_N t_K.
ComplexMatrix gamma_of(const Multivector& u, const IdealBasis& basis);

class GammaRep {
 public:
  const IdealBasis& basis() const { return basis_; }
  // gamma^mu = gamma(e^mu)
  const ComplexMatrix& gamma(int mu) const { return gamma_.at(mu); }
  const std::array<ComplexMatrix, 4>& gammas() const { return gamma_; }

  friend GammaRep gamma_matrices(const IdealBasis& basis);

 private:
  GammaRep(IdealBasis b, std::array<ComplexMatrix, 4> g) : basis_(std::move(b)), gamma_(std::move(g)) {}
  IdealBasis basis_;
  std::array<ComplexMatrix, 4> gamma_;
};

// Throws InternalConsistency if the anticommutators miss 2 eta I by more than
// 1e-12 (relative to the largest gamma entry squared).
GammaRep gamma_matrices(const IdealBasis& basis);

// max_{mu,nu} max-entry of gamma^mu gamma^nu + gamma^nu gamma^mu - 2 eta^{mu nu} I
double anticommutator_defect(const std::array<ComplexMatrix, 4>& gamma);

// Convenience: identity-tetrad representation, built once.
const GammaRep& standard_representation();

GammaRep make_representation(const RealMatrix4& h);

}  // namespace dtte
