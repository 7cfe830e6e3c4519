#pragma once

// Plane-wave solutions of (d - delta) Psi + i A Psi + i m Psi = 0 with Psi in
// I(t), found as kernels of the 4x4 symbol gamma^mu (i a_mu - i p_mu) + i m I
// and lifted back to the algebra.

#include <span>
#include <vector>

#include "dtte/field_calculus.hpp"
#include "dtte/ideal_repr.hpp"
#include "dtte/parallel.hpp"

namespace dtte {

inline constexpr double kOnShellTolerance = 1e-9;

// (p - a)_mu (p - a)^mu - m^2
double mass_shell(const Covector& p, const Potential& a, double m);

struct SymbolMatrix {
  Covector p{};
  Potential potential;
  double mass = 0.0;
  ComplexMatrix matrix{4, 4};
};

SymbolMatrix symbol_matrix(const Covector& p, const Potential& a, double m, const GammaRep& rep);

struct PlaneWaveSolution {
  KetVector ket;
  Multivector amplitude;  // sum_k ket^k t_k
  double residual = 0.0;  // norm of dtte_residual of amplitude * exp(-i p x)
};

struct SolutionSet {
  Covector p{};
  Potential potential;
  double mass = 0.0;
  double mass_shell = 0.0;
  bool on_shell = false;
  std::vector<PlaneWaveSolution> solutions;
};

// Kets are orthonormal, with the first nonzero component real positive.
SolutionSet solve_planewave(const Covector& p, const Potential& a, double m, const GammaRep& rep,
                            double rank_tol = kDefaultRankTolerance);

struct TheoremReport {
  double algebra_residual = 0.0;  // max_j |ket_of(Omega_j)|
  double matrix_residual = 0.0;   // max_j |M(p_j) ket_of(Psi_j)|
  double difference = 0.0;        // max_j |ket_of(Omega_j) - M(p_j) ket_of(Psi_j)|
  double tolerance = 0.0;
  bool pass = false;              // difference < tolerance
};

// Algebra side: Omega = dtte_residual(Psi) mapped to kets term by term.
// Matrix side: the coordinate-form Dirac operator on kets of Psi's terms.
// Throws NotInIdeal if a Psi amplitude lies outside I(t).
TheoremReport verify_theorem(const PlaneWaveField& psi, const Potential& a, double m, const GammaRep& rep,
                             double tolerance = kDefaultTolerance);

struct DispersionRow {
  Covector p{};
  std::size_t null_dimension = 0;
  double mass_shell = 0.0;
  bool on_shell = false;
  // null_dimension > 0 exactly when on_shell
  bool consistent = false;
};

std::vector<DispersionRow> dispersion_scan(double m, const Potential& a, std::span<const Covector> momenta,
                                           const GammaRep& rep, Exec exec = Exec::parallel);

}  // namespace dtte
