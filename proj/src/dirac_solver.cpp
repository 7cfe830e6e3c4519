#include "dtte/dirac_solver.hpp"

#include <algorithm>
#include <cmath>

#include "dtte/errors.hpp"

namespace dtte {
namespace {

constexpr Complex kI{0.0, 1.0};

void check_mass(double m) {
  if (!(m >= 0.0)) throw DomainError("mass must be non-negative");
}

// Rotate the phase so the first component with nonzero magnitude is real positive.
KetVector normalize_phase(KetVector k) {
  for (const auto& z : k.c) {
    if (std::abs(z) > 1e-12) {
      const Complex phase = std::conj(z) / std::abs(z);
      for (auto& w : k.c) w *= phase;
      break;
    }
  }
  return k;
}

}  // namespace

double mass_shell(const Covector& p, const Potential& a, double m) {
  double s = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    const double k = p[mu] - a.components()[mu];
    s += kMetric[mu] * k * k;
  }
  return s - m * m;
}

SymbolMatrix symbol_matrix(const Covector& p, const Potential& a, double m, const GammaRep& rep) {
  check_mass(m);
  SymbolMatrix s{p, a, m, (kI * m) * ComplexMatrix::identity(4)};
  for (int mu = 0; mu < 4; ++mu) {
    // i a_mu - i p_mu: identical for (p + q, a + q).
    const Complex coeff = kI * (a.components()[mu] - p[mu]);
    s.matrix += coeff * rep.gamma(mu);
  }
  return s;
}

SolutionSet solve_planewave(const Covector& p, const Potential& a, double m, const GammaRep& rep,
                            double rank_tol) {
  const auto sym = symbol_matrix(p, a, m, rep);
  SolutionSet set;
  set.p = p;
  set.potential = a;
  set.mass = m;
  set.mass_shell = mass_shell(p, a, m);
  set.on_shell = std::abs(set.mass_shell) <= kOnShellTolerance;

  for (const auto& v : null_space(sym.matrix, rank_tol)) {
    PlaneWaveSolution sol;
    sol.ket = normalize_phase(KetVector::from_vector(v));
    sol.amplitude = lift(sol.ket, rep.basis());
    sol.residual = dtte_residual(PlaneWaveField::wave(p, sol.amplitude), a, m).norm();
    set.solutions.push_back(std::move(sol));
  }
  return set;
}

TheoremReport verify_theorem(const PlaneWaveField& psi, const Potential& a, double m, const GammaRep& rep,
                             double tolerance) {
  const auto omega = dtte_residual(psi, a, m);
  TheoremReport report;
  report.tolerance = tolerance;
  for (const auto& term : psi.terms()) {
    const KetVector psi_ket = ket_of(term.amplitude, rep.basis());
    const auto sym = symbol_matrix(term.p, a, m, rep);
    const KetVector matrix_side = matvec(sym.matrix, psi_ket);

    // The residual carries the same momenta; exact-zero terms are dropped.
    KetVector algebra_side;
    for (const auto& w : omega.terms()) {
      if (w.p == term.p) {
        algebra_side = ket_of(w.amplitude, rep.basis());
        break;
      }
    }
    report.algebra_residual = std::max(report.algebra_residual, algebra_side.norm());
    report.matrix_residual = std::max(report.matrix_residual, matrix_side.norm());
    report.difference = std::max(report.difference, (algebra_side - matrix_side).norm());
  }
  report.pass = report.difference < tolerance;
  return report;
}

std::vector<DispersionRow> dispersion_scan(double m, const Potential& a, std::span<const Covector> momenta,
                                           const GammaRep& rep, Exec exec) {
  check_mass(m);
  std::vector<DispersionRow> rows(momenta.size());
  for_each_index(momenta.size(), exec, [&](std::size_t j) {
    const auto sym = symbol_matrix(momenta[j], a, m, rep);
    DispersionRow& row = rows[j];
    row.p = momenta[j];
    row.null_dimension = null_space(sym.matrix).size();
    row.mass_shell = mass_shell(momenta[j], a, m);
    row.on_shell = std::abs(row.mass_shell) <= kOnShellTolerance;
    row.consistent = (row.null_dimension > 0) == row.on_shell;
  });
  return rows;
}

}  // namespace dtte
