#include "dtte/ideal_repr.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "dtte/errors.hpp"

namespace dtte {
namespace {

constexpr Complex kI{0.0, 1.0};

void check_axis(int axis, int lo) {
  if (axis < lo || axis > 3) throw DomainError("axis out of range");
}

}  // namespace

RealMatrix4 identity_matrix4() {
  RealMatrix4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

RealMatrix4 boost_matrix(int axis, double rapidity) {
  check_axis(axis, 1);
  RealMatrix4 m = identity_matrix4();
  m[0][0] = m[axis][axis] = std::cosh(rapidity);
  m[0][axis] = m[axis][0] = std::sinh(rapidity);
  return m;
}

RealMatrix4 rotation_matrix(int axis_a, int axis_b, double angle) {
  check_axis(axis_a, 1);
  check_axis(axis_b, 1);
  if (axis_a == axis_b) throw DomainError("rotation plane needs two distinct axes");
  RealMatrix4 m = identity_matrix4();
  m[axis_a][axis_a] = m[axis_b][axis_b] = std::cos(angle);
  m[axis_a][axis_b] = -std::sin(angle);
  m[axis_b][axis_a] = std::sin(angle);
  return m;
}

RealMatrix4 compose(const RealMatrix4& a, const RealMatrix4& b) {
  RealMatrix4 out{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

double orthonormality_defect(const RealMatrix4& h) {
  double worst = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      double s = 0.0;
      for (int mu = 0; mu < 4; ++mu) s += h[mu][a] * kMetric[mu] * h[mu][b];
      const double target = a == b ? kMetric[a] : 0.0;
      worst = std::max(worst, std::abs(s - target));
    }
  }
  return worst;
}

Tetrad build_tetrad(const RealMatrix4& h, double tol) {
  for (const auto& row : h) {
    for (double x : row) {
      if (!std::isfinite(x)) throw InvalidTetrad("tetrad has non-finite components");
    }
  }
  const double defect = orthonormality_defect(h);
  if (!(defect <= tol)) {
    throw InvalidTetrad("tetrad violates h_mu^a h^{mu b} = eta^{ab} (defect " + std::to_string(defect) +
                        ")");
  }
  Tetrad tet;
  tet.h_ = h;
  for (int a = 0; a < 4; ++a) {
    Multivector f;
    for (int mu = 0; mu < 4; ++mu) f = f + h[mu][a] * Multivector::basis(mu);
    tet.forms_[a] = f;
  }
  return tet;
}

Idempotent build_idempotent(const Tetrad& tet) {
  const auto one = Multivector::scalar(1.0);
  const Multivector t =
      0.25 * ((one + tet.form(0)) * (one + kI * (tet.form(1) * tet.form(2))));

  const double scale = std::max(1.0, t.norm() * t.norm());
  if (distance(t * t, t) > kDefaultTolerance * scale) {
    throw InternalConsistency("idempotent check t*t = t failed");
  }
  if (distance(hermitian_conj(t, tet.time_form(), kTetradTolerance), t) > kDefaultTolerance * scale) {
    throw InternalConsistency("idempotent check t^dagger = t failed");
  }
  return Idempotent(t, tet);
}

IdealBasis build_ideal_basis(const Idempotent& idem) {
  const Tetrad& h = idem.tetrad();
  const Multivector& t = idem.t();
  const std::array<Multivector, 4> el{
      t,
      -(h.form(1) * h.form(3) * t),
      h.form(0) * h.form(3) * t,
      h.form(0) * h.form(1) * t,
  };
  ComplexMatrix m(kBladeCount, 4);
  for (int k = 0; k < 4; ++k) {
    for (std::size_t b = 0; b < kBladeCount; ++b) m(b, k) = el[k].coeffs()[b];
  }
  if (rank(m) < 4) throw DegenerateBasis("ideal basis t_1..t_4 is rank-deficient");
  return IdealBasis(el, std::move(m), idem);
}

KetVector expand_in_ideal(const Multivector& omega, const IdealBasis& basis, double tol) {
  const auto& c = omega.coeffs();
  const auto sol = solve_least_squares(basis.matrix(), std::span<const Complex>(c));
  if (sol.residual_norm > tol * omega.norm()) {
    throw NotInIdeal("form is not in the left ideal (residual " + std::to_string(sol.residual_norm) + ")");
  }
  return KetVector::from_vector(sol.x);
}

Multivector lift(const KetVector& ket, const IdealBasis& basis) {
  Multivector out;
  for (int k = 0; k < 4; ++k) out = out + ket[k] * basis.element(k + 1);
  return out;
}

ComplexMatrix gamma_of(const Multivector& u, const IdealBasis& basis) {
  ComplexMatrix g(4, 4);
  for (int n = 0; n < 4; ++n) {
    // U t_N is in the ideal for every U; a failure here is a basis defect.
    const auto col = expand_in_ideal(u * basis.element(n + 1), basis);
    for (int k = 0; k < 4; ++k) g(k, n) = col[k];
  }
  return g;
}

double anticommutator_defect(const std::array<ComplexMatrix, 4>& gamma) {
  double worst = 0.0;
  const auto id = ComplexMatrix::identity(4);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      auto ac = gamma[mu] * gamma[nu] + gamma[nu] * gamma[mu];
      if (mu == nu) ac -= (2.0 * kMetric[mu]) * id;
      worst = std::max(worst, ac.max_abs());
    }
  }
  return worst;
}

GammaRep gamma_matrices(const IdealBasis& basis) {
  std::array<ComplexMatrix, 4> g{
      gamma_of(Multivector::basis(0), basis),
      gamma_of(Multivector::basis(1), basis),
      gamma_of(Multivector::basis(2), basis),
      gamma_of(Multivector::basis(3), basis),
  };
  double scale = 1.0;
  for (const auto& m : g) scale = std::max(scale, m.max_abs() * m.max_abs());
  if (anticommutator_defect(g) > kDefaultTolerance * scale) {
    throw InternalConsistency("gamma matrices violate the anticommutator relation");
  }
  return GammaRep(basis, std::move(g));
}

GammaRep make_representation(const RealMatrix4& h) {
  return gamma_matrices(build_ideal_basis(build_idempotent(build_tetrad(h))));
}

const GammaRep& standard_representation() {
  static const GammaRep rep = make_representation(identity_matrix4());
  return rep;
}

}  // namespace dtte
