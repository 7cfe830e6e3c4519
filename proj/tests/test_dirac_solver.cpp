#include "doctest.h"

#include <cmath>

#include "dtte/dirac_solver.hpp"
#include "dtte/errors.hpp"
#include "dtte/random.hpp"
#include "oracles.hpp"

using namespace dtte;

namespace {

const Complex I{0.0, 1.0};

Eigen::MatrixXcd lifted_span(const SolutionSet& set) {
  Eigen::MatrixXcd m(16, set.solutions.size());
  for (std::size_t j = 0; j < set.solutions.size(); ++j) m.col(j) = oracle::to_eigen(set.solutions[j].amplitude);
  return m;
}

Covector on_shell_momentum(Rng& rng, const Covector& a, double m) {
  Covector p = random_covector(rng);
  const double k2 = p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
  p[0] = std::sqrt(k2 + m * m);
  for (int mu = 0; mu < 4; ++mu) p[mu] += a[mu];
  return p;
}

}  // namespace

TEST_CASE("symbol matrix examples") {
  const auto& rep = standard_representation();
  const Covector p{0.3, -1.1, 0.6, 2.0};
  CHECK(symbol_matrix(p, Potential(p), 0.0, rep).matrix.max_abs() == 0.0);
  const auto s = symbol_matrix(Covector{}, Potential{}, 2.5, rep);
  CHECK(s.matrix == (I * 2.5) * ComplexMatrix::identity(4));
  CHECK(std::abs(oracle::determinant4(s.matrix)) > 0.0);
  CHECK_THROWS_AS(symbol_matrix(p, Potential{}, -0.1, rep), DomainError);
}

TEST_CASE("symbol determinant is the squared mass shell") {
  const auto& rep = standard_representation();
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Covector p = random_covector(rng);
    const Potential a(random_covector(rng));
    const double m = std::abs(random_covector(rng)[0]);
    const double shell = mass_shell(p, a, m);
    const Complex det = oracle::determinant4(symbol_matrix(p, a, m, rep).matrix);
    CHECK(std::abs(det - shell * shell) <= 1e-10 * std::max(1.0, shell * shell));
  }
}

TEST_CASE("gauge-like shift leaves the symbol unchanged") {
  const auto& rep = standard_representation();
  // Dyadic inputs keep every sum exact.
  const Covector p{1.5, 0.25, -2.0, 0.125};
  const Covector a{0.5, -0.75, 1.0, 0.0};
  const Covector q{3.0, -1.5, 0.5, 2.25};
  Covector pq, aq;
  for (int mu = 0; mu < 4; ++mu) {
    pq[mu] = p[mu] + q[mu];
    aq[mu] = a[mu] + q[mu];
  }
  CHECK(symbol_matrix(p, Potential(a), 1.0, rep).matrix == symbol_matrix(pq, Potential(aq), 1.0, rep).matrix);

  Rng rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const Covector p2 = random_covector(rng);
    const Covector a2 = random_covector(rng);
    const Covector q2 = random_covector(rng);
    Covector p2q, a2q;
    for (int mu = 0; mu < 4; ++mu) {
      p2q[mu] = p2[mu] + q2[mu];
      a2q[mu] = a2[mu] + q2[mu];
    }
    CHECK((symbol_matrix(p2, Potential(a2), 0.7, rep).matrix - symbol_matrix(p2q, Potential(a2q), 0.7, rep).matrix)
              .max_abs() <= 1e-14);
  }
}

TEST_CASE("plane-wave solution counts") {
  const auto& rep = standard_representation();
  auto s = solve_planewave({1, 0, 0, 0}, Potential{}, 1.0, rep);
  CHECK(s.on_shell);
  CHECK(s.solutions.size() == 2);

  s = solve_planewave({1, 0, 0, 0}, Potential{}, 2.0, rep);
  CHECK_FALSE(s.on_shell);
  CHECK(s.solutions.empty());
  CHECK(std::abs(oracle::determinant4(symbol_matrix({1, 0, 0, 0}, Potential{}, 2.0, rep).matrix)) > 1.0);

  s = solve_planewave({2, 0, 0, 0}, Potential({1, 0, 0, 0}), 1.0, rep);
  CHECK(s.on_shell);
  CHECK(s.solutions.size() == 2);

  s = solve_planewave({0, 0, 0, 0}, Potential{}, 0.0, rep);
  CHECK(s.solutions.size() == 4);

  for (const auto& p : {Covector{1, 0, 0, 0}, Covector{2, 0, 0, 0}}) {
    CHECK(oracle::rank_svd(symbol_matrix(p, Potential({p[0] - 1.0, 0, 0, 0}), 1.0, rep).matrix) == 2);
  }
}

TEST_CASE("solutions are normalized and solve the algebra equation") {
  const auto& rep = standard_representation();
  Rng rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const Covector a = random_covector(rng);
    const double m = 0.5 + std::abs(random_covector(rng)[0]);
    const Covector p = on_shell_momentum(rng, a, m);
    const auto set = solve_planewave(p, Potential(a), m, rep);
    REQUIRE(set.solutions.size() == 2);
    for (const auto& sol : set.solutions) {
      CHECK(std::abs(sol.ket.norm() - 1.0) <= 1e-12);
      for (const auto& z : sol.ket.c) {
        if (std::abs(z) > 1e-12) {
          CHECK(z.real() > 0.0);
          CHECK(std::abs(z.imag()) <= 1e-12);
          break;
        }
      }
      CHECK(sol.residual <= 1e-10);
      CHECK((ket_of(sol.amplitude, rep.basis()) - sol.ket).norm() <= 1e-12);
    }
    Complex overlap{};
    for (int k = 0; k < 4; ++k) overlap += std::conj(set.solutions[0].ket[k]) * set.solutions[1].ket[k];
    CHECK(std::abs(overlap) <= 1e-12);
  }
}

TEST_CASE("intertwining of left multiplication and gamma matrices") {
  const auto& rep = standard_representation();
  Rng rng(34);
  for (int trial = 0; trial < 50; ++trial) {
    const auto psi0 = random_multivector(rng) * rep.basis().idempotent().t();
    for (int mu = 0; mu < 4; ++mu) {
      const auto lhs = ket_of(Multivector::basis(mu) * psi0, rep.basis());
      const auto rhs = matvec(rep.gamma(mu), ket_of(psi0, rep.basis()));
      CHECK((lhs - rhs).norm() <= 1e-12);
    }
  }
}

TEST_CASE("theorem: algebra and matrix residuals coincide") {
  const auto& rep = standard_representation();
  const auto& t1 = rep.basis().element(1);

  const auto solution = solve_planewave({1, 0, 0, 0}, Potential{}, 1.0, rep).solutions.at(0);
  auto report = verify_theorem(PlaneWaveField::wave({1, 0, 0, 0}, solution.amplitude), Potential{}, 1.0, rep);
  CHECK(report.algebra_residual <= 1e-10);
  CHECK(report.matrix_residual <= 1e-10);
  CHECK(report.difference <= 1e-12);
  CHECK(report.pass);

  Rng rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    const Covector p = random_covector(rng);
    const Potential a(random_covector(rng));
    report = verify_theorem(PlaneWaveField::wave(p, t1), a, 0.6, rep);
    CHECK(report.algebra_residual > 1e-3);
    CHECK(report.matrix_residual > 1e-3);
    CHECK(report.difference <= 1e-12);
  }

  report = verify_theorem(PlaneWaveField{}, Potential{}, 1.0, rep);
  CHECK(report.algebra_residual == 0.0);
  CHECK(report.matrix_residual == 0.0);
  CHECK(report.pass);
  CHECK_FALSE(verify_theorem(PlaneWaveField{}, Potential{}, 1.0, rep, 0.0).pass);

  CHECK_THROWS_AS(verify_theorem(PlaneWaveField::wave({1, 0, 0, 0}, Multivector::basis(3)), Potential{}, 1.0, rep),
                  NotInIdeal);
}

TEST_CASE("dispersion scan examples") {
  const auto& rep = standard_representation();
  const std::vector<Covector> momenta{{std::sqrt(2.0), 1, 0, 0}, {1, 1, 0, 0}};
  const auto rows = dispersion_scan(1.0, Potential{}, momenta, rep);
  CHECK(rows[0].on_shell);
  CHECK(rows[0].null_dimension == 2);
  CHECK_FALSE(rows[1].on_shell);
  CHECK(rows[1].mass_shell == doctest::Approx(-1.0));
  CHECK(rows[1].null_dimension == 0);
  CHECK(rows[0].consistent);
  CHECK(rows[1].consistent);

  const std::vector<Covector> light{{1, 0, 0, 1}};
  const auto massless = dispersion_scan(0.0, Potential{}, light, rep);
  CHECK(massless[0].null_dimension == 2);
  CHECK(oracle::rank_svd(symbol_matrix(light[0], Potential{}, 0.0, rep).matrix) == 2);
}

TEST_CASE("dispersion scan: parallel kernel matches serial reference") {
  const auto& rep = standard_representation();
  Rng rng(36);
  std::vector<Covector> momenta;
  for (int j = 0; j < 200; ++j) momenta.push_back(j % 3 ? random_covector(rng) : on_shell_momentum(rng, {}, 1.0));
  const auto ser = dispersion_scan(1.0, Potential{}, momenta, rep, Exec::serial);
  const auto par = dispersion_scan(1.0, Potential{}, momenta, rep, Exec::parallel);
  REQUIRE(ser.size() == par.size());
  for (std::size_t j = 0; j < ser.size(); ++j) {
    CHECK(ser[j].p == par[j].p);
    CHECK(ser[j].null_dimension == par[j].null_dimension);
    CHECK(ser[j].mass_shell == par[j].mass_shell);
    CHECK(ser[j].consistent);
  }
}

TEST_CASE("kernel agrees with the 16-dimensional algebra route") {
  Rng rng(37);
  for (const auto& h : {identity_matrix4(), random_lorentz_matrix(rng)}) {
    const auto rep = make_representation(h);
    for (int trial = 0; trial < 5; ++trial) {
      const Covector a = random_covector(rng);
      const double m = 1.0 + trial * 0.3;
      const Covector p = on_shell_momentum(rng, a, m);
      const auto set = solve_planewave(p, Potential(a), m, rep);
      const auto reference = oracle::algebra_route_kernel(p, a, m, rep.basis().idempotent().t());
      CHECK(reference.cols() == 2);
      CHECK(oracle::subspace_gap(lifted_span(set), reference) <= 1e-8);
    }
  }
}
