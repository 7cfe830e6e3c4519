#include "doctest.h"

#include "dtte/errors.hpp"
#include "dtte/ideal_repr.hpp"
#include "dtte/linalg.hpp"
#include "dtte/random.hpp"
#include "oracles.hpp"

using namespace dtte;

namespace {

const Complex I{0.0, 1.0};

ComplexMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  std::normal_distribution<double> n;
  ComplexMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      const double re = n(rng);
      m(i, j) = {re, n(rng)};
    }
  return m;
}

}  // namespace

TEST_CASE("matrix shape validation") {
  CHECK_THROWS_AS(ComplexMatrix(0, 3), DomainError);
  CHECK_THROWS_AS(ComplexMatrix(17, 3), DomainError);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), DomainError);
  CHECK_THROWS_AS(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), DomainError);
}

TEST_CASE("matmul") {
  Rng rng(1);
  const auto m = random_matrix(rng, 4, 4);
  CHECK(ComplexMatrix::identity(4) * m == m);
  CHECK((m * ComplexMatrix(4, 4)).max_abs() == 0.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_matrix(rng, 3, 5);
    const auto b = random_matrix(rng, 5, 4);
    const auto c = random_matrix(rng, 4, 2);
    CHECK(((a * b) * c - a * (b * c)).max_abs() <= 1e-12);
  }
}

TEST_CASE("hermitian transpose") {
  CHECK(hermitian_transpose(ComplexMatrix::identity(4)) == ComplexMatrix::identity(4));
  CHECK(hermitian_transpose(I * ComplexMatrix::identity(4)) == -I * ComplexMatrix::identity(4));
  ComplexMatrix m(2, 3);
  m(0, 2) = {1.0, 2.0};
  const auto h = hermitian_transpose(m);
  CHECK(h.rows() == 3);
  CHECK(h(2, 0) == Complex{1.0, -2.0});
}

TEST_CASE("rank against SVD") {
  Rng rng(2);
  for (std::size_t r = 1; r <= 4; ++r) {
    // Product of 6xr and rx5 factors has rank r.
    const auto m = random_matrix(rng, 6, r) * random_matrix(rng, r, 5);
    CHECK(rank(m) == r);
    CHECK(oracle::rank_svd(m) == r);
  }
  CHECK(rank(ComplexMatrix(4, 4)) == 0);
}

TEST_CASE("least squares") {
  Rng rng(3);
  const auto id = ComplexMatrix::identity(4);
  const ComplexVector b{{1.0, 2.0}, 3.0, {0.0, -1.0}, 0.5};
  auto sol = solve_least_squares(id, b);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(sol.x[i] - b[i]) <= 1e-15);
  CHECK(sol.residual_norm == 0.0);

  sol = solve_least_squares(id, ComplexVector(4));
  CHECK(norm(sol.x) == 0.0);
  CHECK(sol.residual_norm == 0.0);

  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_matrix(rng, 16, 4);
    const auto x = random_matrix(rng, 4, 1).column(0);
    const auto fit = solve_least_squares(a, matvec(a, x));
    CHECK(fit.residual_norm <= 1e-12);
  }

  CHECK_THROWS_AS(solve_least_squares(ComplexMatrix(3, 4), ComplexVector(3)), DomainError);
  ComplexMatrix deficient(4, 2);
  deficient(0, 0) = deficient(0, 1) = 1.0;
  CHECK_THROWS_AS(solve_least_squares(deficient, ComplexVector(4)), DegenerateBasis);
}

TEST_CASE("least squares expands e0 t1 in the ideal basis") {
  const auto basis = build_ideal_basis(build_idempotent(build_tetrad(identity_matrix4())));
  const auto target = Multivector::basis(0) * basis.element(1);
  const auto fit = solve_least_squares(basis.matrix(), std::span<const Complex>(target.coeffs()));
  CHECK(fit.residual_norm <= 1e-12);
}

TEST_CASE("null space examples") {
  CHECK(null_space(ComplexMatrix::identity(4)).empty());
  CHECK(null_space(ComplexMatrix(4, 4)).size() == 4);

  Rng rng(4);
  for (std::size_t r = 0; r <= 4; ++r) {
    ComplexMatrix a(4, 4);
    if (r > 0) a = random_matrix(rng, 4, r) * random_matrix(rng, r, 4);
    const auto basis = null_space(a, 1e-10);
    REQUIRE(basis.size() == 4 - r);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(norm(matvec(a, basis[i])) <= 10 * 1e-10 * std::max(1.0, a.max_abs()));
      for (std::size_t j = 0; j < basis.size(); ++j) {
        Complex dot{};
        for (int k = 0; k < 4; ++k) dot += std::conj(basis[i][k]) * basis[j][k];
        CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("null space is scale free") {
  Rng rng(5);
  const auto a = random_matrix(rng, 4, 2) * random_matrix(rng, 2, 4);
  CHECK(null_space(1e-8 * a).size() == 2);
  CHECK(null_space(1e8 * a).size() == 2);
}
