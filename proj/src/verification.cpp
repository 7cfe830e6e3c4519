#include "dtte/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "dtte/dirac_solver.hpp"
#include "dtte/field_calculus.hpp"
#include "dtte/random.hpp"

namespace dtte {
namespace {

constexpr int kSamples = 100;
constexpr Complex kI{0.0, 1.0};

class Suite {
 public:
  explicit Suite(double tol) : tol_(tol) {}

  void exact(std::string name, double deviation) {
    results_.push_back({std::move(name), deviation, 0.0, true, deviation == 0.0});
  }
  void approx(std::string name, double deviation) {
    results_.push_back({std::move(name), deviation, tol_, false, deviation < tol_});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  double tol_;
  std::vector<CheckResult> results_;
};

double max_over(int n, const std::function<double()>& sample) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) worst = std::max(worst, sample());
  return worst;
}

double blade_associativity_defect() {
  int bad = 0;
  for (unsigned a = 0; a < kBladeCount; ++a)
    for (unsigned b = 0; b < kBladeCount; ++b)
      for (unsigned c = 0; c < kBladeCount; ++c) {
        const auto ab = clifford_mul(BladeIndex{a}, BladeIndex{b});
        const auto ab_c = clifford_mul(ab.blade, BladeIndex{c});
        const auto bc = clifford_mul(BladeIndex{b}, BladeIndex{c});
        const auto a_bc = clifford_mul(BladeIndex{a}, bc.blade);
        if (ab.sign * ab_c.sign != bc.sign * a_bc.sign || ab_c.blade != a_bc.blade) ++bad;
      }
  return bad;
}

double anticommutator_table_defect() {
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const auto e_mu = Multivector::basis(mu);
      const auto e_nu = Multivector::basis(nu);
      const auto target = Multivector::scalar(mu == nu ? 2.0 * kMetric[mu] : 0.0);
      worst = std::max(worst, distance(e_mu * e_nu + e_nu * e_mu, target));
    }
  return worst;
}

// e^{m1} ... e^{mk} = e^{m1} ^ ... ^ e^{mk} for ascending indices.
double ascending_monomial_defect() {
  double worst = 0.0;
  for (unsigned m = 0; m < kBladeCount; ++m) {
    auto product = Multivector::scalar(1.0);
    auto exterior = Multivector::scalar(1.0);
    for (int mu = 0; mu < 4; ++mu) {
      if (!BladeIndex{m}.contains(mu)) continue;
      product = product * Multivector::basis(mu);
      exterior = wedge(exterior, Multivector::basis(mu));
    }
    worst = std::max(worst, distance(product, exterior));
    worst = std::max(worst, distance(product, Multivector::blade(BladeIndex{m})));
  }
  return worst;
}

double hodge_involution_defect() {
  double worst = 0.0;
  for (unsigned m = 0; m < kBladeCount; ++m) {
    const auto b = Multivector::blade(BladeIndex{m});
    const int k = BladeIndex{m}.grade();
    const double sign = (k + 1) % 2 == 0 ? 1.0 : -1.0;
    worst = std::max(worst, distance(hodge_star(hodge_star(b)), sign * b));
  }
  return worst;
}

double metric_square(const Multivector& a) {
  double s = 0.0;
  for (int mu = 0; mu < 4; ++mu) s += kMetric[mu] * std::norm(a[BladeIndex::vector(mu)]);
  return s;
}

}  // namespace

std::vector<CheckResult> run_verification_suite(const VerifyConfig& cfg) {
  Suite suite(cfg.tolerance);
  Rng rng(cfg.seed);

  suite.exact("clifford_associativity_blades", blade_associativity_defect());
  suite.exact("anticommutator_table", anticommutator_table_defect());
  suite.exact("ascending_monomials_are_blades", ascending_monomial_defect());
  suite.exact("hodge_double_star", hodge_involution_defect());

  suite.approx("one_form_square", max_over(kSamples, [&] {
                 const auto a = random_real_one_form(rng);
                 return distance(a * a, Multivector::scalar(metric_square(a)));
               }));
  suite.approx("product_via_wedge_and_star", max_over(kSamples, [&] {
                 const auto a = random_real_one_form(rng);
                 const auto phi = random_multivector(rng);
                 return distance(a * phi, wedge(a, phi) - hodge_star(wedge(a, hodge_star(phi))));
               }));
  suite.approx("clifford_associativity_random", max_over(kSamples, [&] {
                 const auto u = random_multivector(rng);
                 const auto v = random_multivector(rng);
                 const auto w = random_multivector(rng);
                 return distance((u * v) * w, u * (v * w));
               }));
  suite.approx("regular_representation_homomorphism", max_over(kSamples, [&] {
                 const auto u = random_multivector(rng);
                 const auto v = random_multivector(rng);
                 return (regular_representation(u * v) - regular_representation(u) * regular_representation(v))
                     .max_abs();
               }));

  const Tetrad tet = build_tetrad(cfg.tetrad);
  const Multivector& e = tet.time_form();
  suite.approx("conjugation_involutions", max_over(kSamples, [&] {
                 const auto u = random_multivector(rng);
                 return std::max(distance(clifford_conj(clifford_conj(u)), u),
                                 distance(hermitian_conj(hermitian_conj(u, e), e), u));
               }));
  suite.approx("hermitian_reverses_products", max_over(kSamples, [&] {
                 const auto u = random_multivector(rng);
                 const auto v = random_multivector(rng);
                 return distance(hermitian_conj(u * v, e), hermitian_conj(v, e) * hermitian_conj(u, e));
               }));
  suite.approx("hermitian_of_i", distance(hermitian_conj(Multivector::scalar(kI), e), Multivector::scalar(-kI)));

  const Potential zero_potential;
  suite.approx("d_squared", max_over(kSamples, [&] {
                 const auto f = random_field(rng, 2);
                 return differential(differential(f)).norm();
               }));
  suite.approx("codifferential_squared", max_over(kSamples, [&] {
                 const auto f = random_field(rng, 2);
                 return codifferential(codifferential(f)).norm();
               }));
  suite.approx("d_minus_delta_is_dirac", max_over(kSamples, [&] {
                 const auto f = random_field(rng, 2);
                 return (differential(f) - codifferential(f) - dirac_operator(f)).norm();
               }));

  const Idempotent idem = build_idempotent(tet);
  suite.approx("idempotent_square", distance(idem.t() * idem.t(), idem.t()));
  suite.approx("idempotent_hermitian", distance(hermitian_conj(idem.t(), e), idem.t()));

  const IdealBasis basis = build_ideal_basis(idem);
  suite.exact("ideal_rank", std::abs(static_cast<double>(rank(basis.matrix())) - 4.0));

  const GammaRep rep = gamma_matrices(basis);
  suite.approx("gamma_anticommutators", anticommutator_defect(rep.gammas()));
  suite.approx("gamma_homomorphism", max_over(kSamples, [&] {
                 const auto u = random_multivector(rng);
                 const auto v = random_multivector(rng);
                 return (gamma_of(u * v, basis) - gamma_of(u, basis) * gamma_of(v, basis)).max_abs();
               }));
  suite.approx("gamma_hermitian", max_over(kSamples, [&] {
                 const auto u = random_multivector(rng);
                 return (gamma_of(hermitian_conj(u, e), basis) - hermitian_transpose(gamma_of(u, basis))).max_abs();
               }));
  suite.approx("ket_intertwining", max_over(kSamples, [&] {
                 const auto u = random_multivector(rng);
                 const auto omega = random_multivector(rng) * idem.t();
                 return (ket_of(u * omega, basis) - matvec(gamma_of(u, basis), ket_of(omega, basis))).norm();
               }));
  suite.approx("theorem_coordinate_form", max_over(kSamples / 2, [&] {
                 const Covector p = random_covector(rng);
                 const Potential a(random_covector(rng));
                 const double m = std::abs(random_covector(rng)[0]);
                 return verify_theorem(PlaneWaveField::wave(p, basis.element(1)), a, m, rep).difference;
               }));

  std::vector<Covector> momenta;
  for (int j = 0; j < 25; ++j) {
    Covector p = random_covector(rng);
    if (j % 2 == 0) p[0] = std::sqrt(p[1] * p[1] + p[2] * p[2] + p[3] * p[3] + 1.0);
    momenta.push_back(p);
  }
  const auto rows = dispersion_scan(1.0, zero_potential, momenta, rep);
  suite.exact("dispersion_consistency",
              static_cast<double>(std::count_if(rows.begin(), rows.end(), [](const auto& r) {
                return !r.consistent || (r.on_shell && r.null_dimension != 2);
              })));

  return suite.take();
}

}  // namespace dtte
