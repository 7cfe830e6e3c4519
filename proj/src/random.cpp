#include "dtte/random.hpp"

#include <numbers>

namespace dtte {

Multivector random_multivector(Rng& rng) {
  std::normal_distribution<double> n;
  Multivector::Coeffs c{};
  for (auto& z : c) {
    const double re = n(rng);
    z = {re, n(rng)};
  }
  return Multivector{c};
}

Multivector random_pure_grade(Rng& rng, int k) { return grade_project(random_multivector(rng), k); }

Multivector random_real_one_form(Rng& rng) {
  std::normal_distribution<double> n;
  std::array<Complex, 4> a{};
  for (auto& z : a) z = n(rng);
  return one_form(a);
}

Covector random_covector(Rng& rng, double scale) {
  std::normal_distribution<double> n;
  Covector p{};
  for (auto& x : p) x = scale * n(rng);
  return p;
}

RealMatrix4 random_lorentz_matrix(Rng& rng) {
  std::uniform_real_distribution<double> rapidity(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_int_distribution<int> axis(1, 3);
  const int boost_axis = axis(rng);
  const int a = axis(rng);
  const int b = a % 3 + 1;
  const double eta = rapidity(rng);
  return compose(boost_matrix(boost_axis, eta), rotation_matrix(a, b, angle(rng)));
}

PlaneWaveField random_field(Rng& rng, int terms) {
  std::vector<PlaneWaveTerm> t;
  for (int j = 0; j < terms; ++j) {
    const Covector p = random_covector(rng);
    t.push_back({p, random_multivector(rng)});
  }
  return PlaneWaveField(std::move(t));
}

}  // namespace dtte
