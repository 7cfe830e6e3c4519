#include "dtte/field_calculus.hpp"

#include <algorithm>
#include <cmath>

#include "dtte/errors.hpp"

namespace dtte {
namespace {

constexpr Complex kI{0.0, 1.0};

bool same_momentum(const Covector& a, const Covector& b) {
  for (int mu = 0; mu < 4; ++mu) {
    if (std::abs(a[mu] - b[mu]) > kMomentumMergeTolerance) return false;
  }
  return true;
}

template <class AmplitudeMap>
PlaneWaveField map_terms(const PlaneWaveField& phi, Exec exec, AmplitudeMap&& fn) {
  const auto& in = phi.terms();
  std::vector<PlaneWaveTerm> out(in.size());
  for_each_index(in.size(), exec, [&](std::size_t j) {
    out[j].p = in[j].p;
    out[j].amplitude = fn(in[j].p, in[j].amplitude);
  });
  return PlaneWaveField(std::move(out));
}

// -i p_mu, the plane-wave symbol of d_mu.
std::array<Complex, 4> derivative_symbol(const Covector& p) {
  std::array<Complex, 4> s{};
  for (int mu = 0; mu < 4; ++mu) s[mu] = -kI * p[mu];
  return s;
}

void check_mass(double m) {
  if (!(m >= 0.0)) throw DomainError("mass must be non-negative");
}

}  // namespace

PlaneWaveField::PlaneWaveField(std::vector<PlaneWaveTerm> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const PlaneWaveTerm& a, const PlaneWaveTerm& b) { return a.p < b.p; });
  for (auto& term : terms) {
    if (!terms_.empty() && same_momentum(terms_.back().p, term.p)) {
      terms_.back().amplitude = terms_.back().amplitude + term.amplitude;
    } else {
      terms_.push_back(std::move(term));
    }
  }
  std::erase_if(terms_, [](const PlaneWaveTerm& t) { return t.amplitude.is_zero(); });
}

PlaneWaveField PlaneWaveField::constant(const Multivector& amplitude) {
  return wave(Covector{}, amplitude);
}

PlaneWaveField PlaneWaveField::wave(const Covector& p, const Multivector& amplitude) {
  return PlaneWaveField({PlaneWaveTerm{p, amplitude}});
}

Multivector PlaneWaveField::evaluate(const Covector& x) const {
  Multivector out;
  for (const auto& term : terms_) {
    double phase = 0.0;
    for (int mu = 0; mu < 4; ++mu) phase += term.p[mu] * x[mu];
    out = out + std::exp(-kI * phase) * term.amplitude;
  }
  return out;
}

double PlaneWaveField::norm() const {
  double n = 0.0;
  for (const auto& term : terms_) n = std::max(n, term.amplitude.norm());
  return n;
}

PlaneWaveField operator+(const PlaneWaveField& a, const PlaneWaveField& b) {
  std::vector<PlaneWaveTerm> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return PlaneWaveField(std::move(terms));
}

PlaneWaveField operator-(const PlaneWaveField& a, const PlaneWaveField& b) {
  return a + Complex{-1.0} * b;
}

PlaneWaveField operator*(Complex s, const PlaneWaveField& a) {
  std::vector<PlaneWaveTerm> terms = a.terms_;
  for (auto& t : terms) t.amplitude = s * t.amplitude;
  return PlaneWaveField(std::move(terms));
}

Potential::Potential(const Covector& a) : a_(a) {
  for (double x : a) {
    if (!std::isfinite(x)) throw DomainError("potential components must be finite");
  }
  form_ = one_form({a[0], a[1], a[2], a[3]});
}

Multivector one_form(const std::array<Complex, 4>& coeff) {
  Multivector::Coeffs c{};
  for (int mu = 0; mu < 4; ++mu) c[1u << mu] = coeff[mu];
  return Multivector{c};
}

Multivector differential_amplitude(const Covector& p, const Multivector& amp) {
  return wedge(one_form(derivative_symbol(p)), amp);
}

Multivector codifferential_amplitude(const Covector& p, const Multivector& amp) {
  return hodge_star(differential_amplitude(p, hodge_star(amp)));
}

Multivector dirac_amplitude(const Covector& p, const Multivector& amp) {
  return one_form(derivative_symbol(p)) * amp;
}

PlaneWaveField differential(const PlaneWaveField& phi, Exec exec) {
  return map_terms(phi, exec, differential_amplitude);
}

PlaneWaveField codifferential(const PlaneWaveField& phi, Exec exec) {
  return map_terms(phi, exec, codifferential_amplitude);
}

PlaneWaveField dirac_operator(const PlaneWaveField& phi, Exec exec) {
  return map_terms(phi, exec, dirac_amplitude);
}

PlaneWaveField dirac_kahler_residual(const PlaneWaveField& phi, const Potential& a, double m, Exec exec) {
  check_mass(m);
  return map_terms(phi, exec, [&](const Covector& p, const Multivector& amp) {
    return differential_amplitude(p, amp) - codifferential_amplitude(p, amp) + kI * (a.form() * amp) +
           (kI * m) * amp;
  });
}

PlaneWaveField dtte_residual(const PlaneWaveField& psi, const Potential& a, double m, Exec exec) {
  return dirac_kahler_residual(psi, a, m, exec);
}

PlaneWaveField dtte_residual_coordinate(const PlaneWaveField& psi, const Potential& a, double m,
                                        Exec exec) {
  check_mass(m);
  return map_terms(psi, exec, [&](const Covector& p, const Multivector& amp) {
    std::array<Complex, 4> k{};
    for (int mu = 0; mu < 4; ++mu) k[mu] = -kI * p[mu] + kI * a.components()[mu];
    return one_form(k) * amp + (kI * m) * amp;
  });
}

}  // namespace dtte
