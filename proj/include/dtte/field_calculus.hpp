#pragma once

// Exterior-form fields as finite plane-wave sums
//   Phi(x) = sum_j amplitude_j * exp(-i p_mu x^mu),
// so that d_mu acts exactly as multiplication by -i p_mu.

#include <array>
#include <vector>

#include "dtte/blade_algebra.hpp"
#include "dtte/ideal_repr.hpp"
#include "dtte/parallel.hpp"

namespace dtte {

inline constexpr double kMomentumMergeTolerance = 1e-12;

struct PlaneWaveTerm {
  Covector p{};  // covariant components p_mu
  Multivector amplitude;
};

class PlaneWaveField {
 public:
  PlaneWaveField() = default;
  // Terms are sorted lexicographically by momentum; terms whose momenta agree
  // componentwise within 1e-12 are merged by adding amplitudes.
  explicit PlaneWaveField(std::vector<PlaneWaveTerm> terms);

  static PlaneWaveField constant(const Multivector& amplitude);
  static PlaneWaveField wave(const Covector& p, const Multivector& amplitude);

  const std::vector<PlaneWaveTerm>& terms() const { return terms_; }

  // Value at the spacetime point x^mu.
  Multivector evaluate(const Covector& x) const;

  // Max over terms of the amplitude's coefficient norm; 0 for no terms.
  double norm() const;

  friend PlaneWaveField operator+(const PlaneWaveField& a, const PlaneWaveField& b);
  friend PlaneWaveField operator-(const PlaneWaveField& a, const PlaneWaveField& b);
  friend PlaneWaveField operator*(Complex s, const PlaneWaveField& a);

 private:
  std::vector<PlaneWaveTerm> terms_;
};

// Constant real one-form A = a_mu e^mu.
class Potential {
 public:
  Potential() = default;
  explicit Potential(const Covector& a);

  const Covector& components() const { return a_; }
  const Multivector& form() const { return form_; }

 private:
  Covector a_{};
  Multivector form_;
};

// Builds sum_mu coeff_mu e^mu.
Multivector one_form(const std::array<Complex, 4>& coeff);

// Amplitude-level actions of the operators on a single exp(-i p x) term.
Multivector differential_amplitude(const Covector& p, const Multivector& amp);
Multivector codifferential_amplitude(const Covector& p, const Multivector& amp);
Multivector dirac_amplitude(const Covector& p, const Multivector& amp);

// d Phi = e^mu ^ d_mu Phi
PlaneWaveField differential(const PlaneWaveField& phi, Exec exec = Exec::serial);
// delta = * d *
PlaneWaveField codifferential(const PlaneWaveField& phi, Exec exec = Exec::serial);
// e^mu d_mu Phi (Clifford product)
PlaneWaveField dirac_operator(const PlaneWaveField& phi, Exec exec = Exec::serial);

// (d - delta) Phi + i A Phi + i m Phi, with no ideal constraint on Phi.
// Throws DomainError for m < 0.
PlaneWaveField dirac_kahler_residual(const PlaneWaveField& phi, const Potential& a, double m,
                                     Exec exec = Exec::serial);

// Same formula for Psi in I(t).
PlaneWaveField dtte_residual(const PlaneWaveField& psi, const Potential& a, double m,
                             Exec exec = Exec::serial);

// Coordinate form e^mu (d_mu Psi + i a_mu Psi) + i m Psi, evaluated termwise.
PlaneWaveField dtte_residual_coordinate(const PlaneWaveField& psi, const Potential& a, double m,
                                        Exec exec = Exec::serial);

}  // namespace dtte
