#pragma once

// Seeded generators for randomized identity checks.

#include <random>

#include "dtte/blade_algebra.hpp"
#include "dtte/field_calculus.hpp"
#include "dtte/ideal_repr.hpp"

namespace dtte {

using Rng = std::mt19937_64;

// Standard-normal real and imaginary parts on all 16 blades.
Multivector random_multivector(Rng& rng);
// Random complex coefficients on the grade-k blades only.
Multivector random_pure_grade(Rng& rng, int k);
// Real one-form with standard-normal components.
Multivector random_real_one_form(Rng& rng);
Covector random_covector(Rng& rng, double scale = 1.0);
// Boost with rapidity in [-1, 1] composed with a spatial rotation.
RealMatrix4 random_lorentz_matrix(Rng& rng);
// Sum of `terms` waves with random momenta and amplitudes.
PlaneWaveField random_field(Rng& rng, int terms);

}  // namespace dtte
