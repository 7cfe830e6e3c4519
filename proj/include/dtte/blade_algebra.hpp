#pragma once

// Complexified exterior algebra of Minkowski space R^{1,3}, with wedge and
// Clifford products, the Hodge star and both conjugations.
//
// Basis: the 16 blades e^{m1}^...^e^{mk}, m1 < ... < mk, encoded as a 4-bit
// mask (bit m set <=> e^m participates). Metric diag(+1,-1,-1,-1).

#include <array>
#include <bit>
#include <compare>
#include <complex>
#include <cstdint>
#include <string>

#include "dtte/linalg.hpp"

namespace dtte {

inline constexpr int kSpacetimeDim = 4;
inline constexpr std::size_t kBladeCount = 16;
inline constexpr std::array<int, 4> kMetric{+1, -1, -1, -1};
inline constexpr double kDefaultTolerance = 1e-12;

class BladeIndex {
 public:
  constexpr BladeIndex() = default;
  constexpr explicit BladeIndex(unsigned mask) : mask_(static_cast<std::uint8_t>(mask & 0xFu)) {}

  static constexpr BladeIndex scalar() { return BladeIndex{0}; }
  static constexpr BladeIndex vector(int mu) { return BladeIndex{1u << mu}; }

  constexpr unsigned mask() const { return mask_; }
  constexpr int grade() const { return std::popcount(mask_); }
  constexpr bool contains(int mu) const { return (mask_ >> mu) & 1u; }

  // "1" for the scalar blade, otherwise "e0^e1^e3".
  std::string name() const;

  friend constexpr auto operator<=>(BladeIndex, BladeIndex) = default;

 private:
  std::uint8_t mask_ = 0;
};

// A unit blade times a sign in {-1, 0, +1}. sign == 0 encodes the zero form.
struct SignedBlade {
  int sign;
  BladeIndex blade;
  friend constexpr bool operator==(SignedBlade, SignedBlade) = default;
};

// Parity of the permutation that sorts the concatenation (a, b) ascending,
// where a and b are disjoint or not: counts pairs i in a, j in b with j < i.
constexpr int reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned rest = a >> 1; rest != 0; rest >>= 1) swaps += std::popcount(rest & b);
  return (swaps & 1) ? -1 : +1;
}

constexpr SignedBlade wedge(BladeIndex a, BladeIndex b) {
  if (a.mask() & b.mask()) return {0, BladeIndex{}};
  return {reorder_sign(a.mask(), b.mask()), BladeIndex{a.mask() | b.mask()}};
}

// Shared indices contract pairwise to eta^{mm} once adjacent.
constexpr SignedBlade clifford_mul(BladeIndex a, BladeIndex b) {
  int sign = reorder_sign(a.mask(), b.mask());
  const unsigned shared = a.mask() & b.mask();
  for (int mu = 0; mu < kSpacetimeDim; ++mu) {
    if ((shared >> mu) & 1u) sign *= kMetric[mu];
  }
  return {sign, BladeIndex{a.mask() ^ b.mask()}};
}

// Cached signed permutation computed once from hodge_star_literal.
SignedBlade hodge_star(BladeIndex b);

// Direct evaluation of
//   *Phi = 1/(k!(4-k)!) eps_{m1..m4} phi^{m1..mk} e^{m(k+1)} ^ ... ^ e^{m4},
// eps_{0123} = 1, summing over all 4! index orderings.
SignedBlade hodge_star_literal(BladeIndex b);

// (-1)^{k(k-1)/2}
constexpr int clifford_conj_sign(int grade) { return ((grade * (grade - 1) / 2) & 1) ? -1 : +1; }

class Multivector {
 public:
  using Coeffs = std::array<Complex, kBladeCount>;

  Multivector() = default;
  explicit Multivector(const Coeffs& coeffs) : c_(coeffs) {}

  static Multivector scalar(Complex z);
  static Multivector basis(int mu);
  static Multivector blade(BladeIndex b, Complex z = 1.0);

  Complex operator[](BladeIndex b) const { return c_[b.mask()]; }
  const Coeffs& coeffs() const { return c_; }

  double norm() const;
  bool is_zero() const;

  friend Multivector operator+(const Multivector& a, const Multivector& b);
  friend Multivector operator-(const Multivector& a, const Multivector& b);
  friend Multivector operator-(const Multivector& a);
  friend Multivector operator*(Complex s, const Multivector& a);
  friend Multivector operator*(const Multivector& a, Complex s) { return s * a; }
  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  Coeffs c_{};
};

Multivector wedge(const Multivector& u, const Multivector& v);
Multivector clifford_mul(const Multivector& u, const Multivector& v);
inline Multivector operator*(const Multivector& u, const Multivector& v) { return clifford_mul(u, v); }

// Throws DomainError unless 0 <= k <= 4.
Multivector grade_project(const Multivector& u, int k);

Multivector hodge_star(const Multivector& u);
Multivector clifford_conj(const Multivector& u);

// U^dagger = E U^* E. Throws InvalidTetrad if |E E - 1| exceeds
// tol * max(1, |E|^2).
Multivector hermitian_conj(const Multivector& u, const Multivector& e, double tol = kDefaultTolerance);

// Matrix of left Clifford multiplication by u in the blade basis: column n
// holds the coefficients of u * blade_n.
ComplexMatrix regular_representation(const Multivector& u);

// Euclidean norm of the coefficient difference.
double distance(const Multivector& a, const Multivector& b);

// Canonical text form: nonzero terms by ascending mask, "(re+imi)" followed by
// "*e0^e1" for non-scalar blades, joined by " + ". Zero renders as "0".
std::string to_string(const Multivector& u);

// Shortest round-trip rendering of a complex number as "a+bi".
std::string format_complex(Complex z);

}  // namespace dtte
