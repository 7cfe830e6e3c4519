#include "dtte/blade_algebra.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <string>

#include "dtte/errors.hpp"

namespace dtte {
namespace {

// Parity of an index sequence (+1 even, -1 odd); 0 if an index repeats.
int sequence_sign(std::span<const int> idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  }
  return sign;
}

unsigned mask_of(std::span<const int> idx) {
  unsigned m = 0;
  for (int mu : idx) m |= 1u << mu;
  return m;
}

int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::array<SignedBlade, kBladeCount> build_star_table() {
  std::array<SignedBlade, kBladeCount> table{};
  for (unsigned m = 0; m < kBladeCount; ++m) table[m] = hodge_star_literal(BladeIndex{m});
  return table;
}

std::string format_double(double x) {
  if (x == 0.0) return "0";  // also folds -0
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return {buf.data(), end};
}

}  // namespace

std::string BladeIndex::name() const {
  if (mask_ == 0) return "1";
  std::string s;
  for (int mu = 0; mu < kSpacetimeDim; ++mu) {
    if (!contains(mu)) continue;
    if (!s.empty()) s += '^';
    s += 'e';
    s += static_cast<char>('0' + mu);
  }
  return s;
}

SignedBlade hodge_star_literal(BladeIndex b) {
  const int k = b.grade();
  std::array<int, 4> mu{0, 1, 2, 3};
  int total = 0;
  BladeIndex target = BladeIndex{~b.mask()};
  do {
    const std::span<const int> head(mu.data(), k);
    const std::span<const int> tail(mu.data() + k, 4 - k);
    // phi_{mu1..muk} of the unit blade: the sign sorting head onto b, else 0.
    if (mask_of(head) != b.mask()) continue;
    int phi_upper = sequence_sign(head);
    for (int m : head) phi_upper *= kMetric[m];
    const int eps = sequence_sign(mu);
    // e^{tail...} in canonical order.
    const int basis_sign = sequence_sign(tail);
    target = BladeIndex{mask_of(tail)};
    total += eps * phi_upper * basis_sign;
  } while (std::next_permutation(mu.begin(), mu.end()));

  const int norm = factorial(k) * factorial(4 - k);
  if (total % norm != 0 || std::abs(total / norm) != 1) {
    throw InternalConsistency("Hodge star sum did not reduce to a unit blade");
  }
  return {total / norm, target};
}

SignedBlade hodge_star(BladeIndex b) {
  static const auto table = build_star_table();
  return table[b.mask()];
}

Multivector Multivector::scalar(Complex z) { return blade(BladeIndex::scalar(), z); }

Multivector Multivector::basis(int mu) {
  if (mu < 0 || mu >= kSpacetimeDim) throw DomainError("basis index out of range");
  return blade(BladeIndex::vector(mu));
}

Multivector Multivector::blade(BladeIndex b, Complex z) {
  Coeffs c{};
  c[b.mask()] = z;
  return Multivector{c};
}

double Multivector::norm() const { return dtte::norm(c_); }

bool Multivector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Complex z) { return z == Complex{}; });
}

Multivector operator+(const Multivector& a, const Multivector& b) {
  Multivector::Coeffs c;
  for (std::size_t i = 0; i < kBladeCount; ++i) c[i] = a.c_[i] + b.c_[i];
  return Multivector{c};
}

Multivector operator-(const Multivector& a, const Multivector& b) {
  Multivector::Coeffs c;
  for (std::size_t i = 0; i < kBladeCount; ++i) c[i] = a.c_[i] - b.c_[i];
  return Multivector{c};
}

Multivector operator-(const Multivector& a) {
  Multivector::Coeffs c;
  for (std::size_t i = 0; i < kBladeCount; ++i) c[i] = -a.c_[i];
  return Multivector{c};
}

Multivector operator*(Complex s, const Multivector& a) {
  Multivector::Coeffs c;
  for (std::size_t i = 0; i < kBladeCount; ++i) c[i] = s * a.c_[i];
  return Multivector{c};
}

Multivector wedge(const Multivector& u, const Multivector& v) {
  Multivector::Coeffs out{};
  const auto& a = u.coeffs();
  const auto& b = v.coeffs();
  for (unsigned i = 0; i < kBladeCount; ++i) {
    if (a[i] == Complex{}) continue;
    for (unsigned j = 0; j < kBladeCount; ++j) {
      const auto r = wedge(BladeIndex{i}, BladeIndex{j});
      if (r.sign != 0) out[r.blade.mask()] += static_cast<double>(r.sign) * a[i] * b[j];
    }
  }
  return Multivector{out};
}

Multivector clifford_mul(const Multivector& u, const Multivector& v) {
  Multivector::Coeffs out{};
  const auto& a = u.coeffs();
  const auto& b = v.coeffs();
  for (unsigned i = 0; i < kBladeCount; ++i) {
    if (a[i] == Complex{}) continue;
    for (unsigned j = 0; j < kBladeCount; ++j) {
      const auto r = clifford_mul(BladeIndex{i}, BladeIndex{j});
      out[r.blade.mask()] += static_cast<double>(r.sign) * a[i] * b[j];
    }
  }
  return Multivector{out};
}

Multivector grade_project(const Multivector& u, int k) {
  if (k < 0 || k > kSpacetimeDim) throw DomainError("grade must lie in 0..4");
  Multivector::Coeffs out{};
  for (unsigned i = 0; i < kBladeCount; ++i) {
    if (BladeIndex{i}.grade() == k) out[i] = u.coeffs()[i];
  }
  return Multivector{out};
}

Multivector hodge_star(const Multivector& u) {
  Multivector::Coeffs out{};
  for (unsigned i = 0; i < kBladeCount; ++i) {
    const auto r = hodge_star(BladeIndex{i});
    out[r.blade.mask()] += static_cast<double>(r.sign) * u.coeffs()[i];
  }
  return Multivector{out};
}

Multivector clifford_conj(const Multivector& u) {
  Multivector::Coeffs out{};
  for (unsigned i = 0; i < kBladeCount; ++i) {
    out[i] = static_cast<double>(clifford_conj_sign(BladeIndex{i}.grade())) * std::conj(u.coeffs()[i]);
  }
  return Multivector{out};
}

Multivector hermitian_conj(const Multivector& u, const Multivector& e, double tol) {
  const double scale = std::max(1.0, e.norm() * e.norm());
  if (distance(e * e, Multivector::scalar(1.0)) > tol * scale) {
    throw InvalidTetrad("hermitian_conj: E*E != 1");
  }
  return e * (clifford_conj(u) * e);
}

ComplexMatrix regular_representation(const Multivector& u) {
  ComplexMatrix r(kBladeCount, kBladeCount);
  for (unsigned n = 0; n < kBladeCount; ++n) {
    const auto col = u * Multivector::blade(BladeIndex{n});
    for (unsigned k = 0; k < kBladeCount; ++k) r(k, n) = col.coeffs()[k];
  }
  return r;
}

double distance(const Multivector& a, const Multivector& b) { return (a - b).norm(); }

std::string format_complex(Complex z) {
  std::string s = format_double(z.real());
  const double im = z.imag();
  if (std::signbit(im) && im != 0.0) {
    s += format_double(im);
  } else {
    s += '+';
    s += format_double(im);
  }
  s += 'i';
  return s;
}

std::string to_string(const Multivector& u) {
  std::string out;
  for (unsigned i = 0; i < kBladeCount; ++i) {
    const Complex z = u.coeffs()[i];
    if (z == Complex{}) continue;
    if (!out.empty()) out += " + ";
    out += '(';
    out += format_complex(z);
    out += ')';
    if (i != 0) {
      out += '*';
      out += BladeIndex{i}.name();
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace dtte
