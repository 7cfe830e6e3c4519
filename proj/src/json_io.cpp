#include "dtte/json_io.hpp"

#include "dtte/errors.hpp"

namespace dtte {
namespace {

Json covector_to_json(const Covector& p) { return Json::array({p[0], p[1], p[2], p[3]}); }

Covector covector_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw DomainError("momentum must be an array of 4 numbers");
  Covector p{};
  for (int mu = 0; mu < 4; ++mu) p[mu] = j.at(mu).get<double>();
  return p;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw DomainError("complex number must be [re, im]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

Json to_json(const Multivector& u) {
  Json coeffs = Json::array();
  for (const auto& z : u.coeffs()) coeffs.push_back(complex_to_json(z));
  return Json{{"coeffs", std::move(coeffs)}};
}

Multivector multivector_from_json(const Json& j) {
  const auto& arr = j.at("coeffs");
  if (!arr.is_array() || arr.size() != kBladeCount) throw DomainError("multivector needs 16 coefficients");
  Multivector::Coeffs c{};
  for (std::size_t i = 0; i < kBladeCount; ++i) c[i] = complex_from_json(arr.at(i));
  return Multivector{c};
}

Json to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (const auto& z : m.entries()) entries.push_back(complex_to_json(z));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  std::vector<Complex> entries;
  for (const auto& z : j.at("entries")) entries.push_back(complex_from_json(z));
  return ComplexMatrix(rows, cols, std::move(entries));
}

Json to_json(const KetVector& k) {
  Json arr = Json::array();
  for (const auto& z : k.c) arr.push_back(complex_to_json(z));
  return arr;
}

Json to_json(const PlaneWaveField& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    terms.push_back(Json{{"p", covector_to_json(t.p)}, {"amplitude", to_json(t.amplitude)}});
  }
  return Json{{"terms", std::move(terms)}};
}

PlaneWaveField field_from_json(const Json& j) {
  std::vector<PlaneWaveTerm> terms;
  for (const auto& t : j.at("terms")) {
    terms.push_back({covector_from_json(t.at("p")), multivector_from_json(t.at("amplitude"))});
  }
  return PlaneWaveField(std::move(terms));
}

Json to_json(const GammaRep& rep) {
  Json tetrad = Json::array();
  for (const auto& row : rep.basis().tetrad().components()) {
    tetrad.push_back(Json::array({row[0], row[1], row[2], row[3]}));
  }
  Json gamma = Json::array();
  for (const auto& g : rep.gammas()) gamma.push_back(to_json(g));
  return Json{{"tetrad", std::move(tetrad)}, {"gamma", std::move(gamma)}};
}

Json to_json(const TheoremReport& r) {
  return Json{{"algebra_residual", r.algebra_residual},
              {"matrix_residual", r.matrix_residual},
              {"difference", r.difference},
              {"tolerance", r.tolerance},
              {"pass", r.pass}};
}

Json to_json(const SolutionSet& s) {
  Json sols = Json::array();
  for (const auto& sol : s.solutions) {
    sols.push_back(Json{{"ket", to_json(sol.ket)},
                        {"amplitude", to_json(sol.amplitude)},
                        {"residual", sol.residual}});
  }
  return Json{{"mass", s.mass},
              {"p", covector_to_json(s.p)},
              {"a", covector_to_json(s.potential.components())},
              {"mass_shell", s.mass_shell},
              {"on_shell", s.on_shell},
              {"count", s.solutions.size()},
              {"solutions", std::move(sols)}};
}

Json to_json(const DispersionRow& row) {
  return Json{{"p", covector_to_json(row.p)},
              {"null_dimension", row.null_dimension},
              {"mass_shell", row.mass_shell},
              {"on_shell", row.on_shell},
              {"consistent", row.consistent}};
}

}  // namespace dtte
