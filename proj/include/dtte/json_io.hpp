#pragma once

// JSON interchange formats:
//   multivector  {"coeffs": [[re, im] x 16]}            (blade mask order)
//   matrix       {"rows": r, "cols": c, "entries": [[re, im], ...]}  (row-major)
//   field        {"terms": [{"p": [p0,p1,p2,p3], "amplitude": <multivector>}]}
//   gamma rep    {"tetrad": [[...] x 4], "gamma": [M0, M1, M2, M3]}
//   theorem      {"algebra_residual", "matrix_residual", "difference", "tolerance", "pass"}

#include "json.hpp"

#include "dtte/blade_algebra.hpp"
#include "dtte/dirac_solver.hpp"
#include "dtte/field_calculus.hpp"
#include "dtte/ideal_repr.hpp"
#include "dtte/linalg.hpp"

namespace dtte {

using Json = nlohmann::json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const Multivector& u);
Multivector multivector_from_json(const Json& j);

Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json to_json(const KetVector& k);

Json to_json(const PlaneWaveField& f);
PlaneWaveField field_from_json(const Json& j);

Json to_json(const GammaRep& rep);
Json to_json(const TheoremReport& r);
Json to_json(const SolutionSet& s);
Json to_json(const DispersionRow& row);

}  // namespace dtte
