#pragma once

#include <string>

#include "hyp/borel.hpp"
#include "hyp/chern.hpp"
#include "hyp/covering.hpp"
#include "hyp/expfun.hpp"
#include "hyp/nevanlinna.hpp"
#include "hyp/planeconf.hpp"
#include "json.hpp"

namespace hyp::io {

using json = nlohmann::json;

/// Doubles rounded to 15 significant digits; non-finite values become strings.
json real(double x);
json reals(const std::vector<double>& xs);

json to_json(const Integer& z);
json to_json(const Rational& q);                 // [num, den]
json to_json(const ExactComplex& z);             // [re_num, re_den, im_num, im_den]
json to_json(const Poly& p);                     // ascending coefficients
json to_json(const ExpPoly& f);
json to_json(const CycloElem& c);
json to_json(const CycloRat& r);
json to_json(const SymForm& f);
json to_json(const PlanePoint& p);
json to_json(const Poly3& p);
json to_json(const ExpSum& s);
json to_json(const LinearFit& f);

Integer integer_from_json(const json& j);
/// [num, den], an integer, or a decimal string such as "1/2".
Rational rational_from_json(const json& j);
/// [re_num, re_den, im_num, im_den], [num, den] or an integer.
ExactComplex complex_from_json(const json& j);
Poly poly_from_json(const json& j);
ExpPoly exppoly_from_json(const json& j);
ProjCurve curve_from_json(const json& j);
HomDivisor divisor_from_json(const json& j);
ExpSum expsum_from_json(const json& j);
CycloElem cyclo_from_json(const json& j);
SymForm symform_from_json(const json& j);
PlaneCurve plane_curve_from_json(const json& j);
Configuration configuration_from_json(const json& j);

/// Human-readable forms used next to the structured output.
std::string to_string(const Poly& p, const std::string& var = "xi");
std::string to_string(const ExpPoly& f, const std::string& var = "xi");
std::string to_string(const Poly3& p);

}  // namespace hyp::io
