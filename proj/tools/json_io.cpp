#include "json_io.hpp"

#include <cmath>
#include <cstdio>

namespace hyp::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw PreconditionError("schema: " + what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) schema(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_from_json(const json& j, const char* what) {
    if (!j.is_number_integer()) schema(std::string(what) + " must be an integer");
    return j.get<int>();
}

Exponents exponents_from_json(const json& j, size_t n) {
    if (!j.is_array() || j.size() != n) schema("exponents must be a list of " + std::to_string(n) + " integers");
    Exponents e;
    for (const auto& x : j) {
        int v = int_from_json(x, "exponent");
        if (v < 0) schema("exponents must be nonnegative");
        e.push_back(v);
    }
    return e;
}

json exponents_to_json(const Exponents& e) {
    json out = json::array();
    for (int v : e) out.push_back(v);
    return out;
}

std::string coeff_string(const ExactComplex& c) {
    std::string s = c.to_string();
    bool plain = s.find_first_of("+-/ ", 1) == std::string::npos;
    return plain ? s : "(" + s + ")";
}

}  // namespace

json real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;  // no negative zero
}

json reals(const std::vector<double>& xs) {
    json out = json::array();
    for (double x : xs) out.push_back(real(x));
    return out;
}

json to_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

json to_json(const Rational& q) { return json::array({to_json(q.get_num()), to_json(q.get_den())}); }

json to_json(const ExactComplex& z) {
    return json::array({to_json(z.re().get_num()), to_json(z.re().get_den()), to_json(z.im().get_num()),
                        to_json(z.im().get_den())});
}

json to_json(const Poly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

json to_json(const ExpPoly& f) {
    json out = json::array();
    for (const auto& t : f.terms())
        out.push_back({{"coeff", to_json(t.coeff)}, {"exp", to_json(t.exponent)}, {"expconst", to_json(t.expconst)}});
    return out;
}

json to_json(const CycloElem& c) {
    ExactComplex z;
    if (to_gaussian(c, z)) return to_json(z);
    json coeffs = json::array();
    for (const auto& q : c.residue().coeffs()) coeffs.push_back(to_json(q));
    return {{"zeta", c.field()->n}, {"coeffs", coeffs}, {"text", c.to_string()}};
}

json to_json(const CycloRat& r) {
    auto side = [](const CycloPoly& p) {
        json out = json::array();
        for (const auto& [e, c] : p.terms()) out.push_back({{"exponents", exponents_to_json(e)}, {"coeff", to_json(c)}});
        return out;
    };
    return {{"num", side(r.num())}, {"den", side(r.den())}};
}

json to_json(const SymForm& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(to_json(c));
    return {{"M", f.M}, {"basis", to_string(f.basis)}, {"coeffs", coeffs}, {"text", hyp::to_string(f)}};
}

json to_json(const PlanePoint& p) {
    json out{{"exact", p.exact}, {"multiplicity", p.multiplicity}, {"text", p.to_string()}};
    if (p.exact) {
        json c = json::array();
        for (const auto& x : p.coords) c.push_back(to_json(x));
        out["coords"] = c;
    } else {
        json c = json::array();
        for (const auto& x : p.approx)
            c.push_back(json::array({real(static_cast<double>(x.real())), real(static_cast<double>(x.imag()))}));
        out["approx"] = c;
        out["radius"] = real(p.radius);
    }
    return out;
}

json to_json(const Poly3& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({{"exponents", exponents_to_json(e)}, {"coeff", to_json(c)}});
    return out;
}

json to_json(const ExpSum& s) {
    json terms = json::array();
    for (const auto& t : s.terms) terms.push_back({{"coeff", to_json(t.coeff)}, {"i", t.i}, {"j", t.j}, {"k", t.k}});
    return {{"M", s.M}, {"p1", to_json(s.p1)}, {"p2", to_json(s.p2)}, {"terms", terms}};
}

json to_json(const LinearFit& f) {
    return {{"slope", real(f.slope)}, {"intercept", real(f.intercept)}, {"rms", real(f.rms)}};
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0) schema("bad integer string " + j.dump());
        return z;
    }
    schema("expected an integer, got " + j.dump());
}

Rational rational_from_json(const json& j) {
    if (j.is_array()) {
        if (j.size() != 2) schema("a rational is [num, den]");
        Integer den = integer_from_json(j[1]);
        if (den == 0) schema("zero denominator");
        return make_rational(integer_from_json(j[0]), den);
    }
    if (j.is_string()) {
        Rational q;
        if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) schema("bad rational " + j.dump());
        q.canonicalize();
        return q;
    }
    return Rational(integer_from_json(j));
}

ExactComplex complex_from_json(const json& j) {
    if (j.is_array() && j.size() == 4)
        return {rational_from_json(json::array({j[0], j[1]})), rational_from_json(json::array({j[2], j[3]}))};
    return ExactComplex(rational_from_json(j));
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) schema("a polynomial is a list of ascending coefficients");
    std::vector<ExactComplex> c;
    for (const auto& x : j) c.push_back(complex_from_json(x));
    return Poly(std::move(c));
}

ExpPoly exppoly_from_json(const json& j) {
    if (!j.is_array()) schema("an ExpPoly is a list of terms");
    ExpPoly out;
    for (const auto& t : j) {
        Poly coeff = poly_from_json(field(t, "coeff"));
        Poly exponent = t.contains("exp") ? poly_from_json(t.at("exp")) : Poly();
        ExactComplex tag = t.contains("expconst") ? complex_from_json(t.at("expconst")) : ExactComplex(0);
        out += ExpPoly::term(coeff, exponent, tag);
    }
    return out;
}

ProjCurve curve_from_json(const json& j) {
    if (!j.is_array()) schema("a curve is a list of ExpPoly components");
    ProjCurve f;
    for (const auto& c : j) f.components.push_back(exppoly_from_json(c));
    return f;
}

HomDivisor divisor_from_json(const json& j) {
    const json& terms = field(j, "terms");
    if (!terms.is_array() || terms.empty()) schema("divisor terms must be a nonempty list");
    size_t n = field(terms[0], "exponents").size();
    HomDivisor d{MPoly<ExactComplex>(static_cast<int>(n)), 0};
    for (const auto& t : terms)
        d.poly.add_term(exponents_from_json(field(t, "exponents"), n), complex_from_json(field(t, "coeff")));
    d.degree = j.contains("degree") ? int_from_json(j.at("degree"), "degree") : d.poly.total_degree();
    return d;
}

ExpSum expsum_from_json(const json& j) {
    ExpSum s;
    s.M = int_from_json(field(j, "M"), "M");
    s.p1 = poly_from_json(field(j, "p1"));
    s.p2 = poly_from_json(field(j, "p2"));
    for (const auto& t : field(j, "terms"))
        s.terms.push_back({complex_from_json(field(t, "coeff")), int_from_json(field(t, "i"), "i"),
                           t.contains("j") ? int_from_json(t.at("j"), "j") : 0,
                           t.contains("k") ? int_from_json(t.at("k"), "k") : 0});
    return s;
}

CycloElem cyclo_from_json(const json& j) {
    if (j.is_object()) {
        int n = int_from_json(field(j, "zeta"), "zeta");
        if (n < 1) schema("zeta order must be positive");
        auto f = cyclotomic_field(n);
        CycloElem acc;
        long k = 0;
        for (const auto& c : field(j, "coeffs")) acc += CycloElem(rational_from_json(c)) * CycloElem::zeta_power(f, k++);
        return acc;
    }
    ExactComplex z = complex_from_json(j);
    if (z.is_real()) return CycloElem(z.re());
    return to_cyclo(z, cyclotomic_field(4));
}

SymForm symform_from_json(const json& j) {
    SymForm f;
    f.M = int_from_json(field(j, "M"), "M");
    std::string basis = j.contains("basis") ? j.at("basis").get<std::string>() : "plain";
    if (basis == "plain")
        f.basis = FormBasis::plain;
    else if (basis == "log1")
        f.basis = FormBasis::log1;
    else
        schema("basis must be \"plain\" or \"log1\"");
    auto side = [](const json& s) {
        CycloPoly p(2);
        for (const auto& t : s) p.add_term(exponents_from_json(field(t, "exponents"), 2), cyclo_from_json(field(t, "coeff")));
        return p;
    };
    for (const auto& c : field(j, "coeffs")) {
        if (c.is_null() || (c.is_array() && c.empty())) {
            f.coeffs.emplace_back();
            continue;
        }
        CycloPoly num = side(c.is_array() ? c : field(c, "num"));
        CycloPoly den = c.is_object() && c.contains("den") ? side(c.at("den")) : CycloPoly::constant(2, CycloElem(1));
        if (den.is_zero()) schema("zero denominator in a form coefficient");
        f.coeffs.emplace_back(num, den);
    }
    validate(f);
    return f;
}

PlaneCurve plane_curve_from_json(const json& j) {
    const json& terms = j.is_object() ? field(j, "terms") : j;
    if (!terms.is_array()) schema("a plane curve is a list of monomials");
    Poly3 p(3);
    for (const auto& t : terms) p.add_term(exponents_from_json(field(t, "exponents"), 3), rational_from_json(field(t, "coeff")));
    return make_curve(p);
}

Configuration configuration_from_json(const json& j) {
    const json& curves = field(j, "curves");
    if (!curves.is_array() || curves.size() != 3) schema("a configuration has exactly three curves");
    return {{plane_curve_from_json(curves[0]), plane_curve_from_json(curves[1]), plane_curve_from_json(curves[2])}};
}

std::string to_string(const Poly& p, const std::string& var) {
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        const ExactComplex& c = p.coeff(k);
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (mono.empty())
            s += coeff_string(c);
        else if (c.is_one())
            s += mono;
        else
            s += coeff_string(c) + "*" + mono;
    }
    return s.empty() ? "0" : s;
}

std::string to_string(const ExpPoly& f, const std::string& var) {
    std::string s;
    for (const auto& t : f.terms()) {
        if (!s.empty()) s += " + ";
        std::string c = to_string(t.coeff, var);
        bool has_exp = !t.exponent.is_zero() || !t.expconst.is_zero();
        if (!has_exp) {
            s += t.coeff.degree() > 0 ? "(" + c + ")" : c;
            continue;
        }
        std::string arg = to_string(t.exponent, var);
        if (!t.expconst.is_zero()) arg = t.exponent.is_zero() ? coeff_string(t.expconst) : arg + " + " + coeff_string(t.expconst);
        std::string e = "exp(" + arg + ")";
        s += c == "1" ? e : "(" + c + ")*" + e;
    }
    return s.empty() ? "0" : s;
}

std::string to_string(const Poly3& p) {
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (size_t v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(v) + (e[v] > 1 ? "^" + std::to_string(e[v]) : "");
        }
        std::string cs = c.get_str();
        bool neg = sgn(c) < 0;
        std::string mag = neg ? cs.substr(1) : cs;
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        if (mono.empty())
            s += mag;
        else
            s += (mag == "1" ? "" : mag + "*") + mono;
    }
    return s.empty() ? "0" : s;
}

}  // namespace hyp::io
