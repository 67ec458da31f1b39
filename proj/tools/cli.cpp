#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "CLI11.hpp"

namespace hyp::cli {

using io::json;

namespace {

struct Options {
    std::string input;
    std::string output = "-";
    double tol = std::numeric_limits<double>::quiet_NaN();
    std::uint64_t seed = 0;
    std::string golden;
    bool update = false;
    // chern
    std::vector<long> a{1};
    std::vector<long> b;
    long bmax = 0;
    bool pic = false;
    bool generic_nl = false;
    // nev
    std::string curve, divisor, g;
    std::vector<double> radii;
    // expfun
    std::string op;
    std::vector<double> point;
    // cover
    int cover_b = 0;
    int k = -1;
    std::string form, g1, g2;
    // plane
    std::string config;
    std::vector<int> degrees;
    int d0max = 10;
    bool relaxed = false;
    bool all = false;
};

struct Context {
    Options opt;
    json doc = json::object();
    json tol_used;  // null unless the command uses a tolerance
};

json load(const std::string& src) {
    if (src == "-") return json::parse(std::cin);
    if (!src.empty() && (src[0] == '{' || src[0] == '[')) return json::parse(src);
    std::ifstream f(src);
    if (!f) throw PreconditionError("cannot read input file " + src);
    return json::parse(f);
}

const json& need(const Context& c, const char* key) {
    if (!c.doc.is_object() || !c.doc.contains(key))
        throw PreconditionError(std::string("schema: missing field \"") + key + "\"");
    return c.doc.at(key);
}

double tolerance(Context& c, double fallback) {
    double t = fallback;
    if (!std::isnan(c.opt.tol))
        t = c.opt.tol;
    else if (c.doc.is_object() && c.doc.contains("tol"))
        t = c.doc.at("tol").get<double>();
    if (!(t > 0)) throw PreconditionError("tolerance must be positive");
    c.tol_used = io::real(t);
    return t;
}

std::vector<double> radii(const Context& c) {
    if (!c.opt.radii.empty()) return c.opt.radii;
    if (c.doc.contains("radii")) return c.doc.at("radii").get<std::vector<double>>();
    if (c.doc.contains("r")) return {c.doc.at("r").get<double>()};
    throw PreconditionError("schema: missing field \"radii\"");
}

json exppoly_out(const ExpPoly& f) { return {{"result", io::to_json(f)}, {"text", io::to_string(f)}}; }

// ---------------------------------------------------------------- expfun

json cmd_expfun(const std::string& leaf, Context& c) {
    ExpPoly f = io::exppoly_from_json(need(c, "f"));
    if (leaf == "eval") {
        std::vector<double> p = c.opt.point;
        if (p.empty()) p = need(c, "point").get<std::vector<double>>();
        if (p.size() != 2) throw PreconditionError("schema: point is [re, im]");
        auto v = evaluate(f, {p[0], p[1]});
        return {{"value", json::array({io::real(v.real()), io::real(v.imag())})}};
    }
    if (leaf == "diff") return exppoly_out(differentiate(f));
    if (leaf == "iszero") return {{"zero", is_zero(f)}, {"canonical", io::to_json(f)}, {"text", io::to_string(f)}};
    // combine
    std::string op = c.opt.op.empty() ? need(c, "op").get<std::string>() : c.opt.op;
    if (op == "scale") return exppoly_out(combine(CombineOp::scale, f, io::complex_from_json(need(c, "scalar"))));
    ExpPoly g = io::exppoly_from_json(need(c, "g"));
    if (op == "add") return exppoly_out(combine(CombineOp::add, f, g));
    if (op == "multiply") return exppoly_out(combine(CombineOp::multiply, f, g));
    throw PreconditionError("schema: op must be add, multiply or scale");
}

// ---------------------------------------------------------------- nev

json growth_json(const GrowthReport& g) {
    return {{"radii", io::reals(g.radii)},
            {"values", io::reals(g.values)},
            {"fitted_slope", io::real(g.fitted_slope)},
            {"fitted_order", io::real(g.fitted_order)},
            {"degenerate", g.degenerate},
            {"log_growth", g.log_growth},
            {"fit", io::to_json(g.log_fit)},
            {"log_fit_relative", io::real(g.log_fit_relative)}};
}

json cmd_nev(const std::string& leaf, Context& c) {
    if (!c.opt.curve.empty()) c.doc["curve"] = load(c.opt.curve);
    if (!c.opt.divisor.empty()) c.doc["divisor"] = load(c.opt.divisor);
    if (!c.opt.g.empty()) c.doc["g"] = load(c.opt.g);
    std::vector<double> rs = radii(c);
    if (leaf == "Tscalar") {
        double tol = tolerance(c, kDefaultTol);
        ExpPoly g = io::exppoly_from_json(need(c, "g"));
        std::vector<double> v;
        for (double r : rs) v.push_back(characteristic_scalar(g, r, tol));
        return {{"radii", io::reals(rs)}, {"values", io::reals(v)}};
    }
    if (leaf == "rational") {
        double tol = tolerance(c, kDefaultTol);
        auto rep = rational_growth_test(io::exppoly_from_json(need(c, "f0")), io::exppoly_from_json(need(c, "f1")),
                                        rs, tol);
        return {{"rational", rep.rational},
                {"numeric_log_growth", rep.numeric_log_growth},
                {"consistent", rep.consistent},
                {"radii", io::reals(rep.radii)},
                {"values", io::reals(rep.T)},
                {"max_log_slope", io::real(rep.max_log_slope)},
                {"slope_bound", io::real(rep.slope_bound)}};
    }
    ProjCurve f = io::curve_from_json(need(c, "curve"));
    if (leaf == "T") {
        double tol = tolerance(c, kDefaultTol);
        std::vector<double> v;
        for (double r : rs) v.push_back(characteristic(f, r, tol));
        return {{"radii", io::reals(rs)}, {"values", io::reals(v)}};
    }
    if (leaf == "order") return growth_json(order_estimate(f, rs, tolerance(c, kDefaultTol)));
    if (leaf == "smt") {
        double tol = tolerance(c, kDefaultTol);
        std::vector<HomDivisor> hs;
        for (const auto& h : need(c, "divisors")) hs.push_back(io::divisor_from_json(h));
        SmtReport rep = smt_check(f, hs, rs, tol);
        json n = json::array();
        for (const auto& row : rep.N) n.push_back(io::reals(row));
        return {{"radii", io::reals(rep.radii)},     {"T", io::reals(rep.T)},
                {"N", n},                            {"values", io::reals(rep.delta)},
                {"fit", io::to_json(rep.fit)},       {"relative_residual", io::real(rep.relative_residual)},
                {"max_excess", io::real(rep.max_excess)}, {"bound_holds", rep.bound_holds},
                {"pass", rep.pass}};
    }
    HomDivisor d = io::divisor_from_json(need(c, "divisor"));
    if (leaf == "N") {
        std::vector<double> v;
        for (double r : rs) v.push_back(counting(f, d, r));
        return {{"radii", io::reals(rs)}, {"values", io::reals(v)}};
    }
    // fmt
    FmtReport rep = fmt_check(f, d, rs, tolerance(c, 1e-6));
    return {{"radii", io::reals(rep.radii)},
            {"T", io::reals(rep.T)},
            {"N", io::reals(rep.N)},
            {"degree", rep.degree},
            {"constant", io::real(rep.constant)},
            {"violation", io::reals(rep.violation)},
            {"defect", io::reals(rep.defect)},
            {"max_violation", io::real(rep.max_violation)},
            {"pass", rep.pass}};
}

// ---------------------------------------------------------------- chern

CIData ci_from(const Context& c) {
    if (c.opt.b.size() != 3) throw PreconditionError("schema: --b needs three degrees b1,b2,b3");
    return {c.opt.a, {c.opt.b[0], c.opt.b[1], c.opt.b[2]}};
}

Main2Flags flags_from(const Context& c) {
    // Pic(P2) = Z, so the plane never needs the flag.
    bool plane = is_plane(normalize(CIData{c.opt.a, {1, 1, 1}}));
    return {c.opt.pic || plane, c.opt.generic_nl};
}

json report_json(const LogChernReport& r) {
    json e = json::array(), p = json::array();
    for (const auto& x : r.euler_components) e.push_back(io::to_json(x));
    for (const auto& x : r.pairwise_intersections) p.push_back(io::to_json(x));
    return {{"euler_surface", io::to_json(r.euler_surface)}, {"euler_components", e},
            {"euler_C", io::to_json(r.euler_C)},             {"gamma_sq", io::to_json(r.gamma_sq)},
            {"c1sq_minus_c2", io::to_json(r.c1sq_minus_c2)}, {"det_estar_degree", io::to_json(r.det_estar_degree)},
            {"pairwise_intersections", p}};
}

json verdict_json(const TheoremVerdict& v) {
    return {{"condition_i_pic", v.condition_i_pic},
            {"condition_ii", v.condition_ii},
            {"condition_iii", v.condition_iii},
            {"condition_iii_equality", v.condition_iii_equality},
            {"applicable", v.applicable},
            {"main2_case", to_string(v.main2_case)},
            {"mt_applicable", v.mt_applicable},
            {"mt1_applicable", v.mt1_applicable},
            {"notes", v.notes}};
}

std::string enumerate_csv(const std::vector<ConfigRow>& rows) {
    std::ostringstream s;
    s << "b1,b2,b3,c1sq_minus_c2,det_deg,case\n";
    for (const auto& r : rows)
        s << r.b[0] << ',' << r.b[1] << ',' << r.b[2] << ',' << r.report.c1sq_minus_c2.get_str() << ','
          << r.report.det_estar_degree.get_str() << ',' << to_string(r.verdict.main2_case) << '\n';
    return s.str();
}

json cmd_chern(const std::string& leaf, Context& c) {
    if (leaf == "enumerate") {
        if (c.opt.bmax < 1) throw PreconditionError("--bmax must be at least 1");
        auto rows = enumerate_configs(c.opt.a, c.opt.bmax, flags_from(c));
        json out = json::array();
        for (const auto& r : rows) {
            json row = verdict_json(r.verdict);
            row.erase("notes");
            row["b"] = r.b;
            row["c1sq_minus_c2"] = io::to_json(r.report.c1sq_minus_c2);
            row["det_estar_degree"] = io::to_json(r.report.det_estar_degree);
            out.push_back(row);
        }
        return {{"a", c.opt.a}, {"bmax", c.opt.bmax}, {"rows", out}};
    }
    if (leaf == "identity") {
        if (c.opt.b.size() != 3) throw PreconditionError("schema: --b needs three degrees b1,b2,b3");
        auto r = identity_check_main2c({c.opt.b[0], c.opt.b[1], c.opt.b[2]});
        return {{"ok", r.ok},
                {"prop_num", io::to_json(r.prop_num)},
                {"expansion1", io::to_json(r.expansion1)},
                {"expansion2", io::to_json(r.expansion2)}};
    }
    CIData ci = ci_from(c);
    if (leaf == "invariants") return report_json(invariants(ci));
    if (leaf == "check") return verdict_json(theorem_main_check(ci, flags_from(c).pic_is_Z));
    return verdict_json(classify_main2(ci, flags_from(c)));
}

// ---------------------------------------------------------------- borel

json outcome_json(const AnalysisOutcome& o) {
    json subsets = json::array();
    for (const auto& s : o.subsets)
        subsets.push_back({{"indices", s.indices},
                           {"exponent", io::to_json(s.exponent)},
                           {"lambda", io::to_json(s.lambda)},
                           {"gamma", io::to_json(s.gamma)},
                           {"factors", s.factors}});
    json out{{"kind", to_string(o.kind)}, {"factors", o.factors}, {"notes", o.notes}};
    if (o.kind == OutcomeKind::case2_proportional) {
        out["lambda"] = io::to_json(o.lambda);
        out["gamma"] = io::to_json(o.gamma);
        out["omega0"] = o.omega0;
    }
    if (!subsets.empty()) out["subsets"] = subsets;
    return out;
}

json case1_json(const Case1Report& r) {
    return {{"L", r.L},
            {"syntactic", r.syntactic},
            {"refuted", r.refuted},
            {"reason", r.reason},
            {"radii", io::reals(r.radii)},
            {"T", io::reals(r.T)},
            {"N_budget", io::reals(r.N_budget)},
            {"delta", io::reals(r.delta)},
            {"delta_fit", io::to_json(r.delta_fit)},
            {"delta_relative_residual", io::real(r.delta_relative_residual)},
            {"log_fit", io::to_json(r.log_fit)},
            {"log_fit_relative", io::real(r.log_fit_relative)},
            {"envelope_ratio", io::real(r.envelope_ratio)}};
}

json cmd_borel(const std::string& leaf, Context& c) {
    const json& src = c.doc.contains("sum") ? c.doc.at("sum") : c.doc;
    if (leaf == "case1") {
        std::vector<double> rs = c.opt.radii.empty() ? std::vector<double>{4, 8, 16, 32} : c.opt.radii;
        if (c.opt.radii.empty() && c.doc.contains("radii")) rs = c.doc.at("radii").get<std::vector<double>>();
        double tol = tolerance(c, kDefaultTol);
        if (c.doc.contains("psi")) {
            std::vector<ExpPoly> psi;
            for (const auto& p : c.doc.at("psi")) psi.push_back(io::exppoly_from_json(p));
            return case1_json(case1_refute(psi, rs, tol));
        }
        return case1_json(case1_refute(io::expsum_from_json(src), rs, tol));
    }
    ExpSum sum = io::expsum_from_json(src);
    if (leaf == "realize") return exppoly_out(realize(sum));
    if (leaf == "partition") {
        json out = json::array();
        for (const auto& cl : partition_classes(sum))
            out.push_back({{"exponent", io::to_json(cl.exponent)},
                           {"text", io::to_string(cl.exponent)},
                           {"indices", cl.indices}});
        return {{"classes", out}};
    }
    if (leaf == "subsets") {
        json out = json::array();
        for (const auto& s : minimal_vanishing_subsets(sum)) out.push_back(io::to_json(s));
        return {{"subsets", out}};
    }
    if (leaf == "case2") return outcome_json(case2_conclude(sum));
    return outcome_json(degeneracy_pipeline(sum));
}

// ---------------------------------------------------------------- cover

json cmd_cover(const std::string& leaf, Context& c) {
    if (!c.opt.form.empty()) c.doc["form"] = load(c.opt.form);
    if (!c.opt.g1.empty()) c.doc["g1"] = load(c.opt.g1);
    if (!c.opt.g2.empty()) c.doc["g2"] = load(c.opt.g2);
    SymForm form = io::symform_from_json(need(c, "form"));
    auto cover = [&] {
        int b = c.opt.cover_b > 0 ? c.opt.cover_b : need(c, "b").get<int>();
        return CyclicCover{b};
    };
    if (leaf == "log") return {{"form", io::to_json(express_log_basis(form))}};
    if (leaf == "plain") return {{"form", io::to_json(express_plain_basis(form))}};
    if (leaf == "norm") return {{"form", io::to_json(norm_form(form, cover()))}};
    if (leaf == "pushdown") return {{"form", io::to_json(push_down(form, cover()))}};
    if (leaf == "pullup") return {{"form", io::to_json(pull_up(form, cover()))}};
    if (leaf == "pullback") {
        int k = c.opt.k >= 0 ? c.opt.k : need(c, "k").get<int>();
        return {{"form", io::to_json(deck_pullback(form, k, cover()))}};
    }
    // check
    auto r = annihilation_check(form, io::exppoly_from_json(need(c, "g1")), io::exppoly_from_json(need(c, "g2")));
    return {{"annihilates", r.annihilates},
            {"residual", io::to_json(r.residual)},
            {"residual_text", io::to_string(r.residual, "eta")},
            {"denominator", io::to_json(r.denominator)}};
}

// ---------------------------------------------------------------- plane

json intersection_json(const Intersection& in) {
    json pts = json::array();
    for (const auto& p : in.points) pts.push_back(io::to_json(p));
    return {{"points", pts}, {"total_multiplicity", in.total_multiplicity}};
}

json verdict_json(const CaseVerdict& v) {
    json sols = json::array();
    for (const auto& s : v.solutions) sols.push_back({{"m_P", s[0]}, {"m_Q", s[1]}});
    auto one_based = [](const std::vector<int>& cs) {
        std::vector<int> out;
        for (int x : cs) out.push_back(x + 1);
        return out;
    };
    json out{{"case", v.c.to_string()},   {"d0", v.c.d0},         {"p_curves", one_based(v.c.p_curves)},
             {"q_curves", one_based(v.c.q_curves)}, {"possible", v.possible}, {"solutions", sols}};
    if (!v.possible) out["certificate"] = v.certificate;
    return out;
}

json cmd_plane(const std::string& leaf, Context& c) {
    std::uint64_t seed = c.opt.seed;
    if (leaf == "engine") {
        std::vector<int> d = c.opt.degrees;
        if (d.empty() && c.doc.contains("degrees")) d = c.doc.at("degrees").get<std::vector<int>>();
        if (d.size() != 3) throw PreconditionError("schema: --degrees needs three degrees");
        EngineReport rep = two_puncture_case_engine({d[0], d[1], d[2]}, c.opt.d0max, c.opt.relaxed);
        json surv = json::array(), all = json::array();
        for (const auto& v : rep.survivors) surv.push_back(verdict_json(v));
        size_t impossible = 0;
        for (const auto& v : rep.verdicts) {
            impossible += v.possible ? 0 : 1;
            if (c.opt.all) all.push_back(verdict_json(v));
        }
        json out{{"degrees", d},
                 {"d0_max", c.opt.d0max},
                 {"cases", rep.cases},
                 {"impossible", impossible},
                 {"survivors", surv}};
        if (c.opt.all) out["verdicts"] = all;
        return out;
    }
    if (!c.opt.config.empty()) c.doc = load(c.opt.config);
    if (leaf == "intersect") {
        const json& cs = need(c, "curves");
        if (!cs.is_array() || cs.size() != 2) throw PreconditionError("schema: intersect needs two curves");
        return intersection_json(intersection_points(io::plane_curve_from_json(cs[0]), io::plane_curve_from_json(cs[1]),
                                                     seed));
    }
    if (leaf == "smooth") {
        json out = json::array();
        for (const auto& cj : need(c, "curves")) {
            SmoothnessReport s = smoothness(io::plane_curve_from_json(cj), seed);
            json pts = json::array();
            for (const auto& p : s.singular_points) pts.push_back(io::to_json(p));
            out.push_back({{"smooth", s.smooth}, {"singular_points", pts}, {"note", s.note}});
        }
        return {{"curves", out}};
    }
    Configuration conf = io::configuration_from_json(c.doc);
    if (leaf == "nc") {
        NormalCrossingsReport r = normal_crossings(conf, seed);
        json pairs = json::array();
        for (const auto& p : r.pairs) pairs.push_back(intersection_json(p));
        return {{"pass", r.pass}, {"smooth", r.smooth}, {"pairs", pairs}, {"failures", r.failures}};
    }
    ExclusionReport r = quadric_line_exclusion(conf, seed);
    json lines = json::array();
    for (const auto& l : r.lines) {
        json coeffs = json::array();
        if (l.exact)
            for (const auto& x : l.line) coeffs.push_back(io::to_json(x));
        lines.push_back({{"line", l.to_string()},
                         {"exact", l.exact},
                         {"coeffs", coeffs},
                         {"quadric", l.quadric + 1},
                         {"others", {l.others[0] + 1, l.others[1] + 1}},
                         {"touch", {io::to_json(l.touch[0]), io::to_json(l.touch[1])}}});
    }
    return {{"pass", r.pass}, {"vacuous", r.vacuous}, {"lines", lines}, {"notes", r.notes}};
}

// ---------------------------------------------------------------- golden files

std::string golden_name(const std::vector<std::string>& args) {
    std::string name;
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--golden" || a == "--output") {
            ++i;
            continue;
        }
        if (a == "--update") continue;
        std::string part = a;
        if (part.find('/') != std::string::npos && part[0] != '{' && part[0] != '[')
            part = std::filesystem::path(part).filename().string();
        for (char& ch : part)
            if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '.' && ch != ',' && ch != '=' && ch != '-')
                ch = '_';
        while (!part.empty() && part.front() == '-') part.erase(part.begin());
        if (part.empty()) continue;
        if (!name.empty()) name += "_";
        name += part;
    }
    return name;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

// Writes (update) or compares the golden file; returns an error message on mismatch.
std::string golden(const Options& opt, const std::filesystem::path& file, const std::string& content) {
    if (opt.update) {
        std::filesystem::create_directories(file.parent_path());
        std::ofstream(file, std::ios::binary) << content;
        return {};
    }
    if (!std::filesystem::exists(file)) return "golden file " + file.string() + " does not exist (use --update)";
    if (read_file(file) != content) return "output differs from golden file " + file.string();
    return {};
}

std::string error_type(const std::exception& e) {
    if (dynamic_cast<const PreconditionError*>(&e)) return "PreconditionError";
    if (dynamic_cast<const OverflowError*>(&e)) return "OverflowError";
    if (dynamic_cast<const ConvergenceError*>(&e)) return "ConvergenceError";
    if (dynamic_cast<const UnsupportedError*>(&e)) return "UnsupportedError";
    if (dynamic_cast<const json::exception*>(&e)) return "SchemaError";
    return "Error";
}

}  // namespace

CommandEnvelope run(const std::vector<std::string>& args) {
    CommandEnvelope env;
    Context ctx;
    Options& o = ctx.opt;

    CLI::App app{"Exact and numeric checks for hyperbolicity of complements of plane-curve configurations", "hyp"};
    app.require_subcommand(1);
    app.add_option("--input", o.input, "input JSON file, or - for stdin");
    app.add_option("--output", o.output, "output file, or - for stdout");
    app.add_option("--tol", o.tol, "tolerance (command default when omitted)");
    app.add_option("--seed", o.seed, "seed for every random choice")->capture_default_str();
    app.add_option("--golden", o.golden, "golden directory: compare output against it");
    app.add_flag("--update", o.update, "with --golden: write the golden file instead of comparing");

    std::map<std::string, std::vector<std::string>> leaves{
        {"expfun", {"eval", "diff", "combine", "iszero"}},
        {"nev", {"T", "Tscalar", "N", "order", "fmt", "smt", "rational"}},
        {"chern", {"invariants", "check", "classify", "identity", "enumerate"}},
        {"borel", {"analyze", "realize", "partition", "subsets", "case1", "case2"}},
        {"cover", {"pullback", "norm", "log", "plain", "pushdown", "pullup", "check"}},
        {"plane", {"intersect", "smooth", "nc", "engine", "exclusion"}}};
    std::map<std::string, CLI::App*> groups;
    for (const auto& [name, subs] : leaves) {
        CLI::App* g = app.add_subcommand(name, name + " commands")->require_subcommand(1)->fallthrough();
        for (const auto& s : subs) g->add_subcommand(s)->fallthrough();
        groups[name] = g;
    }
    groups["expfun"]->add_option("--op", o.op, "combine operation: add, multiply or scale");
    groups["expfun"]->add_option("--point", o.point, "evaluation point re,im")->delimiter(',');
    groups["nev"]->add_option("--curve", o.curve, "curve JSON (file or inline)");
    groups["nev"]->add_option("--divisor", o.divisor, "divisor JSON (file or inline)");
    groups["nev"]->add_option("--g", o.g, "ExpPoly JSON (file or inline)");
    for (const char* gname : {"nev", "borel"})
        groups[gname]->add_option("--radii", o.radii, "radii r1,r2,...")->delimiter(',');
    groups["chern"]->add_option("--a", o.a, "hypersurface degrees a1,...,ar (default 1: the plane)")->delimiter(',');
    groups["chern"]->add_option("--b", o.b, "curve degrees b1,b2,b3")->delimiter(',');
    groups["chern"]->add_option("--bmax", o.bmax, "largest curve degree for enumerate");
    groups["chern"]->add_flag("--pic", o.pic, "assume Pic = Z (automatic for the plane)");
    groups["chern"]->add_flag("--generic-nl", o.generic_nl, "assume a Noether-Lefschetz generic hypersurface");
    groups["cover"]->add_option("--b", o.cover_b, "branching order");
    groups["cover"]->add_option("--k", o.k, "deck transformation index");
    groups["cover"]->add_option("--form", o.form, "SymForm JSON (file or inline)");
    groups["cover"]->add_option("--g1", o.g1, "ExpPoly JSON for xi1 (file or inline)");
    groups["cover"]->add_option("--g2", o.g2, "ExpPoly JSON for xi2 (file or inline)");
    groups["plane"]->add_option("--config", o.config, "configuration JSON (file or inline)");
    groups["plane"]->add_option("--degrees", o.degrees, "engine degrees d1,d2,d3")->delimiter(',');
    groups["plane"]->add_option("--d0max", o.d0max, "largest degree of the candidate curve");
    groups["plane"]->add_flag("--relaxed", o.relaxed, "skip the degree hypothesis");
    groups["plane"]->add_flag("--all", o.all, "list every verdict, not only survivors");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        env.usage = app.help();
        env.text = env.usage;
        return env;
    } catch (const CLI::ParseError& e) {
        env.exit_code = 2;
        env.usage = std::string(e.what()) + "\n" + app.help();
        env.text = env.usage;
        return env;
    }
    env.output_path = o.output;
    std::string group, leaf;
    for (auto* g : app.get_subcommands()) {
        group = g->get_name();
        for (auto* l : g->get_subcommands()) leaf = l->get_name();
    }
    env.subcommand = {group, leaf};

    json result;
    try {
        if (!o.input.empty()) ctx.doc = load(o.input);
        env.input = ctx.doc;
        if (group == "expfun") result = cmd_expfun(leaf, ctx);
        else if (group == "nev") result = cmd_nev(leaf, ctx);
        else if (group == "chern") result = cmd_chern(leaf, ctx);
        else if (group == "borel") result = cmd_borel(leaf, ctx);
        else if (group == "cover") result = cmd_cover(leaf, ctx);
        else result = cmd_plane(leaf, ctx);
    } catch (const std::exception& e) {
        result = {{"error", {{"type", error_type(e)}, {"message", e.what()}}}};
        env.exit_code = 1;
    }
    json out{{"command", group + " " + leaf}, {"meta", {{"version", kVersion}, {"seed", o.seed}, {"tol", ctx.tol_used}}}};
    for (auto& [k, v] : result.items()) out[k] = v;
    env.output = out;
    env.text = out.dump(2) + "\n";

    if (!o.golden.empty() && env.exit_code == 0) {
        std::string base = golden_name(args);
        std::string msg;
        if (group == "chern" && leaf == "enumerate") {
            auto rows = enumerate_configs(o.a, o.bmax, flags_from(ctx));
            msg = golden(o, std::filesystem::path(o.golden) / (base + ".csv"), enumerate_csv(rows));
        }
        if (msg.empty()) msg = golden(o, std::filesystem::path(o.golden) / (base + ".json"), env.text);
        if (!msg.empty()) {
            env.exit_code = 1;
            env.output["error"] = {{"type", "GoldenMismatch"}, {"message", msg}};
            env.text = env.output.dump(2) + "\n";
        }
    }
    return env;
}

int main_entry(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    CommandEnvelope env = run(args);
    if (env.exit_code == 2) {
        std::cerr << env.text;
        return 2;
    }
    if (env.output_path.empty() || env.output_path == "-") {
        std::cout << env.text;
    } else {
        std::ofstream f(env.output_path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << env.output_path << "\n";
            return 1;
        }
        f << env.text;
    }
    return env.exit_code;
}

}  // namespace hyp::cli
