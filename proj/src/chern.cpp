#include "hyp/chern.hpp"

#include <algorithm>

namespace hyp {

namespace {

struct Derived {
    Integer A = 1;
    Integer a = 0;
    Integer r = 0;
    Integer b = 0;
    Integer sigma = 0;  // sum_{i<j} b_i b_j
};

Derived derive(const CIData& ci) {
    Derived d;
    d.r = static_cast<long>(ci.a.size());
    for (long x : ci.a) {
        d.A *= x;
        d.a += x;
    }
    for (long x : ci.b) d.b += x;
    d.sigma = Integer(ci.b[0]) * ci.b[1] + Integer(ci.b[0]) * ci.b[2] + Integer(ci.b[1]) * ci.b[2];
    return d;
}

bool main2c_degrees(std::array<long, 3> b) {
    std::sort(b.begin(), b.end());
    bool all_two = b[0] >= 2 && b[2] >= 3;
    bool with_line = b[0] == 1 && b[1] >= 3 && b[2] >= 4;
    return all_two || with_line;
}

}  // namespace

CIData normalize(CIData ci) {
    if (ci.a.empty()) ci.a = {1};
    for (long x : ci.a)
        if (x < 1) throw PreconditionError("hypersurface degrees must be positive");
    for (long x : ci.b)
        if (x < 1) throw PreconditionError("curve degrees must be positive");
    return ci;
}

bool is_plane(const CIData& ci) {
    return std::all_of(ci.a.begin(), ci.a.end(), [](long x) { return x == 1; });
}

std::string to_string(Main2Case c) {
    switch (c) {
        case Main2Case::a: return "a";
        case Main2Case::b: return "b";
        case Main2Case::c: return "c";
        case Main2Case::none: return "none";
    }
    return "none";
}

LogChernReport invariants(const CIData& in) {
    CIData ci = normalize(in);
    Derived d = derive(ci);
    LogChernReport rep;
    Integer t = d.a - d.r - 1;
    rep.euler_surface = d.A * (2 + t * t);
    Integer sum_e = 0;
    for (size_t j = 0; j < 3; ++j) {
        Integer bj = ci.b[j];
        rep.euler_components[j] = d.A * bj * (3 + d.r - d.a - bj);
        sum_e += rep.euler_components[j];
    }
    rep.pairwise_intersections = {d.A * ci.b[0] * ci.b[1], d.A * ci.b[0] * ci.b[2],
                                  d.A * ci.b[1] * ci.b[2]};
    rep.euler_C = sum_e - rep.pairwise_intersections[0] - rep.pairwise_intersections[1] -
                  rep.pairwise_intersections[2];
    Integer g = d.a + d.b - d.r - 3;
    rep.gamma_sq = d.A * g * g;
    rep.c1sq_minus_c2 = d.A * ((d.a - d.r - 3) * (d.b - 4) - 6 + d.sigma);
    rep.det_estar_degree = g;
    return rep;
}

TheoremVerdict theorem_main_check(const CIData& in, bool pic_is_Z) {
    CIData ci = normalize(in);
    Derived d = derive(ci);
    TheoremVerdict v;
    v.condition_i_pic = pic_is_Z;
    v.condition_ii = (d.a - d.r - 3) * (d.b - 4) + d.sigma > 6;
    v.condition_iii = d.a + d.b >= d.r + 3;
    v.condition_iii_equality = d.a + d.b == d.r + 3;
    v.applicable = v.condition_i_pic && v.condition_ii && v.condition_iii;
    if (v.condition_iii_equality) v.notes.emplace_back("condition iii holds with equality: det(E*) has degree 0");
    if (!pic_is_Z) v.notes.emplace_back("Pic = Z not asserted");
    return v;
}

TheoremVerdict classify_main2(const CIData& in, const Main2Flags& flags) {
    CIData ci = normalize(in);
    Derived d = derive(ci);
    TheoremVerdict v = theorem_main_check(ci, flags.pic_is_Z);
    bool plane = is_plane(ci);
    bool case_a = flags.pic_is_Z && d.a >= d.r + 3 && d.b >= 5;
    bool case_b = ci.a.size() == 1 && flags.generic_NL && ci.a[0] >= 4 && d.b >= 5;
    bool case_c = plane && main2c_degrees(ci.b);
    if (case_c) v.notes.emplace_back("case c applies");
    if (case_a) v.notes.emplace_back("case a applies");
    if (case_b) v.notes.emplace_back("case b applies");
    v.main2_case = case_c ? Main2Case::c : case_a ? Main2Case::a : case_b ? Main2Case::b : Main2Case::none;
    std::array<long, 3> s = ci.b;
    std::sort(s.begin(), s.end());
    v.mt_applicable = plane && s[0] >= 2 && s[2] >= 3;
    v.mt1_applicable = ci.a.size() == 1 && flags.generic_NL && ci.a[0] >= 5 && d.b >= 5;
    return v;
}

TheoremVerdict full_verdict(const CIData& ci, const Main2Flags& flags) { return classify_main2(ci, flags); }

IdentityCheck identity_check_main2c(const std::array<long, 3>& bb) {
    Integer b1 = bb[0], b2 = bb[1], b3 = bb[2];
    Integer b = b1 + b2 + b3;
    IdentityCheck c;
    c.prop_num = -3 * (b - 4) - 6 + b1 * b2 + b1 * b3 + b2 * b3;
    c.expansion1 = (b1 - 2) * (b2 - 2) + (b1 - 2) * (b3 - 2) + (b2 - 2) * (b3 - 2) + b - 6;
    c.expansion2 = (b1 - 1) * (b2 - 1) + (b1 - 1) * (b3 - 2) + (b2 - 3) * (b3 - 4) + (2 * b2 + b3) - 9;
    c.ok = c.prop_num == c.expansion1 && c.prop_num == c.expansion2;
    return c;
}

std::vector<ConfigRow> enumerate_configs(const std::vector<long>& a, long b_max, const Main2Flags& flags) {
    if (b_max < 1) throw PreconditionError("b_max must be positive");
    std::vector<ConfigRow> rows;
    for (long b1 = 1; b1 <= b_max; ++b1)
        for (long b2 = b1; b2 <= b_max; ++b2)
            for (long b3 = b2; b3 <= b_max; ++b3) {
                CIData ci{a, {b1, b2, b3}};
                rows.push_back({ci.b, invariants(ci), full_verdict(ci, flags)});
            }
    return rows;
}

}  // namespace hyp
