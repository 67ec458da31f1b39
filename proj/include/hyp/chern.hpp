#pragma once

#include <array>
#include <string>
#include <vector>

#include "hyp/exact.hpp"

namespace hyp {

/// Complete-intersection surface of multidegree a in P_{r+2}, with a three-component curve
/// of degrees b. The plane is a = [1]; an empty list is normalized to that.
struct CIData {
    std::vector<long> a;
    std::array<long, 3> b{};
};

CIData normalize(CIData ci);
bool is_plane(const CIData& ci);

struct LogChernReport {
    Integer euler_surface;
    std::array<Integer, 3> euler_components;
    Integer euler_C;
    Integer gamma_sq;
    Integer c1sq_minus_c2;
    Integer det_estar_degree;
    std::array<Integer, 3> pairwise_intersections;  // (1,2), (1,3), (2,3)
};

enum class Main2Case { a, b, c, none };
std::string to_string(Main2Case c);

struct TheoremVerdict {
    bool condition_i_pic = false;
    bool condition_ii = false;
    bool condition_iii = false;
    bool condition_iii_equality = false;  // a+b = r+3: det(E*) has degree zero
    bool applicable = false;              // i and ii and iii
    Main2Case main2_case = Main2Case::none;
    bool mt_applicable = false;           // plane with all b_j >= 2, some b_j >= 3
    bool mt1_applicable = false;          // generic surface in P3 of degree >= 5 with b >= 5
    std::vector<std::string> notes;
};

struct Main2Flags {
    bool pic_is_Z = false;
    bool generic_NL = false;
};

LogChernReport invariants(const CIData& ci);
TheoremVerdict theorem_main_check(const CIData& ci, bool pic_is_Z);
TheoremVerdict classify_main2(const CIData& ci, const Main2Flags& flags);

struct IdentityCheck {
    bool ok;
    Integer prop_num;
    Integer expansion1;
    Integer expansion2;
};
IdentityCheck identity_check_main2c(const std::array<long, 3>& b);

struct ConfigRow {
    std::array<long, 3> b;
    LogChernReport report;
    TheoremVerdict verdict;  // theorem_main_check merged with classify_main2
};

/// All 1 <= b1 <= b2 <= b3 <= b_max, lexicographic. Requires b_max >= 1.
std::vector<ConfigRow> enumerate_configs(const std::vector<long>& a, long b_max, const Main2Flags& flags);

/// Verdict used for tables: conditions i to iii plus the main2 case.
TheoremVerdict full_verdict(const CIData& ci, const Main2Flags& flags);

}  // namespace hyp
