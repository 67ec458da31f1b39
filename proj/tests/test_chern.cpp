#include <algorithm>

#include "doctest.h"
#include "hyp/chern.hpp"

using namespace hyp;

namespace {

const std::vector<long> kPlane{1};

const ConfigRow* find_row(const std::vector<ConfigRow>& rows, std::array<long, 3> b) {
    for (const auto& r : rows)
        if (r.b == b) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("invariants examples") {
    LogChernReport p = invariants({kPlane, {2, 2, 2}});
    CHECK(p.euler_surface == 3);
    CHECK(p.c1sq_minus_c2 == 0);
    CHECK(p.det_estar_degree == 3);

    LogChernReport q = invariants({{5}, {1, 1, 3}});
    CHECK(q.euler_surface == 55);
    CHECK(q.c1sq_minus_c2 == 10);

    CHECK(invariants({kPlane, {1, 3, 4}}).c1sq_minus_c2 == 1);
    CHECK(invariants({{}, {2, 2, 3}}).c1sq_minus_c2 == 1);
}

TEST_CASE("theorem_main_check examples") {
    TheoremVerdict v = theorem_main_check({kPlane, {2, 2, 3}}, true);
    CHECK(v.condition_ii);
    CHECK(v.condition_iii);
    CHECK(v.applicable);
    CHECK_FALSE(theorem_main_check({kPlane, {2, 2, 2}}, true).condition_ii);
    TheoremVerdict w = theorem_main_check({{4}, {1, 2, 2}}, true);
    CHECK(w.condition_ii);
    CHECK(w.condition_iii);
    CHECK(w.applicable);
    CHECK_FALSE(theorem_main_check({kPlane, {2, 2, 3}}, false).applicable);
}

TEST_CASE("condition iii equality is flagged") {
    // a + b = r + 3 with a = [1], r = 1: b = 3.
    TheoremVerdict v = theorem_main_check({kPlane, {1, 1, 1}}, true);
    CHECK(v.condition_iii);
    CHECK(v.condition_iii_equality);
}

TEST_CASE("classify_main2 examples") {
    CHECK(classify_main2({kPlane, {2, 3, 2}}, {}).main2_case == Main2Case::c);
    CHECK(classify_main2({{4}, {1, 1, 3}}, {false, true}).main2_case == Main2Case::b);
    CHECK(classify_main2({kPlane, {1, 2, 4}}, {true, false}).main2_case == Main2Case::none);
    CHECK(invariants({kPlane, {1, 2, 4}}).c1sq_minus_c2 == -1);
    CHECK(classify_main2({{6}, {1, 2, 2}}, {true, false}).main2_case == Main2Case::a);
}

TEST_CASE("case c requires the plane") {
    for (long a1 = 2; a1 <= 6; ++a1)
        CHECK(classify_main2({{a1}, {2, 2, 3}}, {true, true}).main2_case != Main2Case::c);
    CHECK(classify_main2({{1, 1}, {2, 2, 3}}, {}).main2_case == Main2Case::c);
}

TEST_CASE("identity_check_main2c examples") {
    IdentityCheck a = identity_check_main2c({2, 2, 2});
    CHECK(a.ok);
    CHECK(a.prop_num == 0);
    IdentityCheck b = identity_check_main2c({1, 3, 4});
    CHECK(b.ok);
    CHECK(b.expansion2 == 1);
    IdentityCheck c = identity_check_main2c({5, 5, 5});
    CHECK(c.ok);
    CHECK(c.expansion1 == 36);
}

TEST_CASE("enumerate_configs examples") {
    auto rows = enumerate_configs(kPlane, 3, {true, false});
    CHECK(rows.size() == 10);
    CHECK(std::is_sorted(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.b < y.b; }));
    for (std::array<long, 3> b : {std::array<long, 3>{2, 2, 3}, {2, 3, 3}, {3, 3, 3}})
        CHECK(find_row(rows, b)->verdict.main2_case == Main2Case::c);
    CHECK(find_row(rows, {2, 2, 2})->verdict.main2_case == Main2Case::none);

    auto rows4 = enumerate_configs(kPlane, 4, {true, false});
    CHECK(find_row(rows4, {1, 3, 4})->verdict.main2_case == Main2Case::c);

    auto rows5 = enumerate_configs({5}, 2, {false, true});
    CHECK(find_row(rows5, {1, 1, 3}) == nullptr);
    CHECK(find_row(rows5, {1, 2, 2})->verdict.main2_case == Main2Case::b);
}

TEST_CASE("property: internal identity holds exhaustively") {
    std::vector<std::vector<long>> surfaces;
    for (long a1 = 1; a1 <= 6; ++a1) {
        surfaces.push_back({a1});
        for (long a2 = a1; a2 <= 6; ++a2) {
            surfaces.push_back({a1, a2});
            for (long a3 = a2; a3 <= 6; ++a3) surfaces.push_back({a1, a2, a3});
        }
    }
    long failures = 0;
    for (const auto& a : surfaces)
        for (long b1 = 1; b1 <= 10; ++b1)
            for (long b2 = 1; b2 <= 10; ++b2)
                for (long b3 = 1; b3 <= 10; ++b3) {
                    LogChernReport r = invariants({a, {b1, b2, b3}});
                    if (r.c1sq_minus_c2 != r.gamma_sq - r.euler_surface + r.euler_C) ++failures;
                }
    CHECK(failures == 0);
}

TEST_CASE("property: plane curve Euler numbers and adjunction") {
    for (long bj = 1; bj <= 10; ++bj) {
        LogChernReport r = invariants({kPlane, {bj, 1, 1}});
        CHECK(r.euler_components[0] == bj * (3 - bj));
        CHECK(r.euler_components[0] == 2 - (bj - 1) * (bj - 2));
        CHECK(r.det_estar_degree == bj + 2 - 3);
    }
}

TEST_CASE("property: identity_check_main2c exhaustive") {
    bool all = true;
    for (long b1 = 1; b1 <= 20; ++b1)
        for (long b2 = 1; b2 <= 20; ++b2)
            for (long b3 = 1; b3 <= 20; ++b3) all = all && identity_check_main2c({b1, b2, b3}).ok;
    CHECK(all);
}

TEST_CASE("property: theorem_main_check is permutation invariant") {
    for (long b1 = 1; b1 <= 6; ++b1)
        for (long b2 = 1; b2 <= 6; ++b2)
            for (long b3 = 1; b3 <= 6; ++b3) {
                std::array<long, 3> b{b1, b2, b3};
                TheoremVerdict base = theorem_main_check({{3}, b}, true);
                std::sort(b.begin(), b.end());
                do {
                    TheoremVerdict v = theorem_main_check({{3}, b}, true);
                    CHECK(v.condition_ii == base.condition_ii);
                    CHECK(v.condition_iii == base.condition_iii);
                } while (std::next_permutation(b.begin(), b.end()));
            }
}

TEST_CASE("invalid degrees are rejected") {
    CHECK_THROWS_AS(invariants({{0}, {1, 1, 1}}), PreconditionError);
    CHECK_THROWS_AS(invariants({kPlane, {0, 1, 1}}), PreconditionError);
}
