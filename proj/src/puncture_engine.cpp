#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "hyp/error.hpp"
#include "hyp/planeconf.hpp"

namespace hyp {

namespace {

std::string curve_list(const std::vector<int>& cs) {
    std::string s;
    for (int c : cs) s += (s.empty() ? "C" : ",C") + std::to_string(c + 1);
    return s;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

bool satisfies(const MultiplicityRelation& r, int mp, int mq) {
    long lhs = 0;
    if (r.at_p) lhs += mp + (r.tangent_p ? 1 : 0);
    if (r.at_q) lhs += mq + (r.tangent_q ? 1 : 0);
    return r.equality ? lhs == r.rhs : lhs <= r.rhs;
}

std::string relation_string(const MultiplicityRelation& r) {
    std::string lhs;
    auto add = [&](const char* m, bool tangent) {
        if (!lhs.empty()) lhs += " + ";
        lhs += m;
        if (tangent) lhs += " + 1";
    };
    if (r.at_p) add("m_P", r.tangent_p);
    if (r.at_q) add("m_Q", r.tangent_q);
    if (lhs.empty()) lhs = "0";
    return "C" + std::to_string(r.curve + 1) + ": " + lhs + (r.equality ? " = " : " <= ") + std::to_string(r.rhs);
}

std::vector<std::array<int, 2>> solve(const std::vector<MultiplicityRelation>& rels, int d0) {
    std::vector<std::array<int, 2>> out;
    for (int mp = 1; mp <= d0; ++mp)
        for (int mq = 1; mq <= d0; ++mq) {
            if (!fulton_bound(d0, mp, mq) || !star_condition(d0, mp, mq)) continue;
            if (std::all_of(rels.begin(), rels.end(), [&](const auto& r) { return satisfies(r, mp, mq); }))
                out.push_back({mp, mq});
        }
    return out;
}

std::vector<MultiplicityRelation> relations(const PunctureCase& c, const std::array<int, 3>& degrees) {
    std::vector<MultiplicityRelation> rels;
    for (int i = 0; i < 3; ++i) {
        MultiplicityRelation r;
        r.curve = i;
        r.at_p = contains(c.p_curves, i);
        r.at_q = contains(c.q_curves, i);
        r.tangent_p = r.at_p && c.tangent_p[static_cast<size_t>(i)];
        r.tangent_q = r.at_q && c.tangent_q[static_cast<size_t>(i)];
        r.rhs = static_cast<long>(degrees[static_cast<size_t>(i)]) * c.d0;
        r.equality = !r.tangent_p && !r.tangent_q;
        rels.push_back(r);
    }
    return rels;
}

std::string certificate(const CaseVerdict& v) {
    int d0 = v.c.d0;
    for (const auto& r : v.relations) {
        if (!r.at_p && !r.at_q)
            return "C" + std::to_string(r.curve + 1) + " misses P and Q, yet A meets it with total multiplicity " +
                   std::to_string(r.rhs);
        if (r.equality && r.at_p != r.at_q) {
            const char* m = r.at_p ? "m_P" : "m_Q";
            if (r.rhs > d0)
                return relation_string(r) + " forces " + m + " = " + std::to_string(r.rhs) + " > d0 = " +
                       std::to_string(d0);
            if (r.rhs == d0 && d0 > 1)
                return relation_string(r) + " forces " + m + " = d0, excluded by m < d0";
        }
    }
    std::string s;
    for (const auto& r : v.relations) s += (s.empty() ? "" : "; ") + relation_string(r);
    return s + ": no (m_P, m_Q) in [1, " + std::to_string(d0) +
           "]^2 satisfies these with Fulton's bound and m < d0 (or d0 = m_P = m_Q = 1)";
}

// Tangency choices at a point: none, or tangent to exactly one curve through it.
std::vector<std::array<bool, 3>> tangency_options(const std::vector<int>& curves) {
    std::vector<std::array<bool, 3>> out{{false, false, false}};
    for (int c : curves) {
        std::array<bool, 3> t{};
        t[static_cast<size_t>(c)] = true;
        out.push_back(t);
    }
    return out;
}

}  // namespace

std::string PunctureCase::to_string() const {
    auto side = [](const char* name, const std::vector<int>& cs, const std::array<bool, 3>& t) {
        std::string s = std::string(name) + " on " + curve_list(cs);
        for (int c : cs)
            if (t[static_cast<size_t>(c)]) s += " (tangent to C" + std::to_string(c + 1) + ")";
        return s;
    };
    return "d0=" + std::to_string(d0) + ", " + side("P", p_curves, tangent_p) + ", " + side("Q", q_curves, tangent_q);
}

bool fulton_bound(int d0, int mp, int mq) {
    return static_cast<long>(mp) * (mp - 1) + static_cast<long>(mq) * (mq - 1) <=
           static_cast<long>(d0 - 1) * (d0 - 2);
}

bool star_condition(int d0, int mp, int mq) { return (mp < d0 && mq < d0) || (d0 == 1 && mp == 1 && mq == 1); }

bool recheck(const CaseVerdict& v, const std::array<int, 3>& degrees) {
    if (v.relations.size() != 3) return false;
    for (const auto& r : v.relations)
        if (r.rhs != static_cast<long>(degrees[static_cast<size_t>(r.curve)]) * v.c.d0) return false;
    auto sols = solve(v.relations, v.c.d0);
    return sols == v.solutions && v.possible == !sols.empty();
}

EngineReport two_puncture_case_engine(const std::array<int, 3>& degrees, int d0_max, bool relaxed) {
    if (d0_max < 1) throw PreconditionError("d0_max must be at least 1");
    for (int d : degrees)
        if (d < 1) throw PreconditionError("curve degrees must be positive");
    if (!relaxed) {
        bool all2 = std::all_of(degrees.begin(), degrees.end(), [](int d) { return d >= 2; });
        bool some3 = std::any_of(degrees.begin(), degrees.end(), [](int d) { return d >= 3; });
        if (!all2 || !some3)
            throw PreconditionError("degrees need every d_i >= 2 and some d_i >= 3");
    }
    EngineReport rep;
    rep.degrees = degrees;
    rep.d0_max = d0_max;
    const std::vector<std::vector<int>> sets{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
    std::set<std::tuple<int, int, int, int>> seen;
    for (int d0 = 1; d0 <= d0_max; ++d0)
        for (const auto& ps : sets)
            for (const auto& qs : sets)
                for (const auto& tp : tangency_options(ps))
                    for (const auto& tq : tangency_options(qs)) {
                        CaseVerdict v;
                        v.c = PunctureCase{d0, ps, qs, tp, tq};
                        v.relations = relations(v.c, degrees);
                        v.solutions = solve(v.relations, d0);
                        v.possible = !v.solutions.empty();
                        ++rep.cases;
                        if (!v.possible) {
                            v.certificate = certificate(v);
                        } else {
                            for (const auto& s : v.solutions) {
                                int middle = -1;
                                for (int c : ps)
                                    if (contains(qs, c)) middle = middle < 0 ? c : 3;
                                auto key = std::make_tuple(d0, std::min(s[0], s[1]), std::max(s[0], s[1]), middle);
                                if (seen.insert(key).second) rep.survivors.push_back(v);
                            }
                        }
                        rep.verdicts.push_back(std::move(v));
                    }
    return rep;
}

}  // namespace hyp
