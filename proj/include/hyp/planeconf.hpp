#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hyp/mpoly.hpp"
#include "hyp/roots.hpp"

namespace hyp {

using Poly3 = MPoly<Rational>;
using Matrix3 = std::array<std::array<Rational, 3>, 3>;

/// Plane curve V(poly), poly homogeneous in (x0, x1, x2).
struct PlaneCurve {
    Poly3 poly;
    int degree = 1;
};

/// Checks homogeneity, the stated degree and squarefreeness.
void validate(const PlaneCurve& c);

/// Builds a curve from a homogeneous polynomial (degree taken from it).
PlaneCurve make_curve(const Poly3& p);

struct Configuration {
    std::array<PlaneCurve, 3> curves;
};

/// Checks each curve and pairwise coprimality.
void validate(const Configuration& conf);

/// p o T, i.e. x_i -> sum_j T[i][j] x_j.
Poly3 transform(const Poly3& p, const Matrix3& T);

/// True when the curves share no component.
bool coprime(const PlaneCurve& a, const PlaneCurve& b, std::uint64_t seed = 0);

/// Intersection points over the roots of q, in coordinates v with original point T v:
/// v = (x, -s0(x)/s1(x), 1) for every root x of the squarefree q.
struct PointGroup {
    UPoly<Rational> q;
    UPoly<Rational> s0;
    UPoly<Rational> s1;
    Matrix3 T;
    int multiplicity = 1;
};

/// Projective point; exact points are scaled so the first nonzero coordinate is 1.
struct PlanePoint {
    bool exact = true;
    std::array<Rational, 3> coords;
    std::array<BigComplex, 3> approx;
    double radius = 0.0;  // isolation radius of the underlying root (inexact points)
    int multiplicity = 1;
    std::string to_string() const;
};

struct Intersection {
    std::vector<PointGroup> groups;
    std::vector<PlanePoint> points;  // exact points first, sorted
    int total_multiplicity = 0;
};

/// All intersection points with multiplicities; total = deg a * deg b.
/// Throws PreconditionError for curves with a common component and ConvergenceError when no
/// generic coordinate change is found after 5 retries.
Intersection intersection_points(const PlaneCurve& a, const PlaneCurve& b, std::uint64_t seed = 0);

/// Roots of group.q at which H vanishes, as a factor of q (exact).
UPoly<Rational> vanishing_part(const PointGroup& group, const Poly3& H);

/// Points of one group whose roots are the roots of q (a factor of group.q).
std::vector<PlanePoint> group_points(const PointGroup& group, const UPoly<Rational>& q);

/// The 3x3 determinant of second partials.
Poly3 hessian(const Poly3& p);

struct SmoothnessReport {
    bool smooth = true;
    std::vector<PlanePoint> singular_points;
    std::string note;
};

SmoothnessReport smoothness(const PlaneCurve& c, std::uint64_t seed = 0);

struct NormalCrossingsReport {
    bool pass = true;
    std::array<bool, 3> smooth{true, true, true};
    std::array<Intersection, 3> pairs;  // (0,1), (0,2), (1,2)
    std::vector<std::string> failures;
};

NormalCrossingsReport normal_crossings(const Configuration& conf, std::uint64_t seed = 0);

// ---------------------------------------------------------------- two punctures

/// A curve A of degree d0 with A cap C = {P, Q}. Curve indices are 0, 1, 2.
struct PunctureCase {
    int d0 = 1;
    std::vector<int> p_curves;        // curves through P (one or two)
    std::vector<int> q_curves;        // curves through Q
    std::array<bool, 3> tangent_p{};  // A tangent to C_i at P
    std::array<bool, 3> tangent_q{};
    std::string to_string() const;
};

/// sum over listed points of m_X (+1 per tangent point) compared with d_i d0.
struct MultiplicityRelation {
    int curve = 0;
    bool at_p = false;
    bool at_q = false;
    bool tangent_p = false;
    bool tangent_q = false;
    long rhs = 0;       // d_i d0
    bool equality = false;  // all listed points transversal: I = m exactly
};

struct CaseVerdict {
    PunctureCase c;
    bool possible = false;
    std::vector<std::array<int, 2>> solutions;  // surviving (m_P, m_Q)
    std::vector<MultiplicityRelation> relations;
    std::string certificate;
};

/// Fulton's bound m_P(m_P-1) + m_Q(m_Q-1) <= (d0-1)(d0-2).
bool fulton_bound(int d0, int mp, int mq);
/// m_P, m_Q < d0, or d0 = m_P = m_Q = 1.
bool star_condition(int d0, int mp, int mq);

/// Re-derives the verdict from the relations by enumerating (m_P, m_Q) in [1, d0]^2.
bool recheck(const CaseVerdict& v, const std::array<int, 3>& degrees);

struct EngineReport {
    std::array<int, 3> degrees{};
    int d0_max = 0;
    size_t cases = 0;
    std::vector<CaseVerdict> verdicts;
    std::vector<CaseVerdict> survivors;  // one per (d0, m_P, m_Q, middle curve)
};

/// Requires all d_i >= 2 and some d_i >= 3 unless `relaxed`.
EngineReport two_puncture_case_engine(const std::array<int, 3>& degrees, int d0_max,
                                      bool relaxed = false);

// ---------------------------------------------------------------- exclusion

struct ExcludedLine {
    bool exact = true;
    std::array<Rational, 3> line;          // l0 x0 + l1 x1 + l2 x2
    std::array<BigComplex, 3> approx;
    int quadric = 0;                       // index of the middle quadric
    std::array<int, 2> others{};           // the two other curves
    std::array<PlanePoint, 2> touch;       // the single point on each other curve
    std::string to_string() const;
};

struct ExclusionReport {
    bool pass = true;
    bool vacuous = false;
    std::vector<ExcludedLine> lines;
    std::vector<std::string> notes;
};

inline constexpr int kExclusionMaxDegree = 4;

/// Lines meeting the two non-quadric curves in one point each and the quadric in exactly
/// those two points. Vacuous pass without a quadric. Throws UnsupportedError when a curve
/// has degree above 4 or no curve has degree 3 or more.
ExclusionReport quadric_line_exclusion(const Configuration& conf, std::uint64_t seed = 0);

}  // namespace hyp
