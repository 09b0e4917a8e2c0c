#pragma once

// Exhaustive solver for the I9-fibre incidence systems.
//
// On the minimal resolution of the three-point 1/7(1,5) model the I9-fibre
// has components A_{11}, A_{12}, B_1, A_{21}, A_{22}, B_2, A_{31}, A_{32},
// B_3 in circular order, and the (-3)-curves A_{i3} meet it in the unknowns
// k_{ij} = A_{i3}.B_j. For an elliptic case with general fibre F == n.K and
// fibre multiplicity mu (so F_0 = F/mu), the constraints are
//
//   k_{i1} + k_{i2} + k_{i3} = n/mu - 1                       (rows)
//   m_j = k_{1j} + k_{2j} + k_{3j} + 1   with  B_j.K = 0      (columns)
//   m_j^2 + 14 = 3 sum_i k_{ij}^2 + 11 + 4k_{jj} + 2k_{j+1,j} (B_j^2 = -2)
//
// plus the (-2)-curve incidence bound sum_{i,j} B.A_{ij} >= 3. Every solution
// is re-verified through the general intersection formulas (two independent
// code paths must agree).

#include "fppkit/intersection.hpp"
#include "fppkit/numeric.hpp"
#include "fppkit/surface.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace fppkit {

enum class EllipticCase { c23, c24, c33 };

inline std::string to_string(EllipticCase c) {
    switch (c) {
        case EllipticCase::c23: return "(2,3)";
        case EllipticCase::c24: return "(2,4)";
        case EllipticCase::c33: return "(3,3)";
    }
    throw std::logic_error("unreachable");
}

inline EllipticCase elliptic_case_from_string(const std::string& s) {
    if (s == "2,3" || s == "(2,3)") return EllipticCase::c23;
    if (s == "2,4" || s == "(2,4)") return EllipticCase::c24;
    if (s == "3,3" || s == "(3,3)") return EllipticCase::c33;
    throw std::invalid_argument("unknown elliptic case '" + s + "' (expected 2,3 / 2,4 / 3,3)");
}

/// Multiplicities of the two multiple fibres of the case: (2,3), (2,4), (3,3).
inline std::pair<int, int> multiple_fibre_multiplicities(EllipticCase c) {
    switch (c) {
        case EllipticCase::c23: return {2, 3};
        case EllipticCase::c24: return {2, 4};
        case EllipticCase::c33: return {3, 3};
    }
    throw std::logic_error("unreachable");
}

/// n with general fibre F == n.K: 6, 4, 3 for the three cases.
inline int fiber_kclass(EllipticCase c) {
    switch (c) {
        case EllipticCase::c23: return 6;
        case EllipticCase::c24: return 4;
        case EllipticCase::c33: return 3;
    }
    throw std::logic_error("unreachable");
}

/// pi_1 of the resolution: cyclic of order gcd(a,b).
inline int fundamental_group_order(EllipticCase c) {
    auto [a, b] = multiple_fibre_multiplicities(c);
    Int g = gcd(Int(a), Int(b));
    return static_cast<int>(g.get_si());
}

struct FiberScenario {
    EllipticCase elliptic_case;
    int mu;
    int n;        // fibre class multiple: F == n.K
    int row_sum;  // = n/mu - 1

    FiberScenario(EllipticCase c, int mu_) : elliptic_case(c), mu(mu_), n(fiber_kclass(c)) {
        if (mu < 1 || mu > 4)
            throw std::invalid_argument("fibre multiplicity must be in 1..4");
        if (n % mu != 0)
            throw std::invalid_argument("multiplicity " + std::to_string(mu) +
                                        " does not divide the fibre class multiple " +
                                        std::to_string(n) + " of case " +
                                        to_string(elliptic_case));
        row_sum = n / mu - 1;
    }
};

struct FiberSolution {
    std::array<std::array<long, 3>, 3> k;  // k[i][j] = k_{i+1, j+1}
    std::array<long, 3> m;                 // m_j = column sum + 1

    std::array<long, 3> column(int j) const {  // 1-based
        return {k[0][j - 1], k[1][j - 1], k[2][j - 1]};
    }

    bool operator==(const FiberSolution& other) const { return k == other.k; }
};

/// Survivor counts per filtering stage, for the exclusion report.
struct SolveStats {
    long candidates = 0;        // matrices with the required row sums
    long after_sum_bound = 0;   // also satisfying the incidence-sum bound
    long after_quadratics = 0;  // also satisfying all three column quadratics
};

namespace detail {

inline std::vector<std::array<long, 3>> row_compositions(int row_sum) {
    std::vector<std::array<long, 3>> rows;
    for (long k1 = 0; k1 <= row_sum; ++k1)
        for (long k2 = 0; k2 + k1 <= row_sum; ++k2)
            rows.push_back({k1, k2, row_sum - k1 - k2});
    return rows;
}

}  // namespace detail

/// All solutions, duplicate-free, in lexicographic (k_11, k_12, ..., k_33)
/// order. An empty result means the scenario is combinatorially infeasible.
inline std::vector<FiberSolution> solve(const FiberScenario& scenario,
                                        SolveStats* stats = nullptr) {
    const SurfaceModel model = find_preset("X/C7");
    const SurfaceInvariants inv = compute_invariants(model);
    const auto rows = detail::row_compositions(scenario.row_sum);

    SolveStats local;
    std::vector<FiberSolution> out;
    for (const auto& r1 : rows)
        for (const auto& r2 : rows)
            for (const auto& r3 : rows) {
                ++local.candidates;
                FiberSolution sol{{r1, r2, r3}, {}};
                bool column_sums_ok = true;
                for (int j = 0; j < 3; ++j) {
                    long col = sol.k[0][j] + sol.k[1][j] + sol.k[2][j];
                    sol.m[j] = col + 1;
                    // total incidence of B_j is col + 2; the bound asks >= 3
                    if (col < 1)
                        column_sums_ok = false;
                }
                if (!column_sums_ok)
                    continue;
                ++local.after_sum_bound;
                bool quadratics_ok = true;
                for (int j = 1; j <= 3 && quadratics_ok; ++j) {
                    auto [lhs, rhs] = specialized_b_curve_equation(model, sol.column(j), j);
                    quadratics_ok = (lhs == rhs);
                }
                if (!quadratics_ok)
                    continue;
                ++local.after_quadratics;
                // Independent re-derivation through the general formulas.
                for (int j = 1; j <= 3; ++j) {
                    ExceptionalIncidence b = b_curve_incidence(model, sol.column(j), j);
                    if (ek(model, inv, b) != 0 || e2(model, inv, b) != -2 ||
                        !prop3_divisibility(model, b) || !prop3_sum_bound(model, b))
                        throw std::logic_error("fiber solution failed intersection re-check");
                    if (requires_positive_m(model) && b.m <= 0)
                        throw std::logic_error("fiber solution with non-positive m on ample model");
                }
                out.push_back(sol);
            }
    if (stats)
        *stats = local;
    return out;
}

/// Rotates (i,j) -> (i+1, j+1) mod 3.
inline FiberSolution rotate(const FiberSolution& s) {
    FiberSolution r = s;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r.k[(i + 1) % 3][(j + 1) % 3] = s.k[i][j];
    for (int j = 0; j < 3; ++j)
        r.m[(j + 1) % 3] = s.m[j];
    return r;
}

/// The subset of solve() fixed by the simultaneous index rotation.
inline std::vector<FiberSolution> symmetric_solutions(const FiberScenario& scenario) {
    std::vector<FiberSolution> out;
    for (const auto& s : solve(scenario))
        if (rotate(s) == s)
            out.push_back(s);
    return out;
}

}  // namespace fppkit
