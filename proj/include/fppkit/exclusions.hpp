#pragma once

// Per-case classification of every candidate I9-fibre multiplicity: ruled out
// combinatorially (empty incidence system), ruled out by the torsion/section
// class arithmetic, or admissible. The admissible set must come out as {1}.

#include "fppkit/classes.hpp"
#include "fppkit/fiber.hpp"

#include <string>
#include <vector>

namespace fppkit {

enum class MuClassification {
    combinatorially_infeasible,
    excluded_by_torsion_argument,
    admissible,
};

inline std::string to_string(MuClassification c) {
    switch (c) {
        case MuClassification::combinatorially_infeasible: return "combinatorially-infeasible";
        case MuClassification::excluded_by_torsion_argument: return "excluded-by-torsion-argument";
        case MuClassification::admissible: return "admissible";
    }
    throw std::logic_error("unreachable");
}

struct MuVerdict {
    int mu = 0;
    MuClassification classification{};
    std::string detail;
    long solution_count = 0;
};

struct FiberExclusionReport {
    EllipticCase elliptic_case{};
    std::vector<MuVerdict> verdicts;  // ascending mu
    std::vector<int> admissible;
};

/// Candidate multiplicities of the I9-fibre: 1 or one of the two multiple-
/// fibre multiplicities of the case.
inline std::vector<int> candidate_multiplicities(EllipticCase c) {
    auto [a, b] = multiple_fibre_multiplicities(c);
    std::vector<int> mus = {1, a};
    if (b != a)
        mus.push_back(b);
    return mus;
}

inline FiberExclusionReport exclusion_report(EllipticCase c) {
    FiberExclusionReport report;
    report.elliptic_case = c;
    for (int mu : candidate_multiplicities(c)) {
        FiberScenario scenario(c, mu);
        SolveStats stats;
        auto solutions = solve(scenario, &stats);
        MuVerdict v;
        v.mu = mu;
        v.solution_count = static_cast<long>(solutions.size());
        if (solutions.empty()) {
            v.classification = MuClassification::combinatorially_infeasible;
            if (stats.after_sum_bound == 0 && stats.candidates > 0)
                v.detail = "every row-sum candidate violates the incidence bound "
                           "sum_i (A_i1 + A_i2 + A_i3).B >= 3";
            else
                v.detail = "no incidence matrix satisfies the column quadratics";
        } else if (mu == 1) {
            v.classification = MuClassification::admissible;
            v.detail = "incidence system solvable; no obstruction";
            report.admissible.push_back(mu);
        } else {
            ExclusionCertificate cert = multiplicity2_exclusion(c, mu);
            v.classification = MuClassification::excluded_by_torsion_argument;
            v.detail = cert.contradiction;
        }
        report.verdicts.push_back(std::move(v));
    }
    return report;
}

}  // namespace fppkit
