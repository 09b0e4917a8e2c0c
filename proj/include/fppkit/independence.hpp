#pragma once

// Linear-independence certificates for quadratic monomials in sections, by
// evaluation at marked points.
//
// Given sections g_1, ..., g_r with known vanishing sets among marked points
// x_1, ..., x_s, form the quadratic monomials g_a g_b. In a linear dependence
// sum c_M M = 0, evaluating at a point where exactly one not-yet-eliminated
// monomial is nonvanishing forces that coefficient to zero. Greedy repetition
// either certifies the whole set (at most one monomial left un-eliminated; a
// single nonzero section is independent outright) or stalls, in which case
// the eliminated monomials together with one survivor still form a certified
// independent subset.

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fppkit {

struct VanishingSection {
    std::string label;
    std::set<int> vanishes_at;  // 1-based marked-point indices
};

struct VanishingPattern {
    std::vector<std::string> marked_points;
    std::vector<VanishingSection> sections;

    VanishingPattern(std::vector<std::string> points, std::vector<VanishingSection> secs)
        : marked_points(std::move(points)), sections(std::move(secs)) {
        for (const auto& s : sections) {
            for (int p : s.vanishes_at)
                if (p < 1 || static_cast<std::size_t>(p) > marked_points.size())
                    throw std::invalid_argument("section " + s.label +
                                                " vanishes at unknown point index " +
                                                std::to_string(p));
            if (s.vanishes_at.size() >= marked_points.size())
                throw std::invalid_argument(
                    "section " + s.label +
                    " vanishes at every marked point; degenerate input rejected");
        }
    }
};

struct QuadraticMonomial {
    int a, b;  // 0-based section indices, a <= b
    std::set<int> vanishes_at;

    std::string str(const VanishingPattern& pattern) const {
        const auto& ga = pattern.sections[a].label;
        const auto& gb = pattern.sections[b].label;
        return a == b ? ga + "^2" : ga + "*" + gb;
    }
};

struct EliminationStep {
    int point;  // 1-based
    QuadraticMonomial monomial;
};

struct IndependenceCertificate {
    std::vector<QuadraticMonomial> monomials;
    std::vector<EliminationStep> trace;
    std::vector<QuadraticMonomial> survivors;
    int certified_count = 0;  // eliminated monomials + one survivor
    bool fully_certified = false;
    bool stalled = false;  // >= 2 survivors left: full-set independence not established

    std::string trace_str(const VanishingPattern& pattern) const {
        std::string out;
        for (const auto& step : trace) {
            if (!out.empty())
                out += ", ";
            out += pattern.marked_points[step.point - 1] + " kills " +
                   step.monomial.str(pattern);
        }
        if (!survivors.empty())
            out += std::string(out.empty() ? "" : ", ") + "remainder " +
                   survivors.front().str(pattern) + " independent";
        return out;
    }
};

inline IndependenceCertificate section_independence(const VanishingPattern& pattern) {
    if (pattern.sections.empty() || pattern.marked_points.empty())
        throw std::invalid_argument("section_independence: empty pattern");

    IndependenceCertificate cert;
    for (int a = 0; a < static_cast<int>(pattern.sections.size()); ++a)
        for (int b = a; b < static_cast<int>(pattern.sections.size()); ++b) {
            QuadraticMonomial m{a, b, {}};
            m.vanishes_at = pattern.sections[a].vanishes_at;
            m.vanishes_at.insert(pattern.sections[b].vanishes_at.begin(),
                                 pattern.sections[b].vanishes_at.end());
            cert.monomials.push_back(std::move(m));
        }

    std::vector<QuadraticMonomial> alive = cert.monomials;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < alive.size(); ++i) {
            int killer = 0;
            for (int p = 1; p <= static_cast<int>(pattern.marked_points.size()); ++p) {
                if (alive[i].vanishes_at.count(p))
                    continue;
                bool unique = true;
                for (std::size_t k = 0; k < alive.size() && unique; ++k)
                    if (k != i && !alive[k].vanishes_at.count(p))
                        unique = false;
                if (unique) {
                    killer = p;
                    break;
                }
            }
            if (killer != 0) {
                cert.trace.push_back({killer, alive[i]});
                alive.erase(alive.begin() + static_cast<long>(i));
                progress = true;
                --i;
            }
        }
    }
    cert.survivors = std::move(alive);
    cert.certified_count =
        static_cast<int>(cert.trace.size()) + (cert.survivors.empty() ? 0 : 1);
    cert.fully_certified = cert.survivors.size() <= 1;
    cert.stalled = cert.survivors.size() >= 2;
    return cert;
}

/// The vanishing pattern of the proofs: section g_j vanishes exactly at
/// {x_j, x_{j+1}} among three marked points (indices mod 3).
inline VanishingPattern cyclic_two_point_pattern() {
    std::vector<VanishingSection> sections;
    for (int j = 1; j <= 3; ++j)
        sections.push_back({"g" + std::to_string(j), {j, j % 3 + 1}});
    return VanishingPattern({"x1", "x2", "x3"}, std::move(sections));
}

/// The orbit pattern: g_1, g_2, g_3 are a curve and its two translates under
/// an order-3 action, each missing one marked point: g_1 misses x_3, g_2
/// misses x_2, g_3 misses x_1.
inline VanishingPattern orbit_pattern() {
    std::vector<VanishingSection> sections = {
        {"g1", {1, 2}},
        {"g2", {3, 1}},
        {"g3", {2, 3}},
    };
    return VanishingPattern({"x1", "x2", "x3"}, std::move(sections));
}

}  // namespace fppkit
