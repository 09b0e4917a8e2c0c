#pragma once

// Numerical divisor-class arithmetic on a fake projective plane X: classes
// m.L + t with L an ample generator (L^2 = 1), t torsion, K == 3L + torsion.
//
//   chi(mL + t) = 1 + m(m-3)/2            (Riemann-Roch; torsion-blind)
//   h^0(M) for M^2 >= 9: chi unless M = K (Kodaira vanishing + p_g = 0)
//
// plus the torsion bookkeeping used by the fibre-multiplicity exclusions:
// cubic roots of K, exponent-2 pullback invariance, and invariant-torsion
// bounds from the fundamental group of the order-7 quotient.

#include "fppkit/fiber.hpp"
#include "fppkit/independence.hpp"
#include "fppkit/numeric.hpp"
#include "fppkit/torsion.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fppkit {

struct ClassOnFPP {
    long m = 0;
    TorsionElement t;
};

/// chi(mL + t) = 1 + m(m-3)/2. Torsion does not enter.
inline Int chi(long m) {
    Int mm(m);
    return 1 + mm * (mm - 3) / 2;
}

inline Int chi(const ClassOnFPP& cls) { return chi(cls.m); }

/// h^0 where the closed-form regime applies: m >= 4 gives chi (Kodaira
/// vanishing); m = 3 gives 0 for K itself (p_g = 0) and 1 otherwise; m <= 2
/// is undetermined (nullopt).
inline std::optional<Int> h0_large(const TorsionGroup& group, const ClassOnFPP& cls,
                                   const TorsionElement& canonical_twist) {
    if (cls.t.size() != group.rank() || canonical_twist.size() != group.rank())
        throw std::invalid_argument("h0_large: torsion element rank mismatch");
    if (cls.m >= 4)
        return chi(cls);
    if (cls.m == 3)
        return cls.t == canonical_twist ? Int(0) : Int(1);
    return std::nullopt;
}

inline std::optional<Int> h0_large(const TorsionGroup& group, const ClassOnFPP& cls) {
    return h0_large(group, cls, group.zero());
}

/// Number of classes L_0 with 3L_0 = K. Without 3-torsion the canonical class
/// is divisible by 3 and the root is unique. With 3-torsion the divisibility
/// of K is extra data: when K is divisible the roots differ by 3-torsion.
inline Int cube_roots_of_K(const TorsionGroup& group,
                           std::optional<bool> k_divisible_by_3 = std::nullopt) {
    if (!group.has_3_torsion())
        return 1;
    if (!k_divisible_by_3)
        throw std::invalid_argument("cube_roots_of_K: group " + group.str() +
                                    " has 3-torsion; 3-divisibility of K must be supplied");
    return *k_divisible_by_3 ? group.n_torsion_count(3) : Int(0);
}

/// True iff every torsion is a 2-torsion, the hypothesis under which any
/// automorphism fixes 2L.
inline bool two_torsion_pullback_check(const TorsionGroup& group) {
    return group.exponent_divides_two();
}

/// Upper bound on the number of nontrivial automorphism-invariant torsion
/// classes, from pi_1 of the quotient: 0 when the quotient is simply
/// connected, at most one (necessarily a 2-torsion) when pi_1 = C_2.
inline Int invariant_torsion_count(const TorsionGroup& group, long automorphism_order,
                                   long pi1_quotient_order) {
    if (automorphism_order < 2)
        throw std::invalid_argument("invariant_torsion_count: automorphism order must be >= 2");
    if (pi1_quotient_order == 1)
        return 0;
    if (pi1_quotient_order == 2)
        return group.n_torsion_count(2) > 1 ? Int(1) : Int(0);
    throw std::invalid_argument("invariant_torsion_count: unsupported pi_1 order " +
                                std::to_string(pi1_quotient_order));
}

/// Torsion groups of the fake projective planes with automorphism group of
/// order 21: C_2^3, C_2^4, C_2^6.
inline std::vector<TorsionGroup> torsion_presets_aut21() {
    return {TorsionGroup({2, 2, 2}), TorsionGroup({2, 2, 2, 2}),
            TorsionGroup({2, 2, 2, 2, 2, 2})};
}

/// Torsion groups of the fake projective planes with automorphism group of
/// order 9: C_7, C_14, C_2^2 x C_13.
inline std::vector<TorsionGroup> torsion_presets_aut9() {
    return {TorsionGroup({7}), TorsionGroup({2, 7}), TorsionGroup({2, 2, 13})};
}

struct CertificateStep {
    std::string name;
    std::string statement;
};

/// Structured contradiction trace for a hypothetical fibre multiplicity.
struct ExclusionCertificate {
    EllipticCase elliptic_case;
    int mu = 0;
    int per_curve_multiple = 0;  // n/mu: each pulled-back curve is (n/mu)L + torsion
    std::vector<CertificateStep> steps;
    std::string contradiction;
};

/// Replays the divisor-class arithmetic that excludes fibre multiplicity mu
/// by a torsion/section argument. Supported: (2,3) with mu in {2,3} and
/// (2,4) with mu = 2. Throws std::domain_error("no contradiction derivable")
/// on the admissible mu = 1, and rejects scenarios that are excluded
/// combinatorially rather than by class arithmetic.
inline ExclusionCertificate multiplicity2_exclusion(EllipticCase c, int mu) {
    FiberScenario scenario(c, mu);
    if (mu == 1)
        throw std::domain_error("no contradiction derivable: multiplicity 1 is admissible");

    ExclusionCertificate cert;
    cert.elliptic_case = c;
    cert.mu = mu;
    cert.per_curve_multiple = scenario.n / mu;
    const int per = cert.per_curve_multiple;
    const int pi1 = fundamental_group_order(c);

    auto solutions = solve(scenario);
    if (solutions.empty())
        throw std::domain_error("not a torsion-argument case: the incidence system for " +
                                to_string(c) + ", mu=" + std::to_string(mu) +
                                " is already infeasible");
    if (per != 2 && per != 3)
        throw std::domain_error("no contradiction derivable for per-curve class " +
                                std::to_string(per) + "L");
    if (pi1 > 2)
        throw std::domain_error("no contradiction derivable: pi_1 of the quotient has order " +
                                std::to_string(pi1) +
                                ", leaving invariant torsion unconstrained");

    cert.steps.push_back({"fibre-class", "F == " + std::to_string(scenario.n) +
                                             "K, so F_0 = F/" + std::to_string(mu) + " == " +
                                             std::to_string(per) + "K on the resolution"});
    cert.steps.push_back({"pushforward", "B'_1 + B'_2 + B'_3 ~ " + std::to_string(per) + "K_Y"});
    cert.steps.push_back(
        {"pullback", "pi*B'_1 + pi*B'_2 + pi*B'_3 == " + std::to_string(per) + "K_X == " +
                         std::to_string(3 * per) + "L  (m-coefficients balance: 3 x " +
                         std::to_string(per) + " = " + std::to_string(3 * per) + ")"});
    cert.steps.push_back({"per-curve", "the order-3 action rotates the three curves, the "
                                       "order-7 action fixes each: pi*B'_j == " +
                                           std::to_string(per) + "L + t_j"});

    if (per == 3) {
        // Canonical-class route: t = 0 makes pi*B'_1 == 3L_0 = K_X effective.
        for (const auto& g : torsion_presets_aut21())
            if (cube_roots_of_K(g) != 1)
                throw std::logic_error("expected a unique cubic root for " + g.str());
        cert.steps.push_back({"cubic-root", "no admissible torsion group has 3-torsion, so K_X "
                                            "has a unique, automorphism-invariant cubic root "
                                            "L_0; hence t_j is invariant"});
        if (invariant_torsion_count(torsion_presets_aut21().front(), 7, pi1) != 0)
            throw std::logic_error("expected no invariant torsion for simply connected quotient");
        cert.steps.push_back({"torsion-kill", "pi_1 of the quotient is trivial: no nontrivial "
                                              "invariant torsion exists, so t_j = 0"});
        Int h0_K = *h0_large(torsion_presets_aut21().front(),
                             {3, torsion_presets_aut21().front().zero()});
        if (h0_K != 0)
            throw std::logic_error("expected h^0(K) = 0");
        cert.contradiction = "pi*B'_1 == 3L_0 = K_X is effective, but h^0(K_X) = p_g = 0";
        cert.steps.push_back({"contradiction", cert.contradiction});
        return cert;
    }

    // per == 2: section-squares route through h^0(4L).
    if (pi1 == 1) {
        for (const auto& g : torsion_presets_aut21())
            if (!two_torsion_pullback_check(g))
                throw std::logic_error("expected exponent-2 torsion for " + g.str());
        cert.steps.push_back({"two-torsion", "every admissible torsion group has exponent 2, "
                                             "so sigma*(2L) = 2L and each t_j is invariant"});
        if (invariant_torsion_count(torsion_presets_aut21().front(), 7, pi1) != 0)
            throw std::logic_error("expected no invariant torsion for simply connected quotient");
        cert.steps.push_back({"torsion-kill", "pi_1 of the quotient is trivial: t_j = 0, so "
                                              "pi*B'_j == 2L"});
    } else {
        Int bound = invariant_torsion_count(torsion_presets_aut21().front(), 7, pi1);
        if (bound != 1)
            throw std::logic_error("expected invariant-torsion bound 1 for pi_1 = C_2");
        cert.steps.push_back({"torsion-bound", "pi_1 of the quotient is C_2: at most one "
                                               "nontrivial invariant torsion, necessarily a "
                                               "2-torsion; pi*B'_j == 2L + t with 2t = 0"});
    }

    if (solutions.size() != 1)
        throw std::logic_error("expected a unique incidence solution, found " +
                               std::to_string(solutions.size()));
    const auto& k = solutions.front().k;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (k[i][j] != (i == j ? 1 : 0))
                throw std::logic_error("expected the identity incidence matrix");
    cert.steps.push_back({"incidence", "the row/column system has the identity matrix as its "
                                       "unique solution, so B'_j passes through y_j, y_{j+1} "
                                       "and misses y_{j+2}"});

    auto independence = section_independence(cyclic_two_point_pattern());
    if (independence.certified_count != 4)
        throw std::logic_error("expected 4 independent quadratic monomials");
    cert.steps.push_back({"sections", "sections g_j of the pulled-back curves vanish at "
                                      "{x_j, x_{j+1}}; since 2t = 0 the quadratic monomials "
                                      "g_a g_b lie in H^0(4L), and evaluation certifies " +
                                          std::to_string(independence.certified_count) +
                                          " independent ones"});

    Int chi_4L = chi(4);
    if (chi_4L != 3)
        throw std::logic_error("expected chi(4L) = 3");
    cert.contradiction =
        "h^0(4L) >= 4 from the independent monomials, but h^0(4L) = chi(4L) = 3";
    cert.steps.push_back({"contradiction", cert.contradiction});
    return cert;
}

/// Numerical pullback bookkeeping for a degree-d quotient map between
/// Q-homology projective planes: a class C = pi*C' of self-intersection s
/// upstairs has C'^2 = s/d, and on a quotient with K^2 = k2 the multiple m
/// with C' == mK satisfies m^2 k2 = s/d. Returns the positive m; throws when
/// no rational multiple exists.
inline Rat descend_class_multiple(long degree, const Rat& self_intersection,
                                  const Rat& k2_quotient) {
    if (degree < 1 || k2_quotient <= 0)
        throw std::invalid_argument("descend_class_multiple: need degree >= 1 and K^2 > 0");
    Rat m2 = self_intersection / degree / k2_quotient;
    if (m2 < 0)
        throw std::domain_error("descend_class_multiple: negative square");
    auto num = exact_sqrt(m2.get_num());
    auto den = exact_sqrt(m2.get_den());
    if (!num || !den)
        throw std::domain_error("descend_class_multiple: " + rat_str(m2) +
                                " is not a rational square");
    return make_rat(*num, *den);
}

/// h^i table for 2L_0 and L_0, i = 0, 1, 2.
struct VanishingTable {
    std::array<Int, 3> h_2L0{Int(0), Int(0), Int(0)};
    std::array<Int, 3> h_L0{Int(0), Int(0), Int(0)};
};

/// (O, -L_0, -2L_0) is an exceptional sequence iff all six cohomology groups
/// vanish.
inline bool exceptional_sequence_check(const VanishingTable& table) {
    for (int i = 0; i < 3; ++i)
        if (table.h_2L0[i] != 0 || table.h_L0[i] != 0)
            return false;
    return true;
}

/// Derives the full vanishing table from the single input h^0(2L_0) = 0 via
/// K = 3L_0: h^0(L_0) = 0, h^2(2L_0) = h^0(K - 2L_0) = h^0(L_0), h^2(L_0) =
/// h^0(2L_0), and h^1 = h^0 + h^2 - chi with chi(2L_0) = chi(L_0) = 0. Throws
/// if any derived h^1 would be negative.
inline VanishingTable derive_vanishing_table(const Int& h0_2L0) {
    if (h0_2L0 != 0)
        throw std::invalid_argument("derive_vanishing_table: needs h^0(2L_0) = 0");
    VanishingTable t;
    t.h_2L0[0] = h0_2L0;
    t.h_L0[0] = 0;              // a section of L_0 would give one of 2L_0
    t.h_2L0[2] = t.h_L0[0];     // Serre: h^2(2L_0) = h^0(K - 2L_0) = h^0(L_0)
    t.h_L0[2] = t.h_2L0[0];     // h^2(L_0) = h^0(2L_0)
    Int h1_2L0 = t.h_2L0[0] + t.h_2L0[2] - chi(2);
    Int h1_L0 = t.h_L0[0] + t.h_L0[2] - chi(1);
    if (h1_2L0 < 0 || h1_L0 < 0)
        throw std::logic_error("derive_vanishing_table: negative h^1");
    t.h_2L0[1] = h1_2L0;
    t.h_L0[1] = h1_L0;
    return t;
}

}  // namespace fppkit
