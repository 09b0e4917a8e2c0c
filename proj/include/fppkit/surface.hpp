#pragma once

// Q-homology projective planes with cyclic quotient singularities, assembled
// from resolution invariants plus a singularity list.
//
// For such a surface S with minimal resolution S':
//
//   K_S^2    = K_{S'}^2 + sum_p D_p.K_{S'}
//   |det R|  = prod_p q_p          (R = direct sum of the exceptional lattices)
//   D        = |det R| K_S^2       (must be a nonzero perfect square integer)
//   D'       = D / c^2             (c = index of R in its primitive closure)
//
// c is model input: it depends on global lattice data that is not derivable
// from the singularity list alone.

#include "fppkit/numeric.hpp"
#include "fppkit/singularity.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fppkit {

enum class KAmpleSign { ample, anti_ample, other };

inline std::string to_string(KAmpleSign s) {
    switch (s) {
        case KAmpleSign::ample: return "ample";
        case KAmpleSign::anti_ample: return "anti-ample";
        case KAmpleSign::other: return "other";
    }
    throw std::logic_error("unreachable");
}

inline KAmpleSign k_ample_sign_from_string(const std::string& s) {
    if (s == "ample") return KAmpleSign::ample;
    if (s == "anti-ample") return KAmpleSign::anti_ample;
    if (s == "other") return KAmpleSign::other;
    throw std::invalid_argument("unknown k_ample_sign: " + s);
}

struct SurfaceModel {
    std::string name;
    Rat k2_resolution;                         // K_{S'}^2 of the minimal resolution
    std::vector<SingularityType> singularities;
    Int c = 1;                                 // primitive-closure index, >= 1
    KAmpleSign k_ample_sign = KAmpleSign::ample;

    const SingularityType* find(const std::string& label) const {
        for (const auto& s : singularities)
            if (s.label == label)
                return &s;
        return nullptr;
    }

    const SingularityType& at(const std::string& label) const {
        if (const auto* s = find(label))
            return *s;
        throw std::invalid_argument("model '" + name + "' has no singular point '" + label + "'");
    }
};

struct SurfaceInvariants {
    Rat k2_s;                        // K_S^2
    Int det_r;                       // |det R|
    Int d;                           // D
    Int d_prime;                     // D' = D / c^2
    std::optional<Int> sqrt_d_prime; // present when D' is a perfect square
};

/// Computes K_S^2, |det R|, D and D', validating the Q-homology-plane
/// constraints. Throws std::domain_error with "not a Q-homology-plane
/// candidate" when D fails to be a nonzero perfect square integer, and with
/// "invalid c" when c^2 does not divide D.
inline SurfaceInvariants compute_invariants(const SurfaceModel& m) {
    SurfaceInvariants inv;
    inv.k2_s = m.k2_resolution;
    inv.det_r = 1;
    for (const auto& p : m.singularities) {
        inv.k2_s += discrepancy(p).dpk;
        inv.det_r *= p.q;
    }
    if (m.k_ample_sign == KAmpleSign::ample && inv.k2_s <= 0)
        throw std::domain_error("not a Q-homology-plane candidate: K_S^2 = " + rat_str(inv.k2_s) +
                                " is not positive with K ample");
    Rat d_rat = inv.det_r * inv.k2_s;
    if (!is_integer(d_rat) || d_rat == 0 || !is_perfect_square(to_int(d_rat)))
        throw std::domain_error("not a Q-homology-plane candidate: D = " + rat_str(d_rat) +
                                " is not a nonzero square integer");
    inv.d = to_int(d_rat);
    if (m.c < 1 || inv.d % (m.c * m.c) != 0)
        throw std::domain_error("invalid c: c^2 = " + Int(m.c * m.c).get_str() +
                                " does not divide D = " + inv.d.get_str());
    inv.d_prime = inv.d / (m.c * m.c);
    inv.sqrt_d_prime = exact_sqrt(inv.d_prime);
    return inv;
}

/// The four built-in quotient models. c is only known for X/C7 (where D' = 9
/// forces c = 7); the other presets carry the always-valid c = 1 and accept a
/// user-supplied value through the JSON model format instead.
inline std::vector<SurfaceModel> quotient_presets() {
    std::vector<SurfaceModel> out;
    {
        SurfaceModel m{"X/C3", make_rat(3), {}, 1, KAmpleSign::ample};
        for (int i = 1; i <= 3; ++i)
            m.singularities.emplace_back(3, 2, "p" + std::to_string(i));
        out.push_back(std::move(m));
    }
    {
        SurfaceModel m{"X/C3^2", make_rat(1), {}, 1, KAmpleSign::ample};
        for (int i = 1; i <= 4; ++i)
            m.singularities.emplace_back(3, 2, "p" + std::to_string(i));
        out.push_back(std::move(m));
    }
    {
        SurfaceModel m{"X/C7", make_rat(0), {}, 7, KAmpleSign::ample};
        for (int i = 1; i <= 3; ++i)
            m.singularities.emplace_back(7, 5, "y" + std::to_string(i));
        out.push_back(std::move(m));
    }
    {
        SurfaceModel m{"X/(7:3)", make_rat(0), {}, 1, KAmpleSign::ample};
        for (int i = 1; i <= 3; ++i)
            m.singularities.emplace_back(3, 2, "p" + std::to_string(i));
        m.singularities.emplace_back(7, 5, "p4");
        out.push_back(std::move(m));
    }
    return out;
}

inline SurfaceModel find_preset(const std::string& name) {
    for (auto& m : quotient_presets())
        if (m.name == name)
            return m;
    throw std::invalid_argument("unknown preset '" + name +
                                "' (available: X/C3, X/C3^2, X/C7, X/(7:3))");
}

}  // namespace fppkit
