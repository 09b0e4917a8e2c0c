#pragma once

// Intersection numbers E.K_{S'} and E^2 on the minimal resolution of a
// Q-homology projective plane, from the class decomposition
//
//   E ~ m M + sum_p sum_j a_{j,p} A_{j,p},
//
// in terms of the leading coefficient m and the incidence numbers E.A_{j,p}:
//
//   E.K_{S'} = (m/sqrt(D')) K_S^2 - sum_p sum_j (1 - (v_j+u_j)/q_p) E.A_{j,p}
//   E^2      = (m^2/D') K_S^2    - sum_p  h^T G_p h
//
// where h is the incidence vector at p and G_p is the local pairing matrix
// (G_p)_{jk} = v_max(j,k) u_min(j,k) / q_p.

#include "fppkit/numeric.hpp"
#include "fppkit/surface.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fppkit {

/// Sparse incidence vector of a divisor class against the exceptional curves,
/// keyed by (point label, 1-based component index), plus the leading
/// coefficient m of the class.
struct ExceptionalIncidence {
    Rat m = Rat(0);
    std::map<std::pair<std::string, int>, Int> hits;

    void add_hit(const std::string& label, int j, Int count) {
        if (count < 0)
            throw std::invalid_argument("incidence: negative hit E.A_" + std::to_string(j) +
                                        " at " + label);
        if (count == 0)
            return;
        hits[{label, j}] += count;
    }

    Int hit(const std::string& label, int j) const {
        auto it = hits.find({label, j});
        return it == hits.end() ? Int(0) : it->second;
    }
};

/// Checks the incidence against the ambient model: every referenced point and
/// component must exist, hits must be non-negative, and m must lie in (1/c)Z.
inline void validate_incidence(const SurfaceModel& model, const ExceptionalIncidence& inc) {
    if (!is_integer(inc.m * model.c))
        throw std::invalid_argument("incidence: m = " + rat_str(inc.m) + " is not in (1/" +
                                    model.c.get_str() + ")Z");
    for (const auto& [key, count] : inc.hits) {
        const auto& [label, j] = key;
        const SingularityType& p = model.at(label);
        if (j < 1 || static_cast<std::size_t>(j) > p.components())
            throw std::invalid_argument("incidence: component index " + std::to_string(j) +
                                        " out of range at " + label);
        if (count < 0)
            throw std::invalid_argument("incidence: negative hit at " + label);
    }
}

/// Local pairing matrix G of a singular point: G_{jk} = v_max(j,k) u_min(j,k) / q
/// (1-based j, k; symmetric with positive entries).
inline std::vector<std::vector<Rat>> local_pairing_matrix(const SingularityType& p) {
    const std::size_t l = p.components();
    std::vector<std::vector<Rat>> g(l, std::vector<Rat>(l));
    for (std::size_t j = 1; j <= l; ++j)
        for (std::size_t k = 1; k <= l; ++k) {
            const Int& v = p.uv.v[std::max(j, k)];
            const Int& u = p.uv.u[std::min(j, k)];
            g[j - 1][k - 1] = make_rat(v * u, p.q);
        }
    return g;
}

namespace detail {

inline std::vector<Int> dense_hits(const ExceptionalIncidence& inc, const SingularityType& p) {
    std::vector<Int> h(p.components(), 0);
    for (std::size_t j = 1; j <= p.components(); ++j)
        h[j - 1] = inc.hit(p.label, static_cast<int>(j));
    return h;
}

}  // namespace detail

/// E.K_{S'}. Requires D' of the model to be a perfect square.
inline Rat ek(const SurfaceModel& model, const SurfaceInvariants& inv,
              const ExceptionalIncidence& inc) {
    validate_incidence(model, inc);
    if (!inv.sqrt_d_prime)
        throw std::domain_error("D-prime not square: D' = " + inv.d_prime.get_str());
    Rat total = inc.m / *inv.sqrt_d_prime * inv.k2_s;
    for (const auto& p : model.singularities) {
        const auto d = discrepancy(p);
        const auto h = detail::dense_hits(inc, p);
        for (std::size_t j = 0; j < h.size(); ++j)
            total -= d.coefficients[j] * h[j];
    }
    return total;
}

inline Rat ek(const SurfaceModel& model, const ExceptionalIncidence& inc) {
    return ek(model, compute_invariants(model), inc);
}

/// E^2, with each off-diagonal pair of the local pairing form counted twice.
inline Rat e2(const SurfaceModel& model, const SurfaceInvariants& inv,
              const ExceptionalIncidence& inc) {
    validate_incidence(model, inc);
    Rat total = inc.m * inc.m / inv.d_prime * inv.k2_s;
    for (const auto& p : model.singularities) {
        const auto g = local_pairing_matrix(p);
        const auto h = detail::dense_hits(inc, p);
        for (std::size_t j = 0; j < h.size(); ++j) {
            if (h[j] == 0)
                continue;
            for (std::size_t k = 0; k < h.size(); ++k)
                total -= g[j][k] * h[j] * h[k];
        }
    }
    return total;
}

inline Rat e2(const SurfaceModel& model, const ExceptionalIncidence& inc) {
    return e2(model, compute_invariants(model), inc);
}

inline bool is_three_seven_five_model(const SurfaceModel& model) {
    if (model.singularities.size() != 3)
        return false;
    for (const auto& p : model.singularities)
        if (p.q != 7 || p.a != 5)
            return false;
    return true;
}

inline void require_three_seven_five(const SurfaceModel& model) {
    if (!is_three_seven_five_model(model))
        throw std::invalid_argument("model '" + model.name +
                                    "' is not a three-point 1/7(1,5) model");
}

/// Incidence vector of the I9-fibre component B_j against the exceptional
/// curves of the three-point 1/7(1,5) model: B_j meets A_{j,2} and A_{j+1,1}
/// once each (circular adjacency) and A_{i,3} with multiplicity k_{ij}.
/// The leading coefficient is m_j = k_{1j} + k_{2j} + k_{3j} + 1.
inline ExceptionalIncidence b_curve_incidence(const SurfaceModel& model,
                                              const std::array<long, 3>& k_column, int j) {
    require_three_seven_five(model);
    if (j < 1 || j > 3)
        throw std::invalid_argument("b_curve_incidence: j must be 1..3");
    ExceptionalIncidence inc;
    inc.add_hit(model.singularities[j - 1].label, 2, 1);
    inc.add_hit(model.singularities[j % 3].label, 1, 1);
    Int m = 1;
    for (int i = 0; i < 3; ++i) {
        inc.add_hit(model.singularities[i].label, 3, Int(k_column[i]));
        m += k_column[i];
    }
    inc.m = make_rat(m, 1);
    return inc;
}

/// Both sides of the specialized B_j quadratic
///   m_j^2 + 14 = 3(k_{1j}^2 + k_{2j}^2 + k_{3j}^2) + 11 + 4 k_{jj} + 2 k_{j+1,j}
/// with m_j = k_{1j} + k_{2j} + k_{3j} + 1 and the wrap k_{4,3} = k_{1,3}.
/// Equality is equivalent to B_j^2 = -2 under the general formula.
inline std::pair<Int, Int> specialized_b_curve_equation(const SurfaceModel& model,
                                                        const std::array<long, 3>& k_column,
                                                        int j) {
    require_three_seven_five(model);
    if (j < 1 || j > 3)
        throw std::invalid_argument("specialized_b_curve_equation: j must be 1..3");
    for (long k : k_column)
        if (k < 0)
            throw std::invalid_argument("specialized_b_curve_equation: negative k entry");
    Int m = 1, sq = 0;
    for (long k : k_column) {
        m += k;
        sq += Int(k) * k;
    }
    Int lhs = m * m + 14;
    Int rhs = 3 * sq + 11 + 4 * Int(k_column[j - 1]) + 2 * Int(k_column[j % 3]);
    return {lhs, rhs};
}

/// True iff sum_i (E.A_{i1} + 2 E.A_{i2}) is divisible by 3.
inline bool prop3_divisibility(const SurfaceModel& model, const ExceptionalIncidence& inc) {
    require_three_seven_five(model);
    validate_incidence(model, inc);
    Int sum = 0;
    for (const auto& p : model.singularities)
        sum += inc.hit(p.label, 1) + 2 * inc.hit(p.label, 2);
    return sum % 3 == 0;
}

/// True iff sum_i (E.A_{i1} + E.A_{i2} + E.A_{i3}) >= 3.
inline bool prop3_sum_bound(const SurfaceModel& model, const ExceptionalIncidence& inc) {
    require_three_seven_five(model);
    validate_incidence(model, inc);
    Int sum = 0;
    for (const auto& p : model.singularities)
        for (int j = 1; j <= 3; ++j)
            sum += inc.hit(p.label, j);
    return sum >= 3;
}

/// Effectivity sign rule: on a model with ample K, an effective class not
/// supported on the exceptional locus must have m > 0.
inline bool requires_positive_m(const SurfaceModel& model) {
    return model.k_ample_sign == KAmpleSign::ample;
}

}  // namespace fppkit
