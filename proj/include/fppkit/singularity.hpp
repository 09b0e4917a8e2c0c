#pragma once

// Cyclic quotient singularities 1/q(1,a), their minimal-resolution strings and
// discrepancy divisors.
//
// The resolution of 1/q(1,a) is the string of rational curves of type
// [n_1,...,n_l] where q/a = [n_1,...,n_l]. The discrepancy divisor D_p in
//
//   K_{S'} = f^* K_S - sum_p D_p,   D_p = sum_j a_j A_j,  0 <= a_j < 1,
//
// has closed-form coefficients a_j = 1 - (v_j + u_j)/q and satisfies
// D_p K_{S'} = -D_p^2 = sum_j a_j (n_j - 2). The same coefficients solve the
// adjunction system D_p A_j = 2 + A_j^2, which this module also does directly
// as an independent route.

#include "fppkit/hj.hpp"
#include "fppkit/numeric.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fppkit {

/// A cyclic quotient singularity 1/q(1,a) with its resolution string.
struct SingularityType {
    Int q;
    Int a;
    HJString string;
    UVSequences uv;
    std::string label;

    SingularityType(Int q_, Int a_, std::string label_ = "")
        : q(std::move(q_)),
          a(std::move(a_)),
          string(hj_expand(q, a)),
          uv(uv_sequences(string)),
          label(std::move(label_)) {}

    std::size_t components() const { return string.length(); }
};

/// Coefficients of D_p, one per exceptional curve, plus D_p.K and D_p^2.
struct DiscrepancyDivisor {
    std::vector<Rat> coefficients;
    Rat dpk;  // D_p . K_{S'}
    Rat dp2;  // D_p^2 = -dpk
};

/// Closed form of the discrepancy data: a_j = 1 - (v_j + u_j)/q.
inline DiscrepancyDivisor discrepancy(const SingularityType& s) {
    DiscrepancyDivisor d;
    d.dpk = 0;
    const std::size_t l = s.components();
    for (std::size_t j = 1; j <= l; ++j) {
        Rat aj = 1 - make_rat(s.uv.v[j] + s.uv.u[j], s.q);
        d.dpk += aj * (s.string.entries[j - 1] - 2);
        d.coefficients.push_back(std::move(aj));
    }
    d.dp2 = -d.dpk;
    return d;
}

/// The intersection matrix of a string: tridiagonal, diagonal -n_j,
/// off-diagonal 1.
inline std::vector<std::vector<Rat>> intersection_matrix(const HJString& s) {
    const std::size_t l = s.length();
    std::vector<std::vector<Rat>> m(l, std::vector<Rat>(l, Rat(0)));
    for (std::size_t j = 0; j < l; ++j) {
        m[j][j] = make_rat(-s.entries[j]);
        if (j + 1 < l)
            m[j][j + 1] = m[j + 1][j] = 1;
    }
    return m;
}

namespace detail {

// Exact Gaussian elimination. Returns the determinant; when rhs is non-null,
// reduces it alongside and back-substitutes the solution into it.
inline Rat gauss_solve(std::vector<std::vector<Rat>> m, std::vector<Rat>* rhs) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            if (rhs)
                std::swap((*rhs)[pivot], (*rhs)[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0)
                continue;
            Rat factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k)
                m[row][k] -= factor * m[col][k];
            if (rhs)
                (*rhs)[row] -= factor * (*rhs)[col];
        }
    }
    if (rhs) {
        for (std::size_t row = n; row-- > 0;) {
            Rat acc = (*rhs)[row];
            for (std::size_t k = row + 1; k < n; ++k)
                acc -= m[row][k] * (*rhs)[k];
            (*rhs)[row] = acc / m[row][row];
        }
    }
    return det;
}

}  // namespace detail

/// |det| of the string's intersection matrix, computed by elimination over the
/// actual matrix (an independent re-derivation of the order q, not a field
/// read and not the continuant recurrence).
inline Int local_discriminant_order(const SingularityType& s) {
    Rat det = detail::gauss_solve(intersection_matrix(s.string), nullptr);
    return abs(to_int(det));
}

/// Discrepancy coefficients by exact linear solve of the adjunction system
/// D_p A_j = 2 + A_j^2. Must agree with the closed form.
inline DiscrepancyDivisor discrepancy_by_linear_solve(const SingularityType& s) {
    const std::size_t l = s.components();
    std::vector<Rat> rhs(l);
    for (std::size_t j = 0; j < l; ++j)
        rhs[j] = make_rat(2 - s.string.entries[j]);
    Rat det = detail::gauss_solve(intersection_matrix(s.string), &rhs);
    if (det == 0)
        throw std::logic_error("discrepancy_by_linear_solve: singular intersection matrix");
    DiscrepancyDivisor d;
    d.coefficients = std::move(rhs);
    d.dpk = 0;
    for (std::size_t j = 0; j < l; ++j)
        d.dpk += d.coefficients[j] * (s.string.entries[j] - 2);
    d.dp2 = -d.dpk;
    return d;
}

}  // namespace fppkit
