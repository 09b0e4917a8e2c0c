#pragma once

// Hirzebruch-Jung continued fractions
//
//   [n_1, n_2, ..., n_l] = n_1 - 1/(n_2 - 1/(... - 1/n_l)),  all n_i >= 2,
//
// together with the auxiliary integer sequences u_j, v_j:
//
//   u_j = |[n_1, ..., n_{j-1}]|   (u_0 = 0, u_1 = 1),
//   v_j = |[n_{j+1}, ..., n_l]|   (v_l = 1, v_{l+1} = 0),
//
// where |w| denotes the numerator of w in lowest terms. Both satisfy the
// continuant recurrence, and u_{l+1} = v_0 = |[n_1,...,n_l]| is the order q
// of the cyclic quotient singularity the string resolves.

#include "fppkit/numeric.hpp"

#include <stdexcept>
#include <vector>

namespace fppkit {

/// An admissible Hirzebruch-Jung string: a non-empty list of integers >= 2.
struct HJString {
    std::vector<long> entries;

    explicit HJString(std::vector<long> ns) : entries(std::move(ns)) {
        if (entries.empty())
            throw std::invalid_argument("HJString: empty string");
        for (long n : entries)
            if (n < 2)
                throw std::invalid_argument("HJString: entry " + std::to_string(n) +
                                            " < 2 is not admissible");
    }

    std::size_t length() const { return entries.size(); }

    bool operator==(const HJString& other) const = default;
};

/// u_0..u_{l+1} and v_0..v_{l+1} for a string of length l, plus the order q.
struct UVSequences {
    std::vector<Int> u;  // size l + 2
    std::vector<Int> v;  // size l + 2
    Int q;               // = u[l+1] = v[0]
};

/// Exact value of the continued fraction, in lowest terms.
inline Rat hj_eval(const HJString& s) {
    // Fold from the right: value_j = n_j - 1/value_{j+1}. Admissibility keeps
    // every partial value > 1, so no division by zero can occur.
    Rat value = make_rat(s.entries.back());
    for (auto it = std::next(s.entries.rbegin()); it != s.entries.rend(); ++it)
        value = make_rat(*it) - 1 / value;
    return value;
}

inline Rat hj_eval(const std::vector<long>& entries) { return hj_eval(HJString(entries)); }

/// The unique admissible string with hj_eval = q/a. Requires q > a >= 1 and
/// gcd(q, a) = 1. Greedy ceiling recursion: n_1 = ceil(q/a), then continue
/// with a / (n_1*a - q).
inline HJString hj_expand(const Int& q, const Int& a) {
    if (!(q > a && a >= 1))
        throw std::invalid_argument("hj_expand: need q > a >= 1, got " + q.get_str() + "/" +
                                    a.get_str());
    if (gcd(q, a) != 1)
        throw std::invalid_argument("hj_expand: q and a must be coprime");
    std::vector<long> entries;
    Int num = q, den = a;
    while (den > 0) {
        Int n = (num + den - 1) / den;  // ceil(num/den), both positive
        entries.push_back(to_long(n));
        Int next_den = n * den - num;
        num = den;
        den = next_den;
    }
    return HJString(entries);
}

inline HJString hj_expand(long q, long a) { return hj_expand(Int(q), Int(a)); }

/// Integer recurrences u_{j+1} = n_j u_j - u_{j-1} and v_{j-1} = n_j v_j - v_{j+1}
/// with the boundary values u_0 = 0, u_1 = 1, v_l = 1, v_{l+1} = 0.
inline UVSequences uv_sequences(const HJString& s) {
    const std::size_t l = s.length();
    UVSequences uv;
    uv.u.assign(l + 2, 0);
    uv.v.assign(l + 2, 0);
    uv.u[0] = 0;
    uv.u[1] = 1;
    for (std::size_t j = 1; j <= l; ++j)
        uv.u[j + 1] = s.entries[j - 1] * uv.u[j] - uv.u[j - 1];
    uv.v[l] = 1;
    uv.v[l + 1] = 0;
    for (std::size_t j = l; j >= 1; --j)
        uv.v[j - 1] = s.entries[j - 1] * uv.v[j] - uv.v[j + 1];
    uv.q = uv.u[l + 1];
    return uv;
}

/// All admissible strings with length <= max_len and entries <= max_entry,
/// in lexicographic order. The exhaustive family used by property tests.
inline std::vector<HJString> all_strings(std::size_t max_len, long max_entry) {
    std::vector<HJString> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self) -> void {
        if (!cur.empty())
            out.push_back(HJString(cur));
        if (cur.size() == max_len)
            return;
        for (long n = 2; n <= max_entry; ++n) {
            cur.push_back(n);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

}  // namespace fppkit
