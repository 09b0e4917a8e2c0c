#pragma once

// Finite abelian groups as products of cyclic factors, with componentwise
// element arithmetic. Used for the torsion subgroup of Pic on a fake
// projective plane.

#include "fppkit/numeric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fppkit {

using TorsionElement = std::vector<long>;  // residues, one per cyclic factor

struct TorsionGroup {
    std::vector<long> cyclic_orders;  // each >= 2; empty = trivial group

    TorsionGroup() = default;
    explicit TorsionGroup(std::vector<long> orders) : cyclic_orders(std::move(orders)) {
        for (long n : cyclic_orders)
            if (n < 2)
                throw std::invalid_argument("TorsionGroup: cyclic order " + std::to_string(n) +
                                            " < 2");
    }

    Int order() const {
        Int o = 1;
        for (long n : cyclic_orders)
            o *= n;
        return o;
    }

    std::size_t rank() const { return cyclic_orders.size(); }

    TorsionElement zero() const { return TorsionElement(rank(), 0); }

    bool is_zero(const TorsionElement& a) const {
        check(a);
        return std::all_of(a.begin(), a.end(), [](long r) { return r == 0; });
    }

    TorsionElement add(const TorsionElement& a, const TorsionElement& b) const {
        check(a);
        check(b);
        TorsionElement out(rank());
        for (std::size_t i = 0; i < rank(); ++i)
            out[i] = (a[i] + b[i]) % cyclic_orders[i];
        return out;
    }

    TorsionElement scalar_mul(long n, const TorsionElement& a) const {
        check(a);
        TorsionElement out(rank());
        for (std::size_t i = 0; i < rank(); ++i) {
            long r = (n % cyclic_orders[i]) * a[i] % cyclic_orders[i];
            out[i] = (r + cyclic_orders[i]) % cyclic_orders[i];
        }
        return out;
    }

    /// All elements, lexicographically. Caller is responsible for only
    /// enumerating groups of reasonable order.
    std::vector<TorsionElement> elements() const {
        std::vector<TorsionElement> out;
        TorsionElement cur(rank(), 0);
        while (true) {
            out.push_back(cur);
            std::size_t i = rank();
            while (i > 0) {
                --i;
                if (++cur[i] < cyclic_orders[i])
                    break;
                cur[i] = 0;
                if (i == 0)
                    return out;
            }
            if (rank() == 0)
                return out;
        }
    }

    /// |{s : n s = 0}| = prod_i gcd(n, order_i).
    Int n_torsion_count(long n) const {
        Int count = 1;
        for (long o : cyclic_orders)
            count *= gcd(Int(n), Int(o));
        return count;
    }

    bool has_3_torsion() const { return n_torsion_count(3) > 1; }

    /// True iff 2s = 0 for every element (group of exponent dividing 2).
    bool exponent_divides_two() const {
        return std::all_of(cyclic_orders.begin(), cyclic_orders.end(),
                           [](long n) { return n == 2; });
    }

    std::string str() const {
        if (cyclic_orders.empty())
            return "1";
        std::string s;
        for (std::size_t i = 0; i < cyclic_orders.size(); ++i)
            s += (i ? " x " : "") + ("C" + std::to_string(cyclic_orders[i]));
        return s;
    }

  private:
    void check(const TorsionElement& a) const {
        if (a.size() != rank())
            throw std::invalid_argument("torsion element has wrong rank");
        for (std::size_t i = 0; i < rank(); ++i)
            if (a[i] < 0 || a[i] >= cyclic_orders[i])
                throw std::invalid_argument("torsion element residue out of range");
    }
};

namespace detail {

inline std::vector<std::vector<long>> partitions(long e) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long remaining, long max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (long part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, e, e);
    return out;
}

}  // namespace detail

/// Every abelian group of order n, as a multiset of prime-power cyclic
/// factors (one group per choice of partition of each prime exponent).
inline std::vector<TorsionGroup> abelian_groups_of_order(long n) {
    if (n < 1)
        throw std::invalid_argument("abelian_groups_of_order: n must be >= 1");
    std::map<long, long> factorization;
    long rest = n;
    for (long p = 2; p * p <= rest; ++p)
        while (rest % p == 0) {
            ++factorization[p];
            rest /= p;
        }
    if (rest > 1)
        ++factorization[rest];

    std::vector<std::vector<long>> groups = {{}};  // orders so far
    for (const auto& [p, e] : factorization) {
        std::vector<std::vector<long>> extended;
        for (const auto& partition : detail::partitions(e))
            for (const auto& base : groups) {
                auto orders = base;
                for (long part : partition) {
                    long q = 1;
                    for (long i = 0; i < part; ++i)
                        q *= p;
                    orders.push_back(q);
                }
                extended.push_back(std::move(orders));
            }
        groups = std::move(extended);
    }
    std::vector<TorsionGroup> out;
    for (auto& orders : groups) {
        std::sort(orders.begin(), orders.end());
        out.emplace_back(std::move(orders));
    }
    return out;
}

}  // namespace fppkit
