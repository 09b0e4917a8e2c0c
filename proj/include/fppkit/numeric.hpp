#pragma once

// Exact integer/rational arithmetic used everywhere in fppkit.
// All quantities in this library are exact; there is no floating point.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace fppkit {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(n, d) does not canonicalize; this does.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0)
        throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) {
    return make_rat(Int(num), Int(den));
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int to_int(const Rat& r) {
    if (!is_integer(r))
        throw std::domain_error("to_int: " + r.get_str() + " is not an integer");
    return r.get_num();
}

inline long to_long(const Int& n) {
    if (!n.fits_slong_p())
        throw std::overflow_error("to_long: value out of range");
    return n.get_si();
}

// Exact integer square root test: returns sqrt(n) when n is a perfect square.
inline std::optional<Int> exact_sqrt(const Int& n) {
    if (n < 0)
        return std::nullopt;
    if (!mpz_perfect_square_p(n.get_mpz_t()))
        return std::nullopt;
    Int root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

inline bool is_perfect_square(const Int& n) { return exact_sqrt(n).has_value(); }

// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& r) {
    return is_integer(r) ? r.get_num().get_str() : r.get_str();
}

inline std::string int_str(const Int& n) { return n.get_str(); }

}  // namespace fppkit
