#pragma once

// Exact rational coefficients. All identities verified by this library are
// exact algebraic identities over Q at a specialized parameter point, so the
// scalar type is a GMP-backed rational with no rounding anywhere.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qbn {

using Scalar = mpq_class;

inline Scalar scalar_inverse(const Scalar& a) {
    if (a == 0) throw std::domain_error("division by zero scalar");
    Scalar r;
    mpq_inv(r.get_mpq_t(), a.get_mpq_t());
    return r;
}

/// Integer power with negative exponents allowed.
inline Scalar scalar_pow(const Scalar& base, long e) {
    if (e == 0) return Scalar(1);
    Scalar b = e < 0 ? scalar_inverse(base) : base;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Scalar acc(1);
    while (k > 0) {
        if (k & 1UL) acc *= b;
        b *= b;
        k >>= 1UL;
    }
    return acc;
}

/// "num/den" (or "num" when the denominator is 1), canonical form.
inline std::string scalar_str(const Scalar& a) {
    return a.get_str();
}

inline Scalar scalar_parse(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    v.canonicalize();
    return v;
}

}  // namespace qbn
