#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fareybary {

// Arbitrary-precision integers and rationals. Rat values are kept
// canonical (positive denominator, reduced) by gmp; construction from
// raw numerator/denominator pairs must go through make_rat.
using Int = mpz_class;
using Rat = mpq_class;

// Domain violations (point outside triangle, degenerate input, bad syntax).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Periodic matrix lacks a strictly dominant real eigenvalue.
struct NotDominantError : std::runtime_error {
    explicit NotDominantError(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(Int num, Int den) {
    if (sgn(den) == 0) throw DomainError("rational with zero denominator");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline int sign(const Rat& r) { return sgn(r); }
inline int sign(const Int& z) { return sgn(z); }

inline Int pow_int(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Int pow3(unsigned long e) { return pow_int(3, e); }

inline Rat rat_abs(const Rat& r) { return sgn(r) < 0 ? Rat(-r) : r; }

// Parses "p/q" or "p" with optional sign; rejects anything else.
Rat parse_rat(const std::string& text);

std::string format_rat(const Rat& r);

// Exact decimal rendering with the given number of fraction digits,
// round-half-up; used for deterministic SVG output.
std::string to_decimal(const Rat& r, int digits);

// log2 of a positive integer as a double, safe for huge operands.
double log2_approx(const Int& z);

}  // namespace fareybary
