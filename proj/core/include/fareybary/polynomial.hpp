#pragma once

#include <string>
#include <vector>

#include "fareybary/rational.hpp"

namespace fareybary {

// Dense integer polynomial, coefficients lowest degree first, no
// trailing zeros (the zero polynomial has an empty coefficient list).
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Int& lead() const { return c.back(); }

    Rat eval(const Rat& x) const;
    Int eval_int(const Int& x) const;
    int sign_at(const Rat& x) const { return sgn(eval(x)); }

    IntPoly derivative() const;
    IntPoly primitive() const;  // divide by content, make leading coeff > 0
    bool operator==(const IntPoly&) const = default;

    std::string to_string() const;  // human form, e.g. "x^3 - x^2 - x - 1"
};

IntPoly poly_from_longs(std::initializer_list<long> coeffs);

// Dense rational polynomial used internally (Sturm chains, field math).
struct RatPoly {
    std::vector<Rat> c;

    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    static RatPoly from(const IntPoly& p);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Rat& lead() const { return c.back(); }

    Rat eval(const Rat& x) const;
    RatPoly derivative() const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly scaled(const Rat& k) const;
    bool operator==(const RatPoly&) const = default;
};

// quotient/remainder with remainder degree < divisor degree
struct RatPolyDiv {
    RatPoly quot, rem;
};
RatPolyDiv divmod(const RatPoly& num, const RatPoly& den);

// Extended gcd: g = gcd(a, b) monic, g = s*a + t*b.
struct RatPolyXgcd {
    RatPoly g, s, t;
};
RatPolyXgcd xgcd(const RatPoly& a, const RatPoly& b);

IntPoly clear_denominators(const RatPoly& p);  // primitive integer multiple

// Sturm chain of a squarefree polynomial; root_count counts real roots
// in the half-open interval (lo, hi].
std::vector<RatPoly> sturm_chain(const RatPoly& p);
int sign_variations(const std::vector<RatPoly>& chain, const Rat& x);
int root_count(const std::vector<RatPoly>& chain, const Rat& lo, const Rat& hi);

// Rational roots of an integer polynomial (each listed once).
std::vector<Rat> rational_roots(const IntPoly& p);

// Cauchy bound: all roots have |root| < bound.
Rat cauchy_bound(const IntPoly& p);

}  // namespace fareybary
