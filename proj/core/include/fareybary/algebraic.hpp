#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "fareybary/geometry.hpp"
#include "fareybary/polynomial.hpp"
#include "fareybary/sequence.hpp"

namespace fareybary {

// Closed rational interval; the refinement helpers below keep signs exact.
struct RatInterval {
    Rat lo, hi;

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

// Real algebraic number: irreducible integer min_poly plus an isolating
// interval containing exactly this root. The interval only ever narrows,
// so refinement is logically const; the cached interval is not
// synchronized, so share one instance across threads only with external
// locking (distinct instances are independent).
class AlgebraicNumber {
public:
    AlgebraicNumber(IntPoly min_poly, Rat lo, Rat hi);
    static AlgebraicNumber from_rational(const Rat& r);

    const IntPoly& min_poly() const { return poly_; }
    RatInterval interval() const { return {lo_, hi_}; }
    int degree() const { return poly_.degree(); }
    bool is_rational() const { return poly_.degree() == 1; }
    Rat rational_value() const;  // degree-1 only

    void refine_below(const Rat& width) const;  // bisection, exact signs
    double approx() const;

    // Exact sign of g(theta) for rational-coefficient g: zero iff g reduces
    // to 0 modulo min_poly, otherwise determined by interval refinement.
    int sign_of_poly(const RatPoly& g) const;

    // Enclosure of g(theta) after refining theta below `width`.
    RatInterval enclose_poly(const RatPoly& g, const Rat& width) const;

private:
    IntPoly poly_;
    mutable Rat lo_, hi_;
};

// det(xI - M), exact integer coefficients.
IntPoly char_poly(const Mat3& m);

// Isolating data for the real root strictly exceeding every other root
// of p in modulus; throws NotDominantError when no such root exists
// (including multiplicity > 1 ties, e.g. (x-1)^3).
AlgebraicNumber isolate_dominant_root(const IntPoly& p);

// Number field Q[x]/(modulus) of degree <= 3 with a distinguished real
// embedding given by the isolating interval of `root`. Elements are
// coordinate vectors on the power basis.
class NumberField {
public:
    NumberField(IntPoly modulus, AlgebraicNumber root);

    int degree() const { return modulus_.degree(); }
    const IntPoly& modulus() const { return modulus_; }
    const AlgebraicNumber& root() const { return root_; }

    using Elem = std::vector<Rat>;  // size == degree()

    Elem zero() const;
    Elem one() const;
    Elem from_rat(const Rat& r) const;
    Elem generator() const;  // the class of x
    bool is_zero(const Elem& e) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(const Elem& a, const Rat& k) const;
    Elem neg(const Elem& a) const;
    Elem inv(const Elem& a) const;  // throws DomainError on zero
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    RatPoly to_poly(const Elem& e) const;
    int sign(const Elem& e) const { return root_.sign_of_poly(to_poly(e)); }
    RatInterval enclose(const Elem& e, const Rat& width) const {
        return root_.enclose_poly(to_poly(e), width);
    }
    double approx(const Elem& e) const;

    // Minimal polynomial of the element under the real embedding, as a
    // primitive integer polynomial (degree divides the field degree).
    IntPoly minimal_polynomial(const Elem& e) const;

    // The element as a standalone algebraic number with isolating interval.
    AlgebraicNumber to_algebraic(const Elem& e) const;

private:
    IntPoly modulus_;
    AlgebraicNumber root_;
    RatPoly modulus_rat_;
};

// A point of the triangle with algebraic coordinates living in one
// number field; exposes the same exact sign oracle as PlanePoint, so
// expand()/locate()/delta() accept it directly.
class AlgebraicPoint {
public:
    AlgebraicPoint(std::shared_ptr<const NumberField> field, NumberField::Elem x, NumberField::Elem y);

    const NumberField& field() const { return *field_; }
    const NumberField::Elem& x() const { return x_; }
    const NumberField::Elem& y() const { return y_; }

    int sign_of(const Rat& c0, const Rat& c1, const Rat& c2) const;

    RatInterval x_interval(const Rat& width) const { return field_->enclose(x_, width); }
    RatInterval y_interval(const Rat& width) const { return field_->enclose(y_, width); }
    double approx_x() const { return field_->approx(x_); }
    double approx_y() const { return field_->approx(y_); }

private:
    std::shared_ptr<const NumberField> field_;
    NumberField::Elem x_, y_;
};

// Preperiod + nonempty period, both in compressed form with the
// conventions holding across the concatenation boundary.
struct PeriodicSpec {
    ExpansionSequence preperiod;
    ExpansionSequence period;
};

struct CubicPairResult {
    IntPoly field_poly;        // minimal polynomial of the dominant eigenvalue
    int field_degree;          // dim_Q Q[alpha, beta] certificate (<= 3)
    AlgebraicNumber lambda;    // the dominant eigenvalue itself
    AlgebraicNumber alpha, beta;
    RatInterval alpha_box, beta_box;  // certified point enclosure
    AlgebraicPoint point;      // (alpha, beta) as an expandable point
};

// Executable content of the periodicity theorem for the Farey side:
// an eventually periodic sequence determines a pair of algebraic
// numbers of degree <= 3 generating a field of dimension <= 3.
CubicPairResult periodic_to_cubic(const PeriodicSpec& spec);

// Bary-side counterpart: the point is exactly rational.
PlanePoint periodic_to_rational(const PeriodicSpec& spec);

}  // namespace fareybary
