#include "fareybary/algebraic.hpp"

#include <algorithm>
#include <cmath>

#include "fareybary/bary.hpp"
#include "fareybary/farey.hpp"

namespace fareybary {

namespace {

struct Ival {
    Rat lo, hi;
};

Ival ival_add(const Ival& a, const Rat& k) { return {a.lo + k, a.hi + k}; }

Ival ival_mul(const Ival& a, const Ival& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

// Horner evaluation of g over the interval x.
Ival ival_eval(const RatPoly& g, const Ival& x) {
    Ival acc{Rat(0), Rat(0)};
    for (std::size_t i = g.c.size(); i-- > 0;) acc = ival_add(ival_mul(acc, x), g.c[i]);
    return acc;
}

// Isolating intervals (with a sign change) for every real root of an
// irreducible polynomial of degree >= 2: no rational roots, so every
// rational split point is safe.
std::vector<Ival> isolate_real_roots_irreducible(const RatPoly& f) {
    std::vector<Ival> out;
    auto chain = sturm_chain(f);
    Rat b = cauchy_bound(clear_denominators(f));
    std::vector<Ival> work{{-b, b}};
    while (!work.empty()) {
        Ival s = work.back();
        work.pop_back();
        int n = root_count(chain, s.lo, s.hi);
        if (n == 0) continue;
        if (n == 1) {
            out.push_back(s);
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        work.push_back({s.lo, mid});
        work.push_back({mid, s.hi});
    }
    std::sort(out.begin(), out.end(), [](const Ival& a, const Ival& b2) { return a.lo < b2.lo; });
    return out;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(IntPoly min_poly, Rat lo, Rat hi)
    : poly_(std::move(min_poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (poly_.degree() < 1) throw DomainError("algebraic number needs degree >= 1");
    if (lo_ > hi_) throw DomainError("empty isolating interval");
    if (poly_.degree() == 1) {
        Rat r = -Rat(poly_.c[0]) / Rat(poly_.c[1]);
        lo_ = hi_ = r;
    } else if (poly_.sign_at(lo_) * poly_.sign_at(hi_) >= 0) {
        throw DomainError("isolating interval endpoints must bracket a sign change");
    }
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rat& r) {
    IntPoly p(std::vector<Int>{Int(-r.get_num()), Int(r.get_den())});
    return AlgebraicNumber(std::move(p), r, r);
}

Rat AlgebraicNumber::rational_value() const {
    if (poly_.degree() != 1) throw DomainError("not a rational algebraic number");
    return lo_;
}

void AlgebraicNumber::refine_below(const Rat& width) const {
    if (poly_.degree() == 1) return;
    int sign_lo = poly_.sign_at(lo_);
    while (hi_ - lo_ > width) {
        Rat mid = (lo_ + hi_) / 2;
        int sm = poly_.sign_at(mid);
        if (sm == 0) throw DomainError("rational root inside an irreducible isolating interval");
        if (sm == sign_lo) {
            lo_ = mid;
        } else {
            hi_ = mid;
        }
    }
}

double AlgebraicNumber::approx() const {
    refine_below(make_rat(1, Int(1) << 60));
    return Rat((lo_ + hi_) / 2).get_d();
}

int AlgebraicNumber::sign_of_poly(const RatPoly& g) const {
    RatPoly r = divmod(g, RatPoly::from(poly_)).rem;
    if (r.is_zero()) return 0;
    if (poly_.degree() == 1) return sgn(r.eval(lo_));
    Rat width = hi_ - lo_;
    if (sgn(width) == 0) width = 1;
    for (;;) {
        Ival e = ival_eval(r, {lo_, hi_});
        if (sgn(e.lo) > 0) return 1;
        if (sgn(e.hi) < 0) return -1;
        width /= 16;
        refine_below(width);
    }
}

RatInterval AlgebraicNumber::enclose_poly(const RatPoly& g, const Rat& width) const {
    RatPoly r = divmod(g, RatPoly::from(poly_)).rem;
    refine_below(width);
    Ival e = ival_eval(r, {lo_, hi_});
    return {e.lo, e.hi};
}

IntPoly char_poly(const Mat3& m) {
    Int tr = m.a[0][0] + m.a[1][1] + m.a[2][2];
    Int m2 = m.a[0][0] * m.a[1][1] - m.a[0][1] * m.a[1][0] + m.a[0][0] * m.a[2][2] -
             m.a[0][2] * m.a[2][0] + m.a[1][1] * m.a[2][2] - m.a[1][2] * m.a[2][1];
    return IntPoly(std::vector<Int>{-m.det(), m2, -tr, Int(1)});
}

namespace {

// One real root of the inventory built while hunting for a dominant root.
struct RealRoot {
    AlgebraicNumber value;
    int multiplicity;
};

// Ensures the root's interval has a determined sign (possible since 0 is
// rational and the minimal polynomial of an irrational root excludes it).
int sign_of_root(const AlgebraicNumber& a) {
    if (a.is_rational()) return sgn(a.rational_value());
    for (;;) {
        auto iv = a.interval();
        if (sgn(iv.lo) > 0) return 1;
        if (sgn(iv.hi) < 0) return -1;
        a.refine_below(iv.width() / 16);
    }
}

RatInterval abs_interval(const AlgebraicNumber& a) {
    int s = sign_of_root(a);
    auto iv = a.interval();
    return s > 0 ? RatInterval{iv.lo, iv.hi} : RatInterval{-iv.hi, -iv.lo};
}

IntPoly reflected(const IntPoly& p) {
    std::vector<Int> c = p.c;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPoly(std::move(c)).primitive();
}

// Exact |a| vs |b| comparison for two distinct real algebraic numbers.
int cmp_abs(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_rational() && b.is_rational()) {
        Rat x = rat_abs(a.rational_value()), y = rat_abs(b.rational_value());
        return x < y ? -1 : (x == y ? 0 : 1);
    }
    // a tie |a| == |b| between non-identical reals forces b == -a, which
    // requires matching reflected minimal polynomials; test that exactly,
    // then interval refinement is guaranteed to separate the moduli.
    if (!a.is_rational() && !b.is_rational() && a.min_poly() == reflected(b.min_poly())) {
        auto ai = a.interval();
        auto bi = b.interval();
        Rat lo = std::max(ai.lo, Rat(-bi.hi));
        Rat hi = std::min(ai.hi, Rat(-bi.lo));
        if (lo <= hi) {
            auto chain = sturm_chain(RatPoly::from(a.min_poly()));
            if (root_count(chain, lo, hi) == 1) return 0;  // b == -a exactly
        }
    }
    for (;;) {
        RatInterval x = abs_interval(a), y = abs_interval(b);
        if (x.hi < y.lo) return -1;
        if (y.hi < x.lo) return 1;
        a.refine_below(a.interval().width() / 16);
        b.refine_below(b.interval().width() / 16);
    }
}

}  // namespace

AlgebraicNumber isolate_dominant_root(const IntPoly& input) {
    IntPoly p = input.primitive();
    if (p.degree() < 1 || p.degree() > 3)
        throw DomainError("dominant-root isolation supports degrees 1..3");

    // strip rational roots with multiplicity
    std::vector<RealRoot> reals;
    RatPoly rest = RatPoly::from(p);
    for (const Rat& r : rational_roots(p)) {
        RatPoly lin(std::vector<Rat>{-r, Rat(1)});
        int mult = 0;
        for (;;) {
            auto dv = divmod(rest, lin);
            if (!dv.rem.is_zero()) break;
            rest = dv.quot;
            ++mult;
        }
        reals.push_back({AlgebraicNumber::from_rational(r), mult});
    }

    // the remaining factor is irreducible (degree 2 or 3 with no rational root)
    bool has_complex_pair = false;
    Rat pair_mod2;                      // |z|^2 when it is exactly rational
    bool pair_mod_via_theta = false;    // deg-3 case: |z|^2 = pair_k / |theta|
    Rat pair_k;
    const AlgebraicNumber* theta_ptr = nullptr;

    if (rest.degree() == 2) {
        Rat disc = rest.c[1] * rest.c[1] - 4 * rest.c[2] * rest.c[0];
        if (sgn(disc) < 0) {
            has_complex_pair = true;
            pair_mod2 = rest.c[0] / rest.c[2];
        } else {
            IntPoly mp = clear_denominators(rest);
            for (const Ival& iv : isolate_real_roots_irreducible(rest))
                reals.push_back({AlgebraicNumber(mp, iv.lo, iv.hi), 1});
        }
    } else if (rest.degree() == 3) {
        IntPoly mp = clear_denominators(rest);
        auto ivs = isolate_real_roots_irreducible(rest);
        for (const Ival& iv : ivs) reals.push_back({AlgebraicNumber(mp, iv.lo, iv.hi), 1});
        if (ivs.size() == 1) {
            has_complex_pair = true;
            pair_mod_via_theta = true;
            pair_k = rat_abs(rest.c[0] / rest.c[3]);
            theta_ptr = &reals.back().value;
        }
    }

    if (reals.empty()) throw NotDominantError("no real roots");

    // strict maximum of |.| over the real roots
    std::size_t best = 0;
    bool tie = false;
    for (std::size_t i = 1; i < reals.size(); ++i) {
        int c = cmp_abs(reals[i].value, reals[best].value);
        if (c > 0) {
            best = i;
            tie = false;
        } else if (c == 0) {
            tie = true;
        }
    }
    if (tie) throw NotDominantError("two real roots share the maximal modulus");
    if (reals[best].multiplicity > 1)
        throw NotDominantError("maximal-modulus root is a repeated root");

    const AlgebraicNumber& rho = reals[best].value;

    if (has_complex_pair) {
        int cmp;  // sign of |rho|^2 - |pair|^2
        if (!pair_mod_via_theta) {
            if (rho.is_rational()) {
                Rat r2 = rho.rational_value() * rho.rational_value();
                cmp = r2 < pair_mod2 ? -1 : (r2 == pair_mod2 ? 0 : 1);
            } else {
                // sign of rho^2 - m at rho
                cmp = rho.sign_of_poly(RatPoly(std::vector<Rat>{-pair_mod2, Rat(0), Rat(1)}));
            }
        } else {
            // |z|^2 = pair_k / |theta|; compare |rho|^2 * |theta| with pair_k
            const AlgebraicNumber& th = *theta_ptr;
            int sth = sign_of_root(th);
            if (&rho == theta_ptr) {
                // |theta|^3 vs pair_k: sign of sth^3 * x^3 - pair_k at theta
                RatPoly g(std::vector<Rat>{-pair_k, Rat(0), Rat(0), Rat(sth)});
                cmp = th.sign_of_poly(g);
            } else {
                // rho is rational here (the cubic factor owns theta alone)
                Rat r2 = rho.rational_value() * rho.rational_value();
                RatPoly g(std::vector<Rat>{-pair_k, r2 * sth});
                cmp = th.sign_of_poly(g);
            }
        }
        if (cmp <= 0) throw NotDominantError("complex pair modulus is not exceeded");
    }

    return rho;
}

// ---------------------------------------------------------------------------
// NumberField

NumberField::NumberField(IntPoly modulus, AlgebraicNumber root)
    : modulus_(std::move(modulus)), root_(std::move(root)), modulus_rat_(RatPoly::from(modulus_)) {
    if (modulus_.degree() < 1 || modulus_.degree() > 3)
        throw DomainError("number field degree must be 1..3");
    if (!(root_.min_poly() == modulus_)) throw DomainError("field root/modulus mismatch");
}

NumberField::Elem NumberField::zero() const { return Elem(degree(), Rat(0)); }

NumberField::Elem NumberField::one() const {
    Elem e = zero();
    e[0] = 1;
    return e;
}

NumberField::Elem NumberField::from_rat(const Rat& r) const {
    Elem e = zero();
    e[0] = r;
    return e;
}

NumberField::Elem NumberField::generator() const {
    if (degree() == 1) return from_rat(root_.rational_value());
    Elem e = zero();
    e[1] = 1;
    return e;
}

bool NumberField::is_zero(const Elem& e) const {
    for (const auto& v : e)
        if (sgn(v) != 0) return false;
    return true;
}

NumberField::Elem NumberField::add(const Elem& a, const Elem& b) const {
    Elem out = a;
    for (int i = 0; i < degree(); ++i) out[i] += b[i];
    return out;
}

NumberField::Elem NumberField::sub(const Elem& a, const Elem& b) const {
    Elem out = a;
    for (int i = 0; i < degree(); ++i) out[i] -= b[i];
    return out;
}

NumberField::Elem NumberField::scale(const Elem& a, const Rat& k) const {
    Elem out = a;
    for (auto& v : out) v *= k;
    return out;
}

NumberField::Elem NumberField::neg(const Elem& a) const { return scale(a, Rat(-1)); }

NumberField::Elem NumberField::mul(const Elem& a, const Elem& b) const {
    RatPoly prod = to_poly(a) * to_poly(b);
    RatPoly red = divmod(prod, modulus_rat_).rem;
    Elem out = zero();
    for (std::size_t i = 0; i < red.c.size(); ++i) out[i] = red.c[i];
    return out;
}

NumberField::Elem NumberField::inv(const Elem& a) const {
    if (is_zero(a)) throw DomainError("division by zero in number field");
    if (degree() == 1) {
        Elem out = zero();
        out[0] = 1 / a[0];
        return out;
    }
    auto x = xgcd(to_poly(a), modulus_rat_);
    if (x.g.degree() != 0) throw DomainError("modulus is not irreducible");
    RatPoly s = x.s.scaled(1 / x.g.c[0]);
    RatPoly red = divmod(s, modulus_rat_).rem;
    Elem out = zero();
    for (std::size_t i = 0; i < red.c.size(); ++i) out[i] = red.c[i];
    return out;
}

RatPoly NumberField::to_poly(const Elem& e) const {
    return RatPoly(std::vector<Rat>(e.begin(), e.end()));
}

double NumberField::approx(const Elem& e) const {
    RatInterval iv = enclose(e, make_rat(1, Int(1) << 60));
    return Rat(iv.mid()).get_d();
}

namespace {

// Particular solution of (columns) * x = rhs over the rationals, if any.
bool solve_linear(std::vector<std::vector<Rat>> cols, std::vector<Rat> rhs, std::vector<Rat>& out) {
    std::size_t rows = rhs.size(), ncols = cols.size();
    std::vector<std::size_t> pivot_col_of_row(rows, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < rows; ++c) {
        std::size_t piv = SIZE_MAX;
        for (std::size_t r = rank; r < rows; ++r)
            if (sgn(cols[c][r]) != 0) {
                piv = r;
                break;
            }
        if (piv == SIZE_MAX) continue;
        for (std::size_t cc = 0; cc < ncols; ++cc) std::swap(cols[cc][piv], cols[cc][rank]);
        std::swap(rhs[piv], rhs[rank]);
        Rat inv = 1 / cols[c][rank];
        for (std::size_t cc = 0; cc < ncols; ++cc) cols[cc][rank] *= inv;
        rhs[rank] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || sgn(cols[c][r]) == 0) continue;
            Rat f = cols[c][r];
            for (std::size_t cc = 0; cc < ncols; ++cc) cols[cc][r] -= f * cols[cc][rank];
            rhs[r] -= f * rhs[rank];
        }
        pivot_col_of_row[rank] = c;
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (sgn(rhs[r]) != 0) return false;  // inconsistent
    out.assign(ncols, Rat(0));
    for (std::size_t r = 0; r < rank; ++r) out[pivot_col_of_row[r]] = rhs[r];
    return true;
}

}  // namespace

IntPoly NumberField::minimal_polynomial(const Elem& e) const {
    int d = degree();
    std::vector<Elem> powers{one()};
    for (int i = 1; i <= d; ++i) powers.push_back(mul(powers.back(), e));
    for (int m = 1; m <= d; ++m) {
        std::vector<std::vector<Rat>> cols;
        for (int j = 0; j < m; ++j)
            cols.emplace_back(powers[j].begin(), powers[j].end());
        std::vector<Rat> rhs(powers[m].begin(), powers[m].end());
        std::vector<Rat> sol;
        if (solve_linear(std::move(cols), std::move(rhs), sol)) {
            std::vector<Rat> mono(m + 1, Rat(0));
            for (int j = 0; j < m; ++j) mono[j] = -sol[j];
            mono[m] = 1;
            return clear_denominators(RatPoly(std::move(mono)));
        }
    }
    throw DomainError("minimal polynomial not found (internal)");
}

AlgebraicNumber NumberField::to_algebraic(const Elem& e) const {
    IntPoly mp = minimal_polynomial(e);
    if (mp.degree() == 1) return AlgebraicNumber::from_rational(-Rat(mp.c[0]) / Rat(mp.c[1]));
    auto chain = sturm_chain(RatPoly::from(mp));
    Rat width(1, 16);
    for (int iter = 0; iter < 512; ++iter) {
        RatInterval iv = enclose(e, width);
        if (root_count(chain, iv.lo, iv.hi) == 1 && mp.sign_at(iv.lo) * mp.sign_at(iv.hi) < 0)
            return AlgebraicNumber(mp, iv.lo, iv.hi);
        width /= 16;
    }
    throw DomainError("failed to isolate element of number field (internal)");
}

// ---------------------------------------------------------------------------
// AlgebraicPoint

AlgebraicPoint::AlgebraicPoint(std::shared_ptr<const NumberField> field, NumberField::Elem x,
                               NumberField::Elem y)
    : field_(std::move(field)), x_(std::move(x)), y_(std::move(y)) {
    if (!field_) throw DomainError("algebraic point needs a field");
}

int AlgebraicPoint::sign_of(const Rat& c0, const Rat& c1, const Rat& c2) const {
    NumberField::Elem e = field_->from_rat(c0);
    e = field_->add(e, field_->scale(x_, c1));
    e = field_->add(e, field_->scale(y_, c2));
    return field_->sign(e);
}

// ---------------------------------------------------------------------------
// Periodicity theorems, executable

namespace {

Mat3 fold_steps(const ExpansionSequence& seq) {
    Mat3 m = Mat3::identity();
    for (const auto& s : seq.steps) m = m * step_matrix(s.tag, s.a);
    return m;
}

}  // namespace

CubicPairResult periodic_to_cubic(const PeriodicSpec& spec) {
    if (spec.period.steps.empty()) throw DomainError("period must be nonempty");
    Mat3 A = fold_steps(spec.period);
    IntPoly cp = char_poly(A);
    AlgebraicNumber lambda = isolate_dominant_root(cp);

    auto field = std::make_shared<NumberField>(lambda.min_poly(), lambda);
    int d = field->degree();
    NumberField::Elem lam = field->generator();

    // N = A - lambda I; its adjugate's nonzero columns span the eigenspace
    std::array<std::array<NumberField::Elem, 3>, 3> N;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            N[i][j] = field->from_rat(Rat(A.a[i][j]));
            if (i == j) N[i][j] = field->sub(N[i][j], lam);
        }
    auto cof = [&](int i, int j) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        return field->sub(field->mul(N[r0][c0], N[r1][c1]), field->mul(N[r0][c1], N[r1][c0]));
    };
    std::array<NumberField::Elem, 3> w{field->zero(), field->zero(), field->zero()};
    bool found = false;
    for (int j = 0; j < 3 && !found; ++j) {
        // column j of adj(N): entries adj[i][j] = cofactor(j, i)
        std::array<NumberField::Elem, 3> col{cof(j, 0), cof(j, 1), cof(j, 2)};
        for (int i = 0; i < 3; ++i)
            if (!field->is_zero(col[i])) {
                w = col;
                found = true;
                break;
            }
    }
    if (!found) throw DomainError("eigenvalue is not simple (adjugate vanished)");

    Mat3 front = base_matrix() * fold_steps(spec.preperiod);
    std::array<NumberField::Elem, 3> u{field->zero(), field->zero(), field->zero()};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            u[i] = field->add(u[i], field->scale(w[j], Rat(front.a[i][j])));
    if (field->is_zero(u[2])) throw DomainError("periodic point degenerated to infinity");

    NumberField::Elem alpha = field->div(u[0], u[2]);
    NumberField::Elem beta = field->div(u[1], u[2]);

    CubicPairResult out{
        .field_poly = lambda.min_poly(),
        .field_degree = d,
        .lambda = lambda,
        .alpha = field->to_algebraic(alpha),
        .beta = field->to_algebraic(beta),
        .alpha_box = {},
        .beta_box = {},
        .point = AlgebraicPoint(field, alpha, beta),
    };

    Rat width(1, 16);
    Rat target = make_rat(1, Int(1) << 48);
    for (int iter = 0; iter < 512; ++iter) {
        out.alpha_box = field->enclose(alpha, width);
        out.beta_box = field->enclose(beta, width);
        if (out.alpha_box.width() <= target && out.beta_box.width() <= target) break;
        width /= 16;
    }
    return out;
}

PlanePoint periodic_to_rational(const PeriodicSpec& spec) {
    return periodic_fixed_point(spec.preperiod, spec.period);
}

}  // namespace fareybary
