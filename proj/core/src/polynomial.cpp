#include "fareybary/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace fareybary {

namespace {

template <class Vec>
void strip_zeros(Vec& c) {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { strip_zeros(c); }

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

Int IntPoly::eval_int(const Int& x) const {
    Int acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

IntPoly IntPoly::derivative() const {
    std::vector<Int> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Int(static_cast<long>(i)));
    return IntPoly(std::move(d));
}

IntPoly IntPoly::primitive() const {
    if (c.empty()) return {};
    Int g = 0;
    for (const auto& k : c) g = gcd(g, k);
    if (sgn(c.back()) < 0) g = -g;
    std::vector<Int> out;
    out.reserve(c.size());
    for (const auto& k : c) out.push_back(k / g);
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (sgn(c[i]) == 0) continue;
        Int mag = abs(c[i]);
        if (first) {
            if (sgn(c[i]) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c[i]) < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) out << mag.get_str();
        if (i >= 1) {
            out << "x";
            if (i >= 2) out << "^" << i;
        }
    }
    return out.str();
}

IntPoly poly_from_longs(std::initializer_list<long> coeffs) {
    std::vector<Int> c;
    for (long v : coeffs) c.emplace_back(v);
    return IntPoly(std::move(c));
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { strip_zeros(c); }

RatPoly RatPoly::from(const IntPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.c.size());
    for (const auto& k : p.c) c.emplace_back(k);
    return RatPoly(std::move(c));
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

RatPoly RatPoly::derivative() const {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long>(i));
    return RatPoly(std::move(d));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> out(std::max(c.size(), o.c.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) out[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) out[i] += o.c[i];
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<Rat> out(std::max(c.size(), o.c.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) out[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) out[i] -= o.c[i];
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> out(c.size() + o.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j) out[i + j] += c[i] * o.c[j];
    return RatPoly(std::move(out));
}

RatPoly RatPoly::scaled(const Rat& k) const {
    std::vector<Rat> out;
    out.reserve(c.size());
    for (const auto& v : c) out.push_back(v * k);
    return RatPoly(std::move(out));
}

RatPolyDiv divmod(const RatPoly& num, const RatPoly& den) {
    if (den.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rat> rem = num.c;
    std::vector<Rat> quot;
    int dd = den.degree();
    if (num.degree() >= dd) quot.assign(num.degree() - dd + 1, Rat(0));
    while (static_cast<int>(rem.size()) - 1 >= dd) {
        strip_zeros(rem);
        if (static_cast<int>(rem.size()) - 1 < dd) break;
        std::size_t k = rem.size() - 1 - dd;
        Rat f = rem.back() / den.lead();
        quot[k] = f;
        for (int i = 0; i <= dd; ++i) rem[k + i] -= f * den.c[i];
        rem.pop_back();
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPolyXgcd xgcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0(std::vector<Rat>{Rat(1)}), s1;
    RatPoly t0, t1(std::vector<Rat>{Rat(1)});
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s2 = s0 - q * s1;
        RatPoly t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rat inv_lead = 1 / r0.lead();
    return {r0.scaled(inv_lead), s0.scaled(inv_lead), t0.scaled(inv_lead)};
}

IntPoly clear_denominators(const RatPoly& p) {
    Int den = 1;
    for (const auto& v : p.c) den = lcm(den, v.get_den());
    std::vector<Int> out;
    out.reserve(p.c.size());
    for (const auto& v : p.c) out.push_back(Int(v.get_num() * (den / v.get_den())));
    return IntPoly(std::move(out)).primitive();
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    RatPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    for (;;) {
        const RatPoly& a = chain[chain.size() - 2];
        const RatPoly& b = chain.back();
        RatPoly r = divmod(a, b).rem;
        if (r.is_zero()) break;
        chain.push_back(r.scaled(Rat(-1)));
        if (chain.back().degree() == 0) break;
    }
    return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rat& x) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int root_count(const std::vector<RatPoly>& chain, const Rat& lo, const Rat& hi) {
    if (lo > hi) throw DomainError("root_count: empty interval");
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

Rat cauchy_bound(const IntPoly& p) {
    if (p.degree() < 1) throw DomainError("cauchy_bound needs degree >= 1");
    Rat best(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat q = make_rat(abs(p.c[i]), abs(p.lead()));
        if (q > best) best = q;
    }
    return best + 1;
}

namespace {

// Integer roots of a monic integer polynomial via Sturm isolation and
// exact candidate testing; avoids factoring large constant terms.
std::vector<Int> integer_roots_monic(const IntPoly& p) {
    std::vector<Int> roots;
    if (p.degree() < 1) return roots;
    // squarefree part for the Sturm chain
    RatPoly rp = RatPoly::from(p);
    auto g = xgcd(rp, rp.derivative()).g;
    RatPoly sf = g.degree() >= 1 ? divmod(rp, g).quot : rp;
    auto chain = sturm_chain(sf);
    Rat bound = cauchy_bound(p);
    struct Span {
        Rat lo, hi;
    };
    std::vector<Span> work{{-bound, bound}};
    while (!work.empty()) {
        Span s = work.back();
        work.pop_back();
        int n = root_count(chain, s.lo, s.hi);
        if (n == 0) continue;
        if (s.hi - s.lo < Rat(1, 2)) {
            // at most one integer candidate in the interval
            Int cand = s.hi.get_num() / s.hi.get_den();
            for (Int z = cand - 1; z <= cand + 1; ++z)
                if (z > s.lo && z <= s.hi && sgn(p.eval_int(z)) == 0) roots.push_back(z);
            if (n == 1) continue;
        }
        // rational roots of a monic integer polynomial are integers, so
        // any non-integer split point keeps the Sturm endpoints root-free
        Rat w = s.hi - s.lo;
        Rat mid = s.lo + w / 2;
        Rat frac = w / 4;
        while (mid.get_den() == 1) {
            mid = s.lo + frac;
            frac /= 2;
        }
        work.push_back({s.lo, mid});
        work.push_back({mid, s.hi});
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace

std::vector<Rat> rational_roots(const IntPoly& p) {
    std::vector<Rat> out;
    if (p.degree() < 1) return out;
    // roots of p(x) with leading coefficient L correspond to integer
    // roots of the monic L^(n-1) p(y/L) under y = Lx
    const Int& L = p.lead();
    int n = p.degree();
    // y = Lx turns p into the monic L^(n-1) p(y/L) with integer coefficients
    std::vector<Int> scaled(n + 1);
    scaled[n] = 1;
    Int pw = 1;
    for (int i = n - 1; i >= 0; --i) {
        scaled[i] = p.c[i] * pw;
        pw *= L;
    }
    for (const Int& z : integer_roots_monic(IntPoly(std::move(scaled))))
        out.push_back(make_rat(z, L));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace fareybary
