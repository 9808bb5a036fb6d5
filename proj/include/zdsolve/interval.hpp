#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "zdsolve/polynomial.hpp"
#include "zdsolve/rational.hpp"

namespace zdsolve {

// Closed interval with exact rational endpoints. Arithmetic is exact, so the
// usual outward rounding degenerates to plain monotone enclosure.
struct RatInterval {
    Rational lo, hi;

    RatInterval() = default;
    RatInterval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {
        if (hi < lo) throw std::invalid_argument("RatInterval: hi < lo");
    }
    static RatInterval point(const Rational& a) { return RatInterval(a, a); }

    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    bool strictly_positive() const { return lo.sign() > 0; }
    bool strictly_negative() const { return hi.sign() < 0; }

    bool overlaps(const RatInterval& o) const { return !(hi < o.lo || o.hi < lo); }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }

    RatInterval operator*(const RatInterval& o) const {
        Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        Rational mn = std::min(std::min(a, b), std::min(c, d));
        Rational mx = std::max(std::max(a, b), std::max(c, d));
        return {mn, mx};
    }

    RatInterval pow(std::uint32_t e) const {
        if (e == 0) return point(Rational(1));
        if (e == 1) return *this;
        if (e % 2 == 1 || lo.sign() >= 0) return {lo.pow(e), hi.pow(e)};
        if (hi.sign() <= 0) return {hi.pow(e), lo.pow(e)};
        // even power of an interval straddling zero
        return {Rational(0), std::max(lo.pow(e), hi.pow(e))};
    }

    RatInterval scale(const Rational& c) const {
        if (c.sign() >= 0) return {lo * c, hi * c};
        return {hi * c, lo * c};
    }

    std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
};

// Enclosure of f over a box, one term at a time. Monotone: any value of f at
// a point of the box lies inside the result.
inline RatInterval evaluate_on_box(const Polynomial<Rational>& f, const std::vector<RatInterval>& box) {
    if (box.size() != f.arity()) throw RingMismatch("evaluate_on_box: box arity");
    RatInterval acc = RatInterval::point(Rational(0));
    for (const auto& [m, c] : f.terms()) {
        RatInterval t = RatInterval::point(Rational(1));
        for (std::size_t i = 0; i < f.arity(); ++i)
            if (m.exp(i)) t = t * box[i].pow(m.exp(i));
        acc = acc + t.scale(c);
    }
    return acc;
}

}  // namespace zdsolve
