#pragma once

#include <memory>
#include <vector>

#include "zdsolve/field.hpp"
#include "zdsolve/interval.hpp"
#include "zdsolve/rational.hpp"

namespace zdsolve {

// Dense univariate polynomial, coefficients ascending by degree.
// Zero polynomial has no coefficients; otherwise the top coefficient is
// nonzero.
template <CoefficientField F>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(F c) { return UniPoly(std::vector<F>{std::move(c)}); }
    static UniPoly identity_t() { return UniPoly(std::vector<F>{F::zero(), F::one()}); }

    const std::vector<F>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const F& operator[](std::size_t i) const { return c_[i]; }
    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F::zero(); }
    const F& leading() const {
        if (c_.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator-() const {
        std::vector<F> r(c_);
        for (auto& x : r) x = -x;
        return UniPoly(std::move(r));
    }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<F> r(std::max(c_.size(), o.c_.size()), F::zero());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
        return UniPoly(std::move(r));
    }

    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }

    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        std::vector<F> r(c_.size() + o.c_.size() - 1, F::zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return UniPoly(std::move(r));
    }

    UniPoly scale(const F& s) const {
        std::vector<F> r(c_);
        for (auto& x : r) x = x * s;
        return UniPoly(std::move(r));
    }

    UniPoly shift_up(std::size_t k) const {  // multiply by t^k
        if (is_zero()) return UniPoly();
        std::vector<F> r(k, F::zero());
        r.insert(r.end(), c_.begin(), c_.end());
        return UniPoly(std::move(r));
    }

    UniPoly monic() const {
        if (is_zero()) return UniPoly();
        F inv = F::one() / leading();
        return scale(inv);
    }

    // Euclidean division; divisor must be nonzero.
    struct DivMod {
        UniPoly quotient, remainder;
    };
    DivMod divmod(const UniPoly& d) const {
        if (d.is_zero()) throw ZeroPolynomial("divmod: zero divisor");
        std::vector<F> rem(c_);
        int dd = d.degree();
        if (degree() < dd) return {UniPoly(), *this};
        std::vector<F> quot(c_.size() - d.c_.size() + 1, F::zero());
        for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
            if (rem[k].is_zero()) continue;
            F f = rem[k] / d.c_.back();
            quot[k - dd] = f;
            for (int j = 0; j <= dd; ++j) rem[k - dd + j] = rem[k - dd + j] - f * d.c_[j];
        }
        return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<F> r(c_.size() - 1, F::zero());
        F k = F::zero();
        for (std::size_t i = 1; i < c_.size(); ++i) {
            k = k + F::one();
            r[i - 1] = c_[i] * k;
        }
        return UniPoly(std::move(r));
    }

    F evaluate(const F& x) const {
        F acc = F::zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Interval extension via Horner.
    RatInterval evaluate(const RatInterval& x) const
        requires std::same_as<F, Rational>
    {
        RatInterval acc = RatInterval::point(Rational(0));
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + RatInterval::point(c_[i]);
        return acc;
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            std::string cs = c_[i].str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (s.empty()) {
                if (neg) s += "-";
            } else {
                s += neg ? " - " : " + ";
            }
            if (neg) cs = cs.substr(1);
            if (i == 0) {
                s += cs;
            } else {
                if (cs != "1") s += cs + "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<F> c_;
};

using QUniPoly = UniPoly<Rational>;

// --- gcd / squarefree -------------------------------------------------------

// Generic Euclidean gcd with monic normalization each step.
template <CoefficientField F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
    while (!b.is_zero()) {
        UniPoly<F> r = a.divmod(b).remainder;
        a = std::move(b);
        b = r.is_zero() ? UniPoly<F>() : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

namespace detail {

using ZVec = std::vector<mpz_class>;  // ascending, integer coefficients

inline void ztrim(ZVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline mpz_class zcontent(const ZVec& v) {
    mpz_class g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline void zdivexact(ZVec& v, const mpz_class& d) {
    if (d == 1) return;
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

// Clears denominators and strips content; result is primitive with the sign
// of the leading coefficient preserved.
inline ZVec to_primitive_z(const QUniPoly& p) {
    mpz_class den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
    ZVec v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c.numerator() * (den / c.denominator()));
    mpz_class g = zcontent(v);
    if (g > 1) zdivexact(v, g);
    return v;
}

inline QUniPoly from_z(const ZVec& v) {
    std::vector<Rational> c;
    c.reserve(v.size());
    for (const auto& x : v) c.emplace_back(x);
    return QUniPoly(std::move(c));
}

// Pseudo-remainder prem(a, b) scaled so that it equals lc(b)^k * rem(a, b)
// with lc(b)^k > 0 (sign-faithful for Sturm use).
inline ZVec sign_safe_prem(const ZVec& a, const ZVec& b) {
    ZVec r(a);
    ztrim(r);
    const int db = static_cast<int>(b.size()) - 1;
    const mpz_class& lb = b.back();
    int steps = 0;
    while (static_cast<int>(r.size()) - 1 >= db) {
        int dr = static_cast<int>(r.size()) - 1;
        mpz_class head = r.back();
        for (auto& x : r) x *= lb;
        for (int j = 0; j <= db; ++j) r[dr - db + j] -= head * b[j];
        ztrim(r);
        ++steps;
        if (r.empty()) break;
    }
    // Multiplied a by lc(b)^steps; flip sign if that factor is negative.
    if (lb < 0 && (steps % 2) == 1)
        for (auto& x : r) x = -x;
    return r;
}

}  // namespace detail

// gcd specialised to Q: primitive polynomials over Z to avoid the coefficient
// blowup of naive Euclid.
inline QUniPoly gcd(const QUniPoly& a, const QUniPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    detail::ZVec x = detail::to_primitive_z(a);
    detail::ZVec y = detail::to_primitive_z(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        detail::ZVec r = detail::sign_safe_prem(x, y);
        mpz_class g = detail::zcontent(r);
        if (g > 1) detail::zdivexact(r, g);
        x = std::move(y);
        y = std::move(r);
    }
    return detail::from_z(x).monic();
}

// p / gcd(p, p'), monic: same distinct roots, all simple.
template <CoefficientField F>
UniPoly<F> squarefree_part(const UniPoly<F>& p) {
    if (p.is_zero()) throw ZeroPolynomial("squarefree_part of zero polynomial");
    if (p.degree() == 0) return UniPoly<F>::constant(F::one());
    UniPoly<F> g = gcd(p, p.derivative());
    if (g.degree() == 0) return p.monic();
    return p.divmod(g).quotient.monic();
}

// --- Sturm sequences and real-root isolation (exact, Q only) ----------------

// Sturm chain of a squarefree polynomial, kept as primitive integer
// polynomials (positive rescaling preserves sign variations).
class SturmChain {
public:
    explicit SturmChain(const QUniPoly& squarefree) {
        detail::ZVec s0 = detail::to_primitive_z(squarefree);
        chain_.push_back(s0);
        if (s0.size() <= 1) return;
        detail::ZVec s1;
        for (std::size_t i = 1; i < s0.size(); ++i) s1.push_back(s0[i] * static_cast<long>(i));
        mpz_class g = detail::zcontent(s1);
        if (g > 1) detail::zdivexact(s1, g);
        chain_.push_back(s1);
        while (chain_.back().size() > 1) {
            detail::ZVec r = detail::sign_safe_prem(chain_[chain_.size() - 2], chain_.back());
            if (r.empty()) break;
            for (auto& x : r) x = -x;
            mpz_class c = detail::zcontent(r);
            if (c > 1) detail::zdivexact(r, c);
            chain_.push_back(std::move(r));
        }
    }

    // Sign variations of the chain at x (zeros skipped).
    int variations(const Rational& x) const {
        int var = 0, prev = 0;
        for (const auto& poly : chain_) {
            int s = sign_at(poly, x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    // Number of distinct real roots in (a, b]; requires a <= b.
    int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

    static int sign_at(const detail::ZVec& poly, const Rational& x) {
        // Horner with separated numerator/denominator: sign of sum c_i n^i d^(k-i)
        mpz_class num = x.numerator(), den = x.denominator();
        mpz_class acc = 0;
        for (std::size_t i = poly.size(); i-- > 0;) acc = acc * num + poly[i] * pow_mpz(den, poly.size() - 1 - i);
        return sgn(acc);
    }

private:
    static mpz_class pow_mpz(const mpz_class& b, std::size_t e) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
        return r;
    }
    std::vector<detail::ZVec> chain_;
};

// Rational-endpoint bracket around exactly one real root of `subject`
// (squarefree). lo == hi marks an exact rational root.
struct IsolatingInterval {
    Rational lo, hi;
    std::shared_ptr<const QUniPoly> subject;

    bool is_exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    RatInterval as_interval() const { return RatInterval(lo, hi); }
};

// Count of distinct real roots in the open interval (a, b).
// Requires p squarefree with p(a) != 0 and p(b) != 0.
inline int sturm_count(const QUniPoly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw ZeroPolynomial("sturm_count: zero polynomial");
    if (!(a < b)) throw std::invalid_argument("sturm_count: need a < b");
    if (p.evaluate(a).is_zero() || p.evaluate(b).is_zero())
        throw std::invalid_argument("sturm_count: endpoint is a root");
    SturmChain chain(p);
    return chain.count(a, b);
}

// Strict bound on the absolute value of every real root.
inline Rational cauchy_root_bound(const QUniPoly& p) {
    if (p.is_zero() || p.degree() == 0) return Rational(1);
    Rational m(0);
    Rational lead = p.leading().abs();
    for (int i = 0; i < p.degree(); ++i) {
        Rational q = p.coeff(i).abs() / lead;
        if (q > m) m = q;
    }
    return m + Rational(1);
}

// Disjoint isolating intervals, one per distinct real root, ascending.
inline std::vector<IsolatingInterval> isolate_roots(const QUniPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("isolate_roots of zero polynomial");
    std::vector<IsolatingInterval> out;
    if (p.degree() == 0) return out;
    auto sf = std::make_shared<const QUniPoly>(squarefree_part(p));
    SturmChain chain(*sf);
    Rational bound = cauchy_root_bound(*sf);

    struct Seg {
        Rational a, b;
        int count;
    };
    std::vector<Seg> stack;
    int total = chain.count(-bound, bound);
    if (total > 0) stack.push_back({-bound, bound, total});

    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 1) {
            out.push_back({s.a, s.b, sf});
            continue;
        }
        Rational m = (s.a + s.b) / Rational(2);
        if (sf->evaluate(m).is_zero()) {
            out.push_back({m, m, sf});
            // shrink symmetric gap around m until it contains no other root
            Rational d = (s.b - s.a) / Rational(4);
            while (sf->evaluate(m - d).is_zero() || sf->evaluate(m + d).is_zero() ||
                   chain.count(m - d, m + d) != 1)
                d = d / Rational(2);
            int left = chain.count(s.a, m - d);
            int right = chain.count(m + d, s.b);
            if (left > 0) stack.push_back({s.a, m - d, left});
            if (right > 0) stack.push_back({m + d, s.b, right});
        } else {
            int left = chain.count(s.a, m);
            int right = s.count - left;
            if (left > 0) stack.push_back({s.a, m, left});
            if (right > 0) stack.push_back({m, s.b, right});
        }
    }
    std::sort(out.begin(), out.end(), [](const IsolatingInterval& x, const IsolatingInterval& y) {
        return x.lo < y.lo;
    });
    return out;
}

// Sign-preserving bisection until width <= eps. Exact rational roots collapse
// to a point bracket.
inline IsolatingInterval refine(IsolatingInterval iv, const Rational& eps) {
    if (iv.is_exact()) return iv;
    const QUniPoly& p = *iv.subject;
    int slo = p.evaluate(iv.lo).sign();
    int shi = p.evaluate(iv.hi).sign();
    // Endpoint roots can only appear if the caller built the interval by hand.
    if (slo == 0) return {iv.lo, iv.lo, iv.subject};
    if (shi == 0) return {iv.hi, iv.hi, iv.subject};
    while (iv.hi - iv.lo > eps) {
        Rational m = iv.midpoint();
        int sm = p.evaluate(m).sign();
        if (sm == 0) return {m, m, iv.subject};
        if (sm == slo)
            iv.lo = m;
        else
            iv.hi = m;
    }
    return iv;
}

}  // namespace zdsolve
