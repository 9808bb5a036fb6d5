#pragma once

#include <functional>
#include <map>
#include <vector>

#include "zdsolve/polynomial.hpp"

namespace zdsolve {

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class OrderMismatch : public std::invalid_argument {
public:
    explicit OrderMismatch(const std::string& what) : std::invalid_argument(what) {}
};

template <CoefficientField F>
struct Ideal {
    VarSetPtr ring;
    std::vector<Polynomial<F>> generators;

    static Ideal of(std::vector<Polynomial<F>> gens) {
        if (gens.empty()) throw std::invalid_argument("Ideal: no generators");
        VarSetPtr ring = gens.front().ring();
        for (const auto& g : gens) {
            require_same_ring(ring, g.ring(), "Ideal");
            if (g.is_zero()) throw ZeroPolynomial("Ideal: zero generator");
        }
        return Ideal{std::move(ring), std::move(gens)};
    }
};

using QIdeal = Ideal<Rational>;

template <CoefficientField F>
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial<F>> elements;  // monic, reduced, ascending leading monomial

    const VarSetPtr& ring() const { return elements.front().ring(); }
};

using QGroebnerBasis = GroebnerBasis<Rational>;

// Per-run resource budget. Groebner bases always exist; only the budget can
// fail, and it fails loudly.
struct GBOptions {
    std::size_t max_pairs = 2000000;
    std::uint32_t max_degree = 0;  // 0 = unlimited
};

// Scaling policy: keeps intermediate polynomials small without changing the
// ideal. Every nonzero field element is invertible; parametric fields report
// what was divided by through the guard callback (see ratfunc.hpp).
template <CoefficientField F>
struct ReducePolicy {
    using GuardFn = std::function<void(const F&)>;
    static Polynomial<F> normalize(const Polynomial<F>& p, const MonomialOrder& ord, const GuardFn& guard) {
        if (p.is_zero()) return p;
        const F& lc = p.leading_coefficient(ord);
        if (guard) guard(lc);
        if (lc.is_one()) return p;
        return p.scale(F::one() / lc);
    }
};

// Q: strip the rational content, result has coprime integer coefficients and
// a positive leading coefficient. Much cheaper to reduce against than monic
// fractions.
template <>
struct ReducePolicy<Rational> {
    using GuardFn = std::function<void(const Rational&)>;
    static Polynomial<Rational> normalize(const Polynomial<Rational>& p, const MonomialOrder& ord,
                                          const GuardFn&) {
        if (p.is_zero()) return p;
        mpz_class num_gcd = 0, den_lcm = 1;
        for (const auto& [m, c] : p.terms()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
        }
        Rational content(num_gcd, den_lcm);
        if (p.leading_coefficient(ord).sign() < 0) content = -content;
        if (content.is_one()) return p;
        return p.scale(content.inverse());
    }
};

namespace gb_detail {

template <CoefficientField F>
struct OrderedWork {
    struct Cmp {
        const MonomialOrder* ord;
        bool operator()(const Monomial& a, const Monomial& b) const { return ord->greater(a, b); }
    };
    std::map<Monomial, F, Cmp> terms;

    explicit OrderedWork(const MonomialOrder& ord) : terms(Cmp{&ord}) {}

    void add(const Monomial& m, const F& c) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            if (!c.is_zero()) terms.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    void add_poly(const Polynomial<F>& p, const Monomial& shift, const F& scale) {
        for (const auto& [m, c] : p.terms()) add(m * shift, c * scale);
    }
};

}  // namespace gb_detail

// Full normal form of f against `basis` (not required to be a Groebner
// basis). Ties between reducers go to the first divisor in list order.
template <CoefficientField F>
Polynomial<F> reduce_full(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis,
                          const MonomialOrder& ord) {
    if (f.is_zero() || basis.empty()) return f;
    std::vector<std::pair<Monomial, const Polynomial<F>*>> lts;
    lts.reserve(basis.size());
    for (const auto& b : basis)
        if (!b.is_zero()) lts.emplace_back(b.leading_monomial(ord), &b);

    gb_detail::OrderedWork<F> work(ord);
    for (const auto& [m, c] : f.terms()) work.add(m, c);

    std::vector<typename Polynomial<F>::Term> out;
    while (!work.terms.empty()) {
        auto it = work.terms.begin();
        Monomial m = it->first;
        F c = it->second;
        work.terms.erase(it);
        const Polynomial<F>* red = nullptr;
        for (const auto& [lm, poly] : lts) {
            if (lm.divides(m)) {
                red = poly;
                break;
            }
        }
        if (!red) {
            out.emplace_back(m, c);
            continue;
        }
        Monomial shift = m / red->leading_monomial(ord);
        F scale = -(c / red->leading_coefficient(ord));
        bool skip_head = true;
        for (const auto& [bm, bc] : red->ordered_terms(ord)) {
            if (skip_head) {
                skip_head = false;
                continue;
            }
            work.add(bm * shift, bc * scale);
        }
    }
    return Polynomial<F>::from_terms(f.ring(), std::move(out));
}

// S(f, g) = (lcm/LT(f)) f - (lcm/LT(g)) g; leading terms cancel.
template <CoefficientField F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g, const MonomialOrder& ord) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("s_polynomial: zero input");
    const auto& [mf, cf] = f.leading_term(ord);
    const auto& [mg, cg] = g.leading_term(ord);
    Monomial l = Monomial::lcm(mf, mg);
    return f.mul_term(l / mf, F::one() / cf) - g.mul_term(l / mg, F::one() / cg);
}

// Buchberger's algorithm with the normal selection strategy (smallest lcm
// degree first) and the Gebauer-Moeller formulation of Buchberger's two
// pair-elimination criteria. Output is the unique reduced basis: monic
// elements, no monomial divisible by another element's leading term, sorted
// by ascending leading monomial.
template <CoefficientField F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal, const MonomialOrder& ord, const GBOptions& opts = {},
                            const typename ReducePolicy<F>::GuardFn& guard = {}) {
    if (ord.arity() != ideal.ring->arity()) throw OrderMismatch("buchberger: order arity != ring arity");

    struct Entry {
        Polynomial<F> poly;
        Monomial lm;
        bool alive;
    };
    std::vector<Entry> g;

    struct Pair {
        std::uint32_t deg;
        Monomial lcm;
        std::size_t i, j;
    };
    auto pair_less = [&ord](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = ord.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> pairs;  // kept sorted descending so pop_back is the minimum

    auto resort = [&] {
        std::sort(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) { return pair_less(b, a); });
    };

    auto update = [&](const Polynomial<F>& h) {
        // Gebauer-Moeller update of the pair set and basis with new element h
        Monomial hm = h.leading_monomial(ord);
        std::size_t t = g.size();

        std::vector<Pair> fresh;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!g[i].alive) continue;
            fresh.push_back({Monomial::lcm(g[i].lm, hm).total_degree(), Monomial::lcm(g[i].lm, hm), i, t});
        }
        // criterion M: drop (i,t) if another new pair's lcm properly divides its lcm
        std::vector<bool> drop(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[a] || drop[b]) continue;
                if (fresh[b].lcm != fresh[a].lcm && fresh[b].lcm.divides(fresh[a].lcm)) drop[a] = true;
            }
        // criterion F: among equal lcms keep the smallest index
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = a + 1; b < fresh.size(); ++b) {
                if (drop[a] || drop[b]) continue;
                if (fresh[a].lcm == fresh[b].lcm) drop[b] = true;
            }
        // criterion B (coprime leading terms reduce to zero)
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a] && Monomial::coprime(g[fresh[a].i].lm, hm)) drop[a] = true;

        // prune old pairs strictly dominated by h
        std::vector<Pair> kept;
        kept.reserve(pairs.size());
        for (auto& p : pairs) {
            bool remove = hm.divides(p.lcm) && Monomial::lcm(g[p.i].lm, hm) != p.lcm &&
                          Monomial::lcm(g[p.j].lm, hm) != p.lcm;
            if (!remove) kept.push_back(std::move(p));
        }
        pairs = std::move(kept);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a]) pairs.push_back(std::move(fresh[a]));
        resort();

        // retire basis elements whose leading monomial h divides
        for (auto& e : g)
            if (e.alive && hm.divides(e.lm) && hm != e.lm) e.alive = false;

        g.push_back({h, hm, true});
    };

    auto alive_polys = [&] {
        std::vector<Polynomial<F>> v;
        for (const auto& e : g)
            if (e.alive) v.push_back(e.poly);
        return v;
    };

    // seed with normalized, pairwise-reduced generators
    for (const auto& gen : ideal.generators) {
        Polynomial<F> r = reduce_full(gen, alive_polys(), ord);
        if (r.is_zero()) continue;
        update(ReducePolicy<F>::normalize(r, ord, guard));
    }

    std::size_t processed = 0;
    while (!pairs.empty()) {
        Pair p = pairs.back();
        pairs.pop_back();
        if (!g[p.i].alive || !g[p.j].alive) {
            // pair pruning keeps pairs of retired elements only when still
            // needed; reduce them like any other
        }
        if (++processed > opts.max_pairs)
            throw BudgetExceeded("buchberger: pair budget exceeded (" + std::to_string(opts.max_pairs) + ")");
        if (opts.max_degree && p.lcm.total_degree() > opts.max_degree)
            throw BudgetExceeded("buchberger: degree budget exceeded");

        Polynomial<F> s = s_polynomial(g[p.i].poly, g[p.j].poly, ord);
        Polynomial<F> r = reduce_full(s, alive_polys(), ord);
        if (r.is_zero()) continue;
        update(ReducePolicy<F>::normalize(r, ord, guard));
    }

    // minimalize: drop elements whose leading monomial another one divides
    std::vector<Polynomial<F>> minimal;
    {
        auto polys = alive_polys();
        std::vector<Monomial> lms;
        for (const auto& q : polys) lms.push_back(q.leading_monomial(ord));
        for (std::size_t i = 0; i < polys.size(); ++i) {
            bool keep = true;
            for (std::size_t j = 0; j < polys.size() && keep; ++j) {
                if (i == j) continue;
                if (lms[j].divides(lms[i]) && (lms[j] != lms[i] || j < i)) keep = false;
            }
            if (keep) minimal.push_back(polys[i]);
        }
    }

    // reduce tails against the other elements, make monic, sort ascending
    std::vector<Polynomial<F>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<F>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial<F> r = reduce_full(minimal[i], others, ord);
        const F& lc = r.leading_coefficient(ord);
        if (guard) guard(lc);
        reduced.push_back(r.scale(F::one() / lc));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
        return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
    });
    return GroebnerBasis<F>{ord, std::move(reduced)};
}

// Unique remainder modulo a Groebner basis; zero iff f is in the ideal.
template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& g) {
    return reduce_full(f, g.elements, g.order);
}

// Elimination Theorem: for a lex basis, the elements free of the first j
// order-ranked variables form a reduced basis of the j-th elimination ideal.
template <CoefficientField F>
std::vector<Polynomial<F>> elimination_basis(const GroebnerBasis<F>& g, std::size_t j) {
    if (!g.order.is_lex()) throw OrderMismatch("elimination_basis: basis must be lex-ordered");
    if (j > g.order.arity()) throw std::out_of_range("elimination_basis: j out of range");
    std::vector<Polynomial<F>> out;
    const auto& perm = g.order.permutation();
    for (const auto& e : g.elements) {
        bool free_of_eliminated = true;
        for (const auto& [m, c] : e.terms())
            for (std::size_t r = 0; r < j && free_of_eliminated; ++r)
                if (m.exp(perm[r]) > 0) free_of_eliminated = false;
        if (free_of_eliminated) out.push_back(e);
    }
    return out;
}

}  // namespace zdsolve
