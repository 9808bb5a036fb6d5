#pragma once

#include <map>

#include "zdsolve/groebner.hpp"
#include "zdsolve/matrix.hpp"
#include "zdsolve/unipoly.hpp"

namespace zdsolve {

class NotZeroDimensional : public std::domain_error {
public:
    explicit NotZeroDimensional(const std::string& what) : std::domain_error(what) {}
};

// Finiteness test: every variable must appear as a pure power among the
// leading terms (the unit ideal passes with exponent zero).
template <CoefficientField F>
bool is_zero_dimensional(const GroebnerBasis<F>& g) {
    const std::size_t n = g.order.arity();
    std::vector<bool> covered(n, false);
    for (const auto& e : g.elements) {
        const Monomial& lm = e.leading_monomial(g.order);
        if (lm.is_one()) return true;  // unit ideal, empty variety
        std::size_t nz = VarSet::npos;
        bool pure = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (lm.exp(i) == 0) continue;
            if (nz != VarSet::npos) {
                pure = false;
                break;
            }
            nz = i;
        }
        if (pure && nz != VarSet::npos) covered[nz] = true;
    }
    for (bool c : covered)
        if (!c) return false;
    return true;
}

// The quotient algebra of a zero-dimensional ideal: the monomials under the
// leading-term staircase, ascending in the basis order, starting at 1.
template <CoefficientField F>
struct QuotientAlgebra {
    GroebnerBasis<F> source;
    std::vector<Monomial> basis;

    std::size_t dimension() const { return basis.size(); }

    // npos when m is not a standard monomial.
    std::size_t index_of(const Monomial& m) const {
        auto it = index_.find(m);
        return it == index_.end() ? VarSet::npos : it->second;
    }

    static QuotientAlgebra build(GroebnerBasis<F> g) {
        if (!is_zero_dimensional(g))
            throw NotZeroDimensional("standard_basis: ideal is not zero-dimensional");
        const std::size_t n = g.order.arity();
        std::vector<std::uint32_t> cap(n, 0);
        std::vector<Monomial> lms;
        for (const auto& e : g.elements) lms.push_back(e.leading_monomial(g.order));
        bool unit = false;
        for (const auto& lm : lms) {
            if (lm.is_one()) unit = true;
            for (std::size_t i = 0; i < n; ++i) {
                bool pure = lm.exp(i) > 0;
                for (std::size_t j = 0; j < n && pure; ++j)
                    if (j != i && lm.exp(j) > 0) pure = false;
                if (pure && (cap[i] == 0 || lm.exp(i) < cap[i])) cap[i] = lm.exp(i);
            }
        }
        QuotientAlgebra a{std::move(g), {}, {}};
        if (!unit) {
            // enumerate the box below the per-variable pure-power caps, keep
            // monomials not divisible by any leading term
            std::vector<std::uint32_t> e(n, 0);
            for (;;) {
                Monomial m(n);
                for (std::size_t i = 0; i < n; ++i) m.bump(i, e[i]);
                bool divisible = false;
                for (const auto& lm : lms)
                    if (lm.divides(m)) {
                        divisible = true;
                        break;
                    }
                if (!divisible) a.basis.push_back(m);
                std::size_t k = 0;
                while (k < n) {
                    if (++e[k] < cap[k]) break;
                    e[k] = 0;
                    ++k;
                }
                if (k == n) break;
            }
            std::sort(a.basis.begin(), a.basis.end(),
                      [&](const Monomial& x, const Monomial& y) { return a.source.order.less(x, y); });
        }
        for (std::size_t i = 0; i < a.basis.size(); ++i) a.index_.emplace(a.basis[i], i);
        return a;
    }

private:
    struct CanonLess {
        bool operator()(const Monomial& x, const Monomial& y) const { return canonical_compare(x, y) < 0; }
    };
    std::map<Monomial, std::size_t, CanonLess> index_;
};

template <CoefficientField F>
QuotientAlgebra<F> standard_basis(GroebnerBasis<F> g) {
    return QuotientAlgebra<F>::build(std::move(g));
}

// Memoized normal-form coordinates of monomials over the standard basis.
// Basis elements are monic, so the recursion never divides.
template <CoefficientField F>
class NFCache {
public:
    explicit NFCache(const QuotientAlgebra<F>& a) : a_(&a) {}

    const std::vector<F>& vec(const Monomial& m) {
        auto hit = memo_.find(m);
        if (hit != memo_.end()) return hit->second;
        std::vector<Monomial> stack{m};
        while (!stack.empty()) {
            Monomial cur = stack.back();
            if (memo_.count(cur)) {
                stack.pop_back();
                continue;
            }
            std::size_t bi = a_->index_of(cur);
            if (bi != VarSet::npos) {
                std::vector<F> unit(a_->dimension(), F::zero());
                unit[bi] = F::one();
                memo_.emplace(cur, std::move(unit));
                stack.pop_back();
                continue;
            }
            const Polynomial<F>* red = nullptr;
            for (const auto& e : a_->source.elements)
                if (e.leading_monomial(a_->source.order).divides(cur)) {
                    red = &e;
                    break;
                }
            if (!red) throw std::logic_error("NFCache: monomial neither standard nor reducible");
            Monomial shift = cur / red->leading_monomial(a_->source.order);
            bool missing = false;
            auto tail = red->ordered_terms(a_->source.order);
            for (std::size_t t = 1; t < tail.size(); ++t) {
                Monomial child = tail[t].first * shift;
                if (!memo_.count(child) && a_->index_of(child) == VarSet::npos) {
                    if (!missing) missing = true;
                    stack.push_back(child);
                }
            }
            if (missing) continue;
            std::vector<F> acc(a_->dimension(), F::zero());
            for (std::size_t t = 1; t < tail.size(); ++t) {
                Monomial child = tail[t].first * shift;
                const std::vector<F>& cv = child_vec(child);
                const F& c = tail[t].second;
                for (std::size_t k = 0; k < acc.size(); ++k)
                    if (!cv[k].is_zero()) acc[k] = acc[k] - c * cv[k];
            }
            memo_.emplace(cur, std::move(acc));
            stack.pop_back();
        }
        return memo_.at(m);
    }

    // Coordinates of the normal form of an arbitrary polynomial.
    std::vector<F> vec_poly(const Polynomial<F>& p) {
        std::vector<F> acc(a_->dimension(), F::zero());
        for (const auto& [m, c] : p.terms()) {
            const std::vector<F>& v = vec(m);
            for (std::size_t k = 0; k < acc.size(); ++k)
                if (!v[k].is_zero()) acc[k] = acc[k] + c * v[k];
        }
        return acc;
    }

private:
    const std::vector<F>& child_vec(const Monomial& child) {
        std::size_t bi = a_->index_of(child);
        if (bi != VarSet::npos) {
            auto it = memo_.find(child);
            if (it == memo_.end()) {
                std::vector<F> unit(a_->dimension(), F::zero());
                unit[bi] = F::one();
                it = memo_.emplace(child, std::move(unit)).first;
            }
            return it->second;
        }
        return memo_.at(child);
    }

    struct CanonLess {
        bool operator()(const Monomial& x, const Monomial& y) const { return canonical_compare(x, y) < 0; }
    };
    const QuotientAlgebra<F>* a_;
    std::map<Monomial, std::vector<F>, CanonLess> memo_;
};

// Matrix of "multiply by f, then reduce" over the standard basis; column k
// holds the coordinates of f * b_k.
template <CoefficientField F>
Mat<F> mult_matrix(const QuotientAlgebra<F>& a, const Polynomial<F>& f, NFCache<F>* cache = nullptr) {
    require_same_ring(a.source.ring(), f.ring(), "mult_matrix");
    NFCache<F> local(a);
    NFCache<F>& c = cache ? *cache : local;
    const std::size_t n = a.dimension();
    Mat<F> m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<F> col(n, F::zero());
        for (const auto& [fm, fc] : f.terms()) {
            const std::vector<F>& v = c.vec(fm * a.basis[k]);
            for (std::size_t r = 0; r < n; ++r)
                if (!v[r].is_zero()) col[r] = col[r] + fc * v[r];
        }
        for (std::size_t r = 0; r < n; ++r) m(r, k) = std::move(col[r]);
    }
    return m;
}

// All matrices M_{x_i}, sharing one normal-form cache.
template <CoefficientField F>
std::vector<Mat<F>> variable_matrices(const QuotientAlgebra<F>& a, NFCache<F>& cache) {
    std::vector<Mat<F>> ms;
    const std::size_t nv = a.source.ring()->arity();
    ms.reserve(nv);
    for (std::size_t i = 0; i < nv; ++i)
        ms.push_back(mult_matrix(a, Polynomial<F>::variable(a.source.ring(), i), &cache));
    return ms;
}

// Trace form [T]_{jk} = Tr(M_{b_j} M_{b_k}); rational coefficients only (a
// signature needs an ordered field).
inline Mat<Rational> trace_form(const QuotientAlgebra<Rational>& a) {
    const std::size_t n = a.dimension();
    NFCache<Rational> cache(a);
    std::vector<Mat<Rational>> mb;
    mb.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        mb.push_back(mult_matrix(a, QPoly::term(a.source.ring(), a.basis[j], Rational(1)), &cache));
    Mat<Rational> t(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j; k < n; ++k) {
            Rational v = Mat<Rational>::trace_of_product(mb[j], mb[k]);
            t(j, k) = v;
            t(k, j) = v;
        }
    return t;
}

// Signature of a symmetric rational matrix, computed exactly: Descartes'
// rule applied to the characteristic polynomial is exact because all
// eigenvalues are real. Zero eigenvalues drop rank, not signature.
inline int real_count(const Mat<Rational>& t) {
    if (t.rows() != t.cols()) throw std::invalid_argument("real_count: matrix not square");
    if (t.rows() == 0) return 0;
    QUniPoly chi = char_poly(t);
    // strip the zero-eigenvalue factor lambda^k
    std::size_t low = 0;
    while (low < chi.coeffs().size() && chi.coeffs()[low].is_zero()) ++low;
    std::vector<Rational> c(chi.coeffs().begin() + low, chi.coeffs().end());
    auto variations = [](const std::vector<Rational>& v, bool negate_odd) {
        int var = 0, prev = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            int s = v[i].sign();
            if (negate_odd && (i % 2 == 1)) s = -s;
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    };
    int pos = variations(c, false);
    int neg = variations(c, true);
    return pos - neg;
}

}  // namespace zdsolve
