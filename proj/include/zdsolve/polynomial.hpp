#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "zdsolve/field.hpp"
#include "zdsolve/monomial.hpp"
#include "zdsolve/rational.hpp"

namespace zdsolve {

class ZeroPolynomial : public std::domain_error {
public:
    explicit ZeroPolynomial(const char* what) : std::domain_error(what) {}
};

// Fixed storage order for terms: descending graded-reverse-lex with the
// natural variable permutation. Gives every polynomial one canonical form,
// independent of whatever MonomialOrder an algorithm is running under.
inline int canonical_compare(const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree() ? 1 : -1;
    for (std::size_t i = a.arity(); i-- > 0;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    }
    return 0;
}

struct CanonicalTermGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return canonical_compare(a, b) > 0; }
};

// Sparse multivariate polynomial over an exact coefficient field.
// Immutable value type: every operation returns a canonical result with no
// stored zero coefficients.
template <CoefficientField F>
class Polynomial {
public:
    using Term = std::pair<Monomial, F>;

    Polynomial() = default;

    static Polynomial zero(VarSetPtr ring) { return Polynomial(std::move(ring), {}); }

    static Polynomial constant(VarSetPtr ring, F c) {
        std::vector<Term> t;
        if (!c.is_zero()) t.emplace_back(Monomial(ring->arity()), std::move(c));
        return Polynomial(std::move(ring), std::move(t));
    }

    static Polynomial variable(VarSetPtr ring, std::size_t i) {
        if (i >= ring->arity()) throw std::out_of_range("Polynomial::variable: index");
        Monomial m(ring->arity());
        m.bump(i);
        return Polynomial(std::move(ring), {{m, F::one()}});
    }

    static Polynomial term(VarSetPtr ring, Monomial m, F c) {
        if (m.arity() != ring->arity()) throw RingMismatch("Polynomial::term: arity");
        std::vector<Term> t;
        if (!c.is_zero()) t.emplace_back(std::move(m), std::move(c));
        return Polynomial(std::move(ring), std::move(t));
    }

    // Sorts, combines equal monomials, drops zeros.
    static Polynomial from_terms(VarSetPtr ring, std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return canonical_compare(a.first, b.first) > 0; });
        std::vector<Term> out;
        out.reserve(terms.size());
        for (auto& t : terms) {
            if (!out.empty() && out.back().first == t.first) {
                out.back().second = out.back().second + t.second;
                if (out.back().second.is_zero()) out.pop_back();
            } else if (!t.second.is_zero()) {
                out.push_back(std::move(t));
            }
        }
        return Polynomial(std::move(ring), std::move(out));
    }

    const VarSetPtr& ring() const { return ring_; }
    std::size_t arity() const { return ring_ ? ring_->arity() : 0; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

    F constant_value() const {
        for (const auto& [m, c] : terms_)
            if (m.is_one()) return c;
        return F::zero();
    }

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    std::uint32_t degree_in(std::size_t var) const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exp(var));
        return d;
    }

    // Largest term under ord. Canonical storage is descending grevlex-natural,
    // so that order gets the front term for free; anything else is a scan.
    const Term& leading_term(const MonomialOrder& ord) const {
        if (terms_.empty()) throw ZeroPolynomial("leading_term of zero polynomial");
        if (ord.kind() == MonomialOrder::Kind::grevlex && is_identity(ord.permutation())) return terms_.front();
        std::size_t best = 0;
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (ord.greater(terms_[i].first, terms_[best].first)) best = i;
        return terms_[best];
    }

    const Monomial& leading_monomial(const MonomialOrder& ord) const { return leading_term(ord).first; }
    const F& leading_coefficient(const MonomialOrder& ord) const { return leading_term(ord).second; }

    F coefficient_of(const Monomial& m) const {
        for (const auto& [mm, c] : terms_)
            if (mm == m) return c;
        return F::zero();
    }

    Polynomial operator-() const {
        std::vector<Term> t(terms_);
        for (auto& [m, c] : t) c = -c;
        return Polynomial(ring_, std::move(t));
    }

    Polynomial operator+(const Polynomial& o) const {
        require_same_ring(ring_, o.ring_, "add");
        std::vector<Term> out;
        out.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = canonical_compare(terms_[i].first, o.terms_[j].first);
            if (c > 0) {
                out.push_back(terms_[i++]);
            } else if (c < 0) {
                out.push_back(o.terms_[j++]);
            } else {
                F s = terms_[i].second + o.terms_[j].second;
                if (!s.is_zero()) out.emplace_back(terms_[i].first, std::move(s));
                ++i, ++j;
            }
        }
        for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
        return Polynomial(pick_ring(o), std::move(out));
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        require_same_ring(ring_, o.ring_, "mul");
        if (is_zero() || o.is_zero()) return Polynomial::zero(pick_ring(o));
        std::map<Monomial, F, CanonicalTermGreater> acc;
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m = ma * mb;
                F p = ca * cb;
                auto it = acc.find(m);
                if (it == acc.end()) {
                    if (!p.is_zero()) acc.emplace(std::move(m), std::move(p));
                } else {
                    it->second = it->second + p;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
        std::vector<Term> out(acc.begin(), acc.end());
        return Polynomial(pick_ring(o), std::move(out));
    }

    Polynomial mul_term(const Monomial& m, const F& c) const {
        if (c.is_zero()) return Polynomial::zero(ring_);
        std::vector<Term> out(terms_);
        for (auto& [mm, cc] : out) {
            mm = mm * m;
            cc = cc * c;
        }
        return Polynomial(ring_, std::move(out));
    }

    Polynomial scale(const F& c) const { return mul_term(Monomial(arity()), c); }

    Polynomial pow(std::uint32_t e) const {
        Polynomial r = Polynomial::constant(ring_, F::one());
        Polynomial b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    bool operator==(const Polynomial& o) const {
        if (!same_ring(ring_, o.ring_)) return false;
        return terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Multivariate division: f = sum q_i d_i + r with no monomial of r
    // divisible by any LT(d_i); ties go to the first divisor whose leading
    // term divides, so the result is deterministic in the divisor order.
    struct DivisionResult {
        std::vector<Polynomial> quotients;
        Polynomial remainder;
    };

    DivisionResult divide(const std::vector<Polynomial>& divisors, const MonomialOrder& ord) const {
        for (const auto& d : divisors) {
            require_same_ring(ring_, d.ring_, "divide");
            if (d.is_zero()) throw ZeroPolynomial("divide: zero divisor");
        }
        struct OrdGreater {
            const MonomialOrder* o;
            bool operator()(const Monomial& a, const Monomial& b) const { return o->greater(a, b); }
        };
        std::vector<std::pair<Monomial, F>> lts;
        lts.reserve(divisors.size());
        for (const auto& d : divisors) lts.push_back(d.leading_term(ord));

        std::map<Monomial, F, OrdGreater> work{OrdGreater{&ord}};
        for (const auto& [m, c] : terms_) work.emplace(m, c);

        std::vector<std::map<Monomial, F, OrdGreater>> quot(divisors.size(),
                                                            std::map<Monomial, F, OrdGreater>{OrdGreater{&ord}});
        std::vector<Term> rem;

        auto add_into = [](std::map<Monomial, F, OrdGreater>& dst, const Monomial& m, const F& c) {
            auto it = dst.find(m);
            if (it == dst.end()) {
                if (!c.is_zero()) dst.emplace(m, c);
            } else {
                it->second = it->second + c;
                if (it->second.is_zero()) dst.erase(it);
            }
        };

        while (!work.empty()) {
            auto [m, c] = *work.begin();
            work.erase(work.begin());
            bool reduced = false;
            for (std::size_t k = 0; k < divisors.size(); ++k) {
                if (!lts[k].first.divides(m)) continue;
                Monomial t = m / lts[k].first;
                F factor = c / lts[k].second;
                add_into(quot[k], t, factor);
                // subtract factor * t * divisor_k, head term cancels by construction
                bool head = true;
                for (const auto& [dm, dc] : divisors[k].ordered_terms(ord)) {
                    if (head) {
                        head = false;
                        continue;
                    }
                    add_into(work, dm * t, -(factor * dc));
                }
                reduced = true;
                break;
            }
            if (!reduced) rem.emplace_back(m, c);
        }

        DivisionResult res;
        res.quotients.reserve(divisors.size());
        for (auto& q : quot)
            res.quotients.push_back(Polynomial::from_terms(ring_, std::vector<Term>(q.begin(), q.end())));
        res.remainder = Polynomial::from_terms(ring_, std::move(rem));
        return res;
    }

    // Terms sorted descending under ord (copy; canonical order is free).
    std::vector<Term> ordered_terms(const MonomialOrder& ord) const {
        std::vector<Term> t(terms_);
        if (!(ord.kind() == MonomialOrder::Kind::grevlex && is_identity(ord.permutation())))
            std::sort(t.begin(), t.end(),
                      [&](const Term& a, const Term& b) { return ord.greater(a.first, b.first); });
        return t;
    }

    F evaluate(const std::vector<F>& point) const {
        if (point.size() != arity()) throw RingMismatch("evaluate: point arity");
        F acc = F::zero();
        for (const auto& [m, c] : terms_) {
            F v = c;
            for (std::size_t i = 0; i < arity(); ++i)
                for (std::uint32_t e = 0; e < m.exp(i); ++e) v = v * point[i];
            acc = acc + v;
        }
        return acc;
    }

    Polynomial partial_derivative(std::size_t var) const {
        if (var >= arity()) throw std::out_of_range("partial_derivative: variable index");
        std::vector<Term> out;
        for (const auto& [m, c] : terms_) {
            std::uint32_t e = m.exp(var);
            if (e == 0) continue;
            Monomial dm = m;
            Monomial one_less(arity());
            one_less.bump(var);
            dm = dm / one_less;
            F dc = c * int_to_field(e);
            out.emplace_back(dm, std::move(dc));
        }
        return Polynomial::from_terms(ring_, std::move(out));
    }

    // Substitute variable -> polynomial (same ring).
    Polynomial substitute(std::size_t var, const Polynomial& repl) const {
        require_same_ring(ring_, repl.ring_, "substitute");
        Polynomial acc = Polynomial::zero(ring_);
        for (const auto& [m, c] : terms_) {
            Monomial rest = m;
            std::uint32_t e = m.exp(var);
            if (e) {
                Monomial v(arity());
                v.bump(var, e);
                rest = rest / v;
            }
            Polynomial piece = repl.pow(e).mul_term(rest, c);
            acc = acc + piece;
        }
        return acc;
    }

    // Re-express in another ring; var_map[i] = index in the new ring of this
    // ring's variable i.
    Polynomial map_vars(VarSetPtr new_ring, const std::vector<std::size_t>& var_map) const {
        if (var_map.size() != arity()) throw RingMismatch("map_vars: map arity");
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& [m, c] : terms_) {
            Monomial nm(new_ring->arity());
            for (std::size_t i = 0; i < arity(); ++i)
                if (m.exp(i)) nm.bump(var_map[i], m.exp(i));
            out.emplace_back(nm, c);
        }
        return Polynomial::from_terms(std::move(new_ring), std::move(out));
    }

    // Natural embedding into a superset ring (matches variables by name).
    Polynomial extend_to(const VarSetPtr& new_ring) const {
        std::vector<std::size_t> vm(arity());
        for (std::size_t i = 0; i < arity(); ++i) {
            std::size_t j = new_ring->index_of(ring_->name(i));
            if (j == VarSet::npos)
                throw RingMismatch("extend_to: variable '" + ring_->name(i) + "' missing from target ring");
            vm[i] = j;
        }
        return map_vars(new_ring, vm);
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        // print descending lex-natural: conventional reading order
        std::vector<Term> t(terms_);
        MonomialOrder lex = MonomialOrder::lex(arity());
        std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return lex.greater(a.first, b.first); });
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : t) {
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            if (neg) cs = cs.substr(1);
            bool needs_coeff = m.is_one() || cs != "1";
            bool wrote = false;
            if (needs_coeff) {
                // parenthesize compound coefficients (rational functions)
                if (cs.find_first_of("+-*^ ") != std::string::npos && !m.is_one())
                    os << "(" << cs << ")";
                else
                    os << cs;
                wrote = true;
            }
            for (std::size_t i = 0; i < arity(); ++i) {
                if (!m.exp(i)) continue;
                if (wrote) os << "*";
                os << ring_->name(i);
                if (m.exp(i) > 1) os << "^" << m.exp(i);
                wrote = true;
            }
        }
        return os.str();
    }

private:
    Polynomial(VarSetPtr ring, std::vector<Term> sorted_terms)
        : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

    static bool is_identity(const std::vector<std::size_t>& p) {
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != i) return false;
        return true;
    }

    static F int_to_field(std::uint32_t n) {
        F r = F::zero();
        F one = F::one();
        for (std::uint32_t i = 0; i < n; ++i) r = r + one;
        return r;
    }

    const VarSetPtr& pick_ring(const Polynomial& o) const { return ring_ ? ring_ : o.ring_; }

    VarSetPtr ring_;
    std::vector<Term> terms_;
};

using QPoly = Polynomial<Rational>;

}  // namespace zdsolve
