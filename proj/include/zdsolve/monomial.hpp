#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace zdsolve {

class RingMismatch : public std::invalid_argument {
public:
    explicit RingMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Ordered set of distinct variable names; polynomials reference their VarSet.
class VarSet {
public:
    static constexpr std::size_t kMaxVars = 16;

    static std::shared_ptr<const VarSet> make(std::vector<std::string> names) {
        if (names.empty()) throw std::invalid_argument("VarSet: no variables");
        if (names.size() > kMaxVars)
            throw std::invalid_argument("VarSet: this build supports at most 16 variables");
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i].empty()) throw std::invalid_argument("VarSet: empty variable name");
            for (std::size_t j = i + 1; j < names.size(); ++j)
                if (names[i] == names[j])
                    throw std::invalid_argument("VarSet: duplicate variable '" + names[i] + "'");
        }
        return std::shared_ptr<const VarSet>(new VarSet(std::move(names)));
    }

    std::size_t arity() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    // Index of a variable name, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t index_of(const std::string& n) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return i;
        return npos;
    }

    bool operator==(const VarSet& o) const { return names_ == o.names_; }

private:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline bool same_ring(const VarSetPtr& a, const VarSetPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const VarSetPtr& a, const VarSetPtr& b, const char* op) {
    if (!same_ring(a, b)) throw RingMismatch(std::string(op) + ": operands live in different rings");
}

// Exponent vector with fixed arity; inline storage, no heap.
class Monomial {
public:
    Monomial() : n_(0), deg_(0) { exps_.fill(0); }
    explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)), deg_(0) {
        if (nvars > VarSet::kMaxVars) throw std::invalid_argument("Monomial: too many variables");
        exps_.fill(0);
    }
    Monomial(std::initializer_list<std::uint32_t> e) : Monomial(std::vector<std::uint32_t>(e)) {}
    explicit Monomial(const std::vector<std::uint32_t>& e) : n_(static_cast<std::uint8_t>(e.size())), deg_(0) {
        if (e.size() > VarSet::kMaxVars) throw std::invalid_argument("Monomial: too many variables");
        exps_.fill(0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            exps_[i] = e[i];
            deg_ += e[i];
        }
    }

    std::size_t arity() const { return n_; }
    std::uint32_t exp(std::size_t i) const { return exps_[i]; }
    std::uint32_t total_degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    Monomial& bump(std::size_t i, std::uint32_t by = 1) {
        exps_[i] += by;
        deg_ += by;
        return *this;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < n_; ++i) r.exps_[i] += o.exps_[i];
        r.deg_ += o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    // this / o; requires o.divides(*this).
    Monomial operator/(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < n_; ++i) r.exps_[i] -= o.exps_[i];
        r.deg_ -= o.deg_;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < a.n_; ++i) {
            r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        }
        r.deg_ = 0;
        for (std::size_t i = 0; i < a.n_; ++i) r.deg_ += r.exps_[i];
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.n_; ++i)
            if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const {
        if (n_ != o.n_ || deg_ != o.deg_) return false;
        return std::equal(exps_.begin(), exps_.begin() + n_, o.exps_.begin());
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::array<std::uint32_t, VarSet::kMaxVars> exps_;
    std::uint8_t n_;
    std::uint32_t deg_;
};

// Total multiplicative well-order on monomials of one ring. The permutation
// lists variable indices from greatest to least; identity when empty-built.
class MonomialOrder {
public:
    enum class Kind { lex, grevlex };

    MonomialOrder(Kind k, std::size_t nvars) : kind_(k), perm_(nvars) {
        std::iota(perm_.begin(), perm_.end(), 0);
    }
    MonomialOrder(Kind k, std::vector<std::size_t> perm) : kind_(k), perm_(std::move(perm)) {
        std::vector<bool> seen(perm_.size(), false);
        for (std::size_t p : perm_) {
            if (p >= perm_.size() || seen[p])
                throw std::invalid_argument("MonomialOrder: permutation is not a bijection");
            seen[p] = true;
        }
    }

    static MonomialOrder lex(std::size_t nvars) { return MonomialOrder(Kind::lex, nvars); }
    static MonomialOrder grevlex(std::size_t nvars) { return MonomialOrder(Kind::grevlex, nvars); }

    Kind kind() const { return kind_; }
    bool is_lex() const { return kind_ == Kind::lex; }
    std::size_t arity() const { return perm_.size(); }
    const std::vector<std::size_t>& permutation() const { return perm_; }

    // -1, 0, +1 for a < b, a = b, a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (kind_ == Kind::lex) {
            for (std::size_t r = 0; r < perm_.size(); ++r) {
                std::uint32_t ea = a.exp(perm_[r]), eb = b.exp(perm_[r]);
                if (ea != eb) return ea > eb ? 1 : -1;
            }
            return 0;
        }
        if (a.total_degree() != b.total_degree())
            return a.total_degree() > b.total_degree() ? 1 : -1;
        // grevlex: last (least-significant) nonzero difference, negative wins
        for (std::size_t r = perm_.size(); r-- > 0;) {
            std::uint32_t ea = a.exp(perm_[r]), eb = b.exp(perm_[r]);
            if (ea != eb) return ea < eb ? 1 : -1;
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && perm_ == o.perm_; }

private:
    Kind kind_;
    std::vector<std::size_t> perm_;
};

}  // namespace zdsolve
