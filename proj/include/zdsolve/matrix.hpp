#pragma once

#include <vector>

#include "zdsolve/field.hpp"
#include "zdsolve/unipoly.hpp"

namespace zdsolve {

// Dense square/rectangular matrix over an exact field. Desk-scale sizes;
// nothing sparse here.
template <CoefficientField F>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, F::zero()) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    Mat operator+(const Mat& o) const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    Mat operator*(const Mat& o) const {
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const F& x = (*this)(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const F& y = o(k, j);
                    if (!y.is_zero()) r(i, j) = r(i, j) + x * y;
                }
            }
        return r;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        std::vector<F> r(rows_, F::zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!a_[i * cols_ + j].is_zero() && !v[j].is_zero()) r[i] = r[i] + a_[i * cols_ + j] * v[j];
        return r;
    }

    Mat scale(const F& s) const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
        return r;
    }

    F trace() const {
        F t = F::zero();
        for (std::size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
        return t;
    }

    // Tr(A * B) without forming the product.
    static F trace_of_product(const Mat& a, const Mat& b) {
        F t = F::zero();
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (!a(i, k).is_zero() && !b(k, i).is_zero()) t = t + a(i, k) * b(k, i);
        return t;
    }

    // Rank by Gaussian elimination (exact field arithmetic).
    std::size_t rank() const {
        Mat m(*this);
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t pivot = rank;
            while (pivot < rows_ && m(pivot, col).is_zero()) ++pivot;
            if (pivot == rows_) continue;
            if (pivot != rank)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(m(pivot, j), m(rank, j));
            F inv = F::one() / m(rank, col);
            for (std::size_t i = rank + 1; i < rows_; ++i) {
                if (m(i, col).is_zero()) continue;
                F f = m(i, col) * inv;
                for (std::size_t j = col; j < cols_; ++j) m(i, j) = m(i, j) - f * m(rank, j);
            }
            ++rank;
        }
        return rank;
    }

private:
    std::size_t rows_, cols_;
    std::vector<F> a_;
};

// Characteristic polynomial det(tI - M) by the Samuelson-Berkowitz scheme:
// division-free, so it runs unchanged over parametric coefficient fields.
template <CoefficientField F>
UniPoly<F> char_poly(const Mat<F>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return UniPoly<F>::constant(F::one());

    // C holds p_{A_k} coefficients, descending degree.
    std::vector<F> C = {F::one(), -m(0, 0)};
    for (std::size_t i = 1; i < n; ++i) {
        // q_0 = 1, q_1 = -a_ii, q_{j+1} = -(row_i A_i^{j-1} col_i)
        std::vector<F> q;
        q.reserve(i + 2);
        q.push_back(F::one());
        q.push_back(-m(i, i));
        std::vector<F> v(i);
        for (std::size_t k = 0; k < i; ++k) v[k] = m(k, i);
        for (std::size_t j = 2; j <= i + 1; ++j) {
            F dot = F::zero();
            for (std::size_t k = 0; k < i; ++k)
                if (!v[k].is_zero() && !m(i, k).is_zero()) dot = dot + m(i, k) * v[k];
            q.push_back(-dot);
            if (j <= i) {
                std::vector<F> nv(i, F::zero());
                for (std::size_t r = 0; r < i; ++r)
                    for (std::size_t c = 0; c < i; ++c)
                        if (!m(r, c).is_zero() && !v[c].is_zero()) nv[r] = nv[r] + m(r, c) * v[c];
                v = std::move(nv);
            }
        }
        // truncated convolution: next C has i+2 entries
        std::vector<F> next(i + 2, F::zero());
        for (std::size_t j = 0; j < next.size(); ++j) {
            std::size_t klo = j >= q.size() ? j - q.size() + 1 : 0;
            for (std::size_t k = klo; k < C.size() && k <= j; ++k)
                next[j] = next[j] + q[j - k] * C[k];
        }
        C = std::move(next);
    }
    std::reverse(C.begin(), C.end());
    return UniPoly<F>(std::move(C));
}

}  // namespace zdsolve
