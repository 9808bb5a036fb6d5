#include "doctest.h"

#include "zdsolve/matrix.hpp"
#include "zdsolve/rng.hpp"
#include "zdsolve/unipoly.hpp"

using namespace zdsolve;

namespace {

QUniPoly upoly(std::initializer_list<long> asc) {
    std::vector<Rational> c;
    for (long x : asc) c.emplace_back(x);
    return QUniPoly(std::move(c));
}

Mat<Rational> random_mat(SplitMix64& rng, std::size_t n) {
    Mat<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(rng.uniform(-5, 5), rng.uniform(1, 3));
    return m;
}

// Horner evaluation of p at a matrix argument.
Mat<Rational> eval_at_matrix(const QUniPoly& p, const Mat<Rational>& m) {
    std::size_t n = m.rows();
    Mat<Rational> acc(n, n);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * m;
        for (std::size_t d = 0; d < n; ++d) acc(d, d) = acc(d, d) + p[i];
    }
    return acc;
}

}  // namespace

TEST_CASE("unipoly arithmetic basics") {
    QUniPoly a = upoly({1, 2, 1});  // (t+1)^2
    QUniPoly b = upoly({-1, 1});    // t - 1
    CHECK((a * b).degree() == 3);
    CHECK(a.evaluate(Rational(2)) == Rational(9));
    auto dm = a.divmod(b);
    CHECK(dm.quotient * b + dm.remainder == a);
    CHECK(a.derivative() == upoly({2, 2}));
    CHECK(upoly({0, 0, 0}).is_zero());
    CHECK(upoly({5}).degree() == 0);
}

TEST_CASE("char_poly worked examples") {
    auto I2 = Mat<Rational>::identity(2);
    CHECK(char_poly(I2) == upoly({1, -2, 1}));  // (t-1)^2

    Mat<Rational> m(2, 2);
    m(0, 1) = Rational(1, 2);
    m(1, 0) = Rational(1);
    QUniPoly chi = char_poly(m);
    CHECK(chi == QUniPoly({Rational(-1, 2), Rational(0), Rational(1)}));
}

TEST_CASE("char_poly degree and Cayley-Hamilton on random matrices") {
    SplitMix64 rng(5);
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u}) {
        Mat<Rational> m = random_mat(rng, n);
        QUniPoly chi = char_poly(m);
        CHECK(chi.degree() == static_cast<int>(n));
        CHECK(chi.leading() == Rational(1));
        Mat<Rational> z = eval_at_matrix(chi, m);
        CHECK(z == Mat<Rational>(n, n));
    }
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(upoly({1, -2, 1})) == upoly({-1, 1}));  // (t-1)^2 -> t-1
    QUniPoly p = QUniPoly({Rational(-1, 2), Rational(0), Rational(1)});
    CHECK(squarefree_part(p) == p);                                   // already squarefree
    CHECK(squarefree_part(upoly({0, 0, -1, 1})) == upoly({0, -1, 1}));  // t^3-t^2 -> t^2-t
}

TEST_CASE("gcd on Q specialisation agrees with recombination") {
    SplitMix64 rng(9);
    for (int i = 0; i < 30; ++i) {
        std::vector<Rational> ca, cb;
        for (int k = 0; k <= 4; ++k) ca.emplace_back(rng.uniform(-6, 6), rng.uniform(1, 4));
        for (int k = 0; k <= 3; ++k) cb.emplace_back(rng.uniform(-6, 6), rng.uniform(1, 4));
        QUniPoly a(ca), b(cb);
        if (a.is_zero() || b.is_zero()) continue;
        QUniPoly g = gcd(a, b);
        if (!g.is_zero()) {
            CHECK(a.divmod(g).remainder.is_zero());
            CHECK(b.divmod(g).remainder.is_zero());
        }
        // common factor is found
        QUniPoly f = upoly({1, 1});  // t + 1
        QUniPoly g2 = gcd(a * f, b * f);
        CHECK(g2.divmod(f).remainder.is_zero());
    }
}

TEST_CASE("sturm_count worked examples") {
    QUniPoly p = QUniPoly({Rational(-1, 2), Rational(0), Rational(1)});  // t^2 - 1/2
    CHECK(sturm_count(p, Rational(-2), Rational(2)) == 2);
    CHECK(sturm_count(upoly({1, 0, 1}), Rational(-10), Rational(10)) == 0);  // t^2 + 1
    CHECK(sturm_count(upoly({0, -1, 0, 1}), Rational(-2), Rational(2)) == 3);  // t^3 - t
    CHECK_THROWS(sturm_count(upoly({0, 1}), Rational(0), Rational(1)));  // endpoint is a root
}

TEST_CASE("isolate_roots worked examples") {
    QUniPoly p = QUniPoly({Rational(-1, 2), Rational(0), Rational(1)});
    auto ivs = isolate_roots(p);
    REQUIRE(ivs.size() == 2);
    Rational eps(1, 1000000);
    CHECK(refine(ivs[0], eps).hi < Rational(0));
    CHECK(refine(ivs[1], eps).lo > Rational(0));
    // sqrt(1/2) = 0.70710678118654752440...
    auto r = refine(ivs[1], Rational(1, 1000000000000LL));
    CHECK(r.width() <= Rational(1, 1000000000000LL));
    Rational target(707106781186LL, 1000000000000LL);
    CHECK(r.lo <= target + Rational(1, 1000000000));
    CHECK(r.hi >= target - Rational(1, 1000000000));
    // refinement is contained in the original bracket
    CHECK(r.lo >= ivs[1].lo);
    CHECK(r.hi <= ivs[1].hi);

    CHECK(isolate_roots(upoly({7})).empty());

    auto three = isolate_roots(upoly({0, 2, -3, 1}));  // t(t-1)(t-2)
    REQUIRE(three.size() == 3);
    CHECK(three[0].as_interval().contains(Rational(0)));
    CHECK(three[1].as_interval().contains(Rational(1)));
    CHECK(three[2].as_interval().contains(Rational(2)));
}

TEST_CASE("refine keeps exact rational roots pinned") {
    QUniPoly p = upoly({-1, 1});  // t - 1
    auto ivs = isolate_roots(p);
    REQUIRE(ivs.size() == 1);
    auto r = refine(ivs[0], Rational(1, 1000));
    // the bisection hits the rational root exactly or brackets it tightly
    CHECK(r.as_interval().contains(Rational(1)));
    auto again = refine(IsolatingInterval{Rational(1), Rational(1), ivs[0].subject}, Rational(1, 10));
    CHECK(again.is_exact());
}

TEST_CASE("sum of per-interval counts equals global count") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> c;
        int deg = 2 + static_cast<int>(rng.uniform(0, 6));
        for (int k = 0; k <= deg; ++k) c.emplace_back(rng.uniform(-8, 8));
        QUniPoly p(c);
        if (p.is_zero() || p.degree() < 1) continue;
        QUniPoly sf = squarefree_part(p);
        auto ivs = isolate_roots(p);
        Rational b = cauchy_root_bound(sf);
        int total = sturm_count(sf, -b, b);
        CHECK(static_cast<int>(ivs.size()) == total);
        // intervals are disjoint and sorted
        for (std::size_t i = 1; i < ivs.size(); ++i) CHECK(ivs[i - 1].hi <= ivs[i].lo);
        // each refined interval still contains its root (sign change or exact)
        for (const auto& iv : ivs) {
            auto r = refine(iv, Rational(1, 1 << 20));
            if (!r.is_exact()) CHECK(sf.evaluate(r.lo).sign() * sf.evaluate(r.hi).sign() < 0);
        }
    }
}

TEST_CASE("degree of squarefree part counts distinct complex roots") {
    // (t-1)^2 (t+2) (t^2+1): distinct complex roots 1, -2, i, -i -> degree 4
    QUniPoly p = upoly({1, -2, 1}) * upoly({2, 1}) * upoly({1, 0, 1});
    CHECK(squarefree_part(p).degree() == 4);
}
