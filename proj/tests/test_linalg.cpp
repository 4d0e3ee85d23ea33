#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "siegel/linalg.hpp"

#include <random>

using namespace siegel;

namespace {
ZMat zmat(long n, std::initializer_list<long> vals) {
    ZMat m(n, n);
    long i = 0;
    for (long v : vals) m.a[static_cast<size_t>(i++)] = v;
    return m;
}
}  // namespace

TEST_CASE("rank and determinant basics") {
    ZMat m = zmat(2, {2, 1, 1, 0});
    CHECK(rank_z(m) == 2);
    CHECK(det_z(m) == -1);
    CHECK(rank_z(zmat(2, {0, 0, 0, 0})) == 0);
    CHECK(rank_z(zmat(2, {2, 2, 2, 2})) == 1);
}

TEST_CASE("smith normal form produces a saturated kernel") {
    // kernel of [[2,-2],[-2,2]] is spanned by (1,1), not (2,2)
    ZMat m = zmat(2, {2, -2, -2, 2});
    auto ker = kernel_saturated(m);
    REQUIRE(ker.size() == 1);
    CHECK(abs(ker[0][0]) == 1);
    CHECK(ker[0][0] == ker[0][1]);
}

TEST_CASE("smith U transform tracks row operations") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        long m = 2 + static_cast<long>(rng() % 2), n = 2 + static_cast<long>(rng() % 2);
        ZMat A(m, n);
        for (auto& e : A.a) e = static_cast<long>(rng() % 11) - 5;
        ZMat V, U;
        auto d = smith_diagonal(A, &V, &U);
        // U*A*V must be the diagonal matrix
        ZMat prod = mat_mul(mat_mul(U, A), V);
        for (long i = 0; i < m; ++i)
            for (long j = 0; j < n; ++j) {
                if (i == j && i < static_cast<long>(d.size()))
                    CHECK(abs(prod(i, j)) == d[static_cast<size_t>(i)]);
                else
                    CHECK(prod(i, j) == 0);
            }
        // transforms are unimodular
        CHECK(abs(det_z(U)) == 1);
        CHECK(abs(det_z(V)) == 1);
    }
}

TEST_CASE("psd test agrees with the principal-minor oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        long n = 2 + static_cast<long>(rng() % 2);
        ZMat m(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = i; j < n; ++j) {
                long v = static_cast<long>(rng() % 9) - 4;
                m(i, j) = v;
                m(j, i) = v;
            }
        QMat q = to_qmat(m);
        CHECK(is_psd_q(q) == oracles::psd_minors(q));
    }
}

TEST_CASE("rank agrees with the minor-rank oracle") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        long n = 2 + static_cast<long>(rng() % 2);
        ZMat m(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = i; j < n; ++j) {
                long v = static_cast<long>(rng() % 5) - 2;
                m(i, j) = v;
                m(j, i) = v;
            }
        CHECK(rank_z(m) == oracles::rank_minors(to_qmat(m)));
    }
}

TEST_CASE("hnf rows canonicalizes a lattice basis") {
    ZMat b(2, 2);
    b(0, 0) = 0; b(0, 1) = 1;
    b(1, 0) = 1; b(1, 1) = 0;
    ZMat h = hnf_rows(b);
    CHECK(h(0, 0) == 1);
    CHECK(h(0, 1) == 0);
    CHECK(h(1, 0) == 0);
    CHECK(h(1, 1) == 1);
}
