#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegel/cyclotomic.hpp"

#include <random>

using namespace siegel;

TEST_CASE("roots of unity multiply by exponent addition") {
    Cyc z5 = Cyc::root_of_unity(5, 1);
    Cyc acc = Cyc::one();
    for (int i = 0; i < 5; ++i) acc *= z5;
    CHECK(acc == Cyc::one());
    CHECK(z5.pow(3) == Cyc::root_of_unity(5, 3));
    CHECK(z5.pow(-2) == Cyc::root_of_unity(5, 3));
}

TEST_CASE("sum of all o-th roots vanishes") {
    for (long o : {3L, 4L, 6L, 9L, 12L}) {
        Cyc s = Cyc::zero();
        for (long k = 0; k < o; ++k) s += Cyc::root_of_unity(o, k);
        CHECK(s.is_zero());
    }
}

TEST_CASE("mixed-order arithmetic promotes correctly") {
    Cyc z3 = Cyc::root_of_unity(3, 1);
    Cyc z4 = Cyc::root_of_unity(4, 1);
    Cyc prod = z3 * z4;  // zeta_12^{4+3}
    CHECK(prod == Cyc::root_of_unity(12, 7));
    CHECK((z3 + z4) - z4 == z3.promoted(12));
}

TEST_CASE("inverse is exact in the cyclotomic field") {
    std::mt19937_64 rng(5);
    for (long o : {1L, 3L, 4L, 5L, 7L, 8L, 9L}) {
        for (int t = 0; t < 10; ++t) {
            Cyc v = Cyc::zero();
            long deg = euler_phi(o);
            for (long i = 0; i < deg; ++i) {
                long c = static_cast<long>(rng() % 7) - 3;
                if (c != 0) v += Cyc(Rat(c)) * Cyc::root_of_unity(o, i);
            }
            if (v.is_zero()) continue;
            CHECK(v * v.inverse() == Cyc::one());
        }
    }
}

TEST_CASE("conjugation fixes rationals and inverts roots") {
    CHECK(Cyc(Rat(7, 3)).conj() == Cyc(Rat(7, 3)));
    Cyc z7 = Cyc::root_of_unity(7, 2);
    CHECK(z7.conj() == Cyc::root_of_unity(7, 5));
    CHECK((z7 * z7.conj()) == Cyc::one());
}

TEST_CASE("rational detection") {
    Cyc z6 = Cyc::root_of_unity(6, 3);  // = -1
    CHECK(z6.is_rational());
    CHECK(z6.to_rational() == -1);
    Cyc z8 = Cyc::root_of_unity(8, 1);
    CHECK(!z8.is_rational());
    // zeta_8^2 = i is not rational either, but zeta_8^4 = -1 is
    CHECK(z8.pow(4).to_rational() == -1);
}
