#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegel/lseries.hpp"

using namespace siegel;

namespace {
// the odd character mod 4
DirichletCharacter chi4() { return DirichletCharacter(4, 2, {-1, 0, -1, 1}); }
// the quadratic character mod 3
DirichletCharacter chi3() { return DirichletCharacter(3, 2, {-1, 0, 1}); }
}  // namespace

TEST_CASE("classical Bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rat(-1, 2));
    CHECK(bernoulli(2) == Rat(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(12) == Rat(-691, 2730));
    // von Staudt-Clausen: denominator of B_12 = prod of primes p with (p-1)|12
    Int den(1);
    for (long p : {2L, 3L, 5L, 7L, 13L}) den *= p;
    CHECK(bernoulli(12).get_den() == den);
}

TEST_CASE("generalized Bernoulli numbers") {
    CHECK(gen_bernoulli(2, DirichletCharacter::trivial(1)).to_rational() == Rat(1, 6));
    // trivial character mod 1, k = 1: the B_1(1) = +1/2 convention
    CHECK(gen_bernoulli(1, DirichletCharacter::trivial(1)).to_rational() == Rat(1, 2));
    CHECK(gen_bernoulli(1, chi4()).to_rational() == Rat(-1, 2));
    CHECK(gen_bernoulli(1, chi3()).to_rational() == Rat(-1, 3));
    for (unsigned long k : {2ul, 4ul, 6ul, 8ul})
        CHECK(gen_bernoulli(k, DirichletCharacter::trivial(1)).to_rational() == bernoulli(k));
}

TEST_CASE("L-values at nonpositive integers") {
    CHECK(L_nonpositive(DirichletCharacter::trivial(1), -1).value.to_rational() == Rat(-1, 12));
    CHECK(L_nonpositive(chi4(), 0).value.to_rational() == Rat(1, 2));
    CHECK(L_nonpositive(DirichletCharacter::trivial(1), 0).value.to_rational() == Rat(-1, 2));
    // parity mismatch for a primitive character forces 0
    LValue lv = L_nonpositive(chi4(), -1);  // k = 2 even, chi odd
    CHECK(lv.parity_mismatch);
    CHECK(lv.value.is_zero());
}

TEST_CASE("partial L-values strip Euler factors") {
    CHECK(partial_L(DirichletCharacter::trivial(1), -1, {}).to_rational() == Rat(-1, 12));
    CHECK(partial_L(DirichletCharacter::trivial(1), -1, {Int(2)}).to_rational() == Rat(1, 12));
    CHECK(partial_L(chi4(), 0, {Int(3)}).to_rational() == 1);  // (1/2)(1 - chi(3)) = 1
    // two code paths: removing {2,3} equals removing 2 then 3 by direct factor multiplication
    Cyc a = partial_L(chi3(), -3, {Int(2), Int(5)});
    Cyc direct = L_nonpositive(chi3(), -3).value *
                 (Cyc::one() - chi3()(Int(2)) * Cyc(Rat(8))) * (Cyc::one() - chi3()(Int(5)) * Cyc(Rat(125)));
    CHECK(a == direct);
}

TEST_CASE("Gauss sums") {
    CHECK(gauss_sum(DirichletCharacter::trivial(1)) == Cyc::one());
    // quadratic character mod 5: G^2 = 5
    DirichletCharacter q5(5, 2, {-1, 0, 1, 1, 0});
    Cyc g = gauss_sum(q5);
    CHECK(g * g == Cyc(Rat(5)));
    // |G|^2 = f for assorted primitive characters
    for (long f : {3L, 4L, 5L, 7L}) {
        for (const auto& chi : DirichletCharacter::all_mod(f)) {
            if (chi.conductor() != f) continue;
            Cyc gc = gauss_sum(chi);
            CHECK(gc * gc.conj() == Cyc(Rat(f)));
        }
    }
    CHECK_THROWS_AS(gauss_sum(DirichletCharacter::trivial(4)), NotPrimitive);
}

TEST_CASE("Kummer congruences") {
    // trivial tame part: (1 - p^{k-1}) L(1-k) congruences mod p^{a+1}
    for (long p : {5L, 7L}) {
        for (long a : {0L, 1L}) {
            long step = (p - 1);
            for (long i = 0; i < a; ++i) step *= p;
            for (long k0 : {2L, 4L, 6L}) {
                if ((k0 % (p - 1)) == 0) continue;  // need p-1 not dividing k
                long k1 = k0 + step;
                Rat v0 = (Rat(1) - pow_rat(Rat(p), k0 - 1)) * Rat(-1) * bernoulli(static_cast<unsigned long>(k0)) / Rat(k0);
                Rat v1 = (Rat(1) - pow_rat(Rat(p), k1 - 1)) * Rat(-1) * bernoulli(static_cast<unsigned long>(k1)) / Rat(k1);
                Rat diff = v0 - v1;
                diff.canonicalize();
                // p-integral and divisible by p^{a+1}
                CHECK(!mpz_divisible_p(diff.get_den().get_mpz_t(), Int(p).get_mpz_t()));
                if (diff != 0) CHECK(vp_int(diff.get_num(), Int(p)) >= a + 1);
                // the same congruence through the library path
                Cyc w0 = partial_L(DirichletCharacter::trivial(1), 1 - k0, {Int(p)});
                Cyc w1 = partial_L(DirichletCharacter::trivial(1), 1 - k1, {Int(p)});
                Rat d2 = (w0 - w1).to_rational();
                if (d2 != 0) CHECK(vp_rat(d2, Int(p)) >= a + 1);
            }
        }
    }
}
