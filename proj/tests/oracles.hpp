#ifndef SIEGEL_TESTS_ORACLES_HPP
#define SIEGEL_TESTS_ORACLES_HPP

// Independent brute-force oracles used to freeze expected values.  These
// deliberately avoid the implementation paths they are checking.

#include <functional>
#include <vector>

#include "siegel/cyclotomic.hpp"
#include "siegel/dirichlet.hpp"
#include "siegel/linalg.hpp"
#include "siegel/symmat.hpp"

namespace oracles {

using namespace siegel;

// PSD via nonnegativity of all principal minors (exhaustive subsets).
inline bool psd_minors(const QMat& A) {
    long n = A.rows;
    for (long mask = 1; mask < (1 << n); ++mask) {
        std::vector<long> idx;
        for (long i = 0; i < n; ++i)
            if (mask & (1 << i)) idx.push_back(i);
        QMat sub(static_cast<long>(idx.size()), static_cast<long>(idx.size()));
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = 0; j < idx.size(); ++j) sub(static_cast<long>(i), static_cast<long>(j)) = A(idx[i], idx[j]);
        if (det_q(sub) < 0) return false;
    }
    return true;
}

// rank as the largest r with some nonzero r x r minor
inline long rank_minors(const QMat& A) {
    long n = A.rows;
    for (long r = n; r >= 1; --r) {
        std::vector<long> rows(static_cast<size_t>(r));
        std::function<bool(long, long)> pick_rows = [&](long pos, long start) -> bool {
            if (pos == r) {
                std::vector<long> cols(static_cast<size_t>(r));
                std::function<bool(long, long)> pick_cols = [&](long cpos, long cstart) -> bool {
                    if (cpos == r) {
                        QMat sub(r, r);
                        for (long i = 0; i < r; ++i)
                            for (long j = 0; j < r; ++j) sub(i, j) = A(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]);
                        return det_q(sub) != 0;
                    }
                    for (long c = cstart; c < n; ++c) {
                        cols[static_cast<size_t>(cpos)] = c;
                        if (pick_cols(cpos + 1, c + 1)) return true;
                    }
                    return false;
                };
                return pick_cols(0, 0);
            }
            for (long i = start; i < n; ++i) {
                rows[static_cast<size_t>(pos)] = i;
                if (pick_rows(pos + 1, i + 1)) return true;
            }
            return false;
        };
        if (pick_rows(0, 0)) return r;
    }
    return 0;
}

// Legendre symbol by exhaustive squares
inline int legendre_exhaustive(const Int& a, long q) {
    Int r = mod_pos(a, Int(q));
    if (r == 0) return 0;
    for (long x = 1; x < q; ++x)
        if (mod_pos(Int(x) * Int(x), Int(q)) == r) return 1;
    return -1;
}

// e_p(y) = e^{-2 pi i {y}_p} as an exact root of unity, for y with p-power
// denominator
inline Cyc e_p(const Rat& y, long p, long tmax) {
    // p-part fractional value
    Rat frac = y;
    Int den = frac.get_den();
    long t = 0;
    Int pp(1);
    while (mpz_divisible_p(den.get_mpz_t(), Int(p).get_mpz_t())) {
        den /= p;
        ++t;
        pp *= p;
    }
    if (den != 1) throw std::domain_error("e_p: denominator not a p-power");
    if (t == 0) return Cyc::one();
    if (t > tmax) throw std::domain_error("e_p: exceeds table");
    long ppl = mpz_get_si(pp.get_mpz_t());
    // y = num * den^-1 / p^t in Q_p; {y}_p = (num * den^-1 mod p^t)/p^t
    Int num = mod_pos(frac.get_num() * inv_mod(mod_pos(den, pp), pp), pp);
    return Cyc::root_of_unity(ppl, -mpz_get_si(num.get_mpz_t()));
}

// Brute-force inverse Fourier transform of 1_{Z_p^x}(y) chi(-y) on Q_p,
// evaluated at lam: (1/p^K) sum over units y mod p^K of chi(-y) e_p(-lam y).
inline Cyc bs_fourier_oracle(const DirichletCharacter& chi, long p, const Rat& lam, long K) {
    Int pK = pow_int(Int(p), static_cast<unsigned long>(K));
    long pKl = mpz_get_si(pK.get_mpz_t());
    Cyc sum = Cyc::zero();
    for (long y = 1; y < pKl; ++y) {
        if (y % p == 0) continue;
        Cyc cv = chi(Int(-y));
        if (cv.is_zero()) continue;
        sum += cv * e_p(-lam * Rat(y), p, K + 4);
    }
    return Cyc(Rat(1, pKl)) * sum;
}

}  // namespace oracles

#endif
