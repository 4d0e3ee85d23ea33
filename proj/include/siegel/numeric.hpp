#ifndef SIEGEL_NUMERIC_HPP
#define SIEGEL_NUMERIC_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace siegel {

using Int = mpz_class;
using Rat = mpq_class;

// Exception types shared across modules.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& m) : std::runtime_error(m) {}
};
struct PoleAtS : std::runtime_error {
    explicit PoleAtS(const std::string& m) : std::runtime_error(m) {}
};
struct NotPrimitive : std::runtime_error {
    explicit NotPrimitive(const std::string& m) : std::runtime_error(m) {}
};
struct OddRank : std::runtime_error {
    explicit OddRank(const std::string& m) : std::runtime_error(m) {}
};
struct MismatchedForms : std::runtime_error {
    explicit MismatchedForms(const std::string& m) : std::runtime_error(m) {}
};
struct NonConvergent : std::runtime_error {
    explicit NonConvergent(const std::string& m) : std::runtime_error(m) {}
};
struct ProviderCapability : std::runtime_error {
    explicit ProviderCapability(const std::string& m) : std::runtime_error(m) {}
};
struct NotStabilized : std::runtime_error {
    explicit NotStabilized(const std::string& m) : std::runtime_error(m) {}
};
struct NotOneUnit : std::runtime_error {
    explicit NotOneUnit(const std::string& m) : std::runtime_error(m) {}
};
struct CenterNotZero : std::runtime_error {
    explicit CenterNotZero(const std::string& m) : std::runtime_error(m) {}
};
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& m) : std::runtime_error(m) {}
};

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// b^e for integer e (negative allowed, b != 0 then).
inline Rat pow_rat(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    Rat base = b;
    if (e < 0) {
        if (base == 0) throw std::domain_error("pow_rat: 0^negative");
        base = Rat(1) / base;
        e = -e;
    }
    Rat r(1);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    r.canonicalize();
    return r;
}

inline long vp_int(Int a, const Int& p) {
    if (a == 0) throw std::domain_error("vp_int: valuation of zero");
    long v = 0;
    while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
        a /= p;
        ++v;
    }
    return v;
}

inline long vp_rat(const Rat& a, const Int& p) {
    if (a == 0) throw std::domain_error("vp_rat: valuation of zero");
    return vp_int(a.get_num(), p) - vp_int(a.get_den(), p);
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline long lcm_long(long a, long b) {
    Int g;
    mpz_lcm(g.get_mpz_t(), Int(a).get_mpz_t(), Int(b).get_mpz_t());
    return mpz_get_si(g.get_mpz_t());
}

inline long gcd_long(long a, long b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), Int(a).get_mpz_t(), Int(b).get_mpz_t());
    return mpz_get_si(g.get_mpz_t());
}

inline long euler_phi(long n) {
    long r = n, m = n;
    for (long q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            r -= r / q;
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

// Prime factors of |n|, without multiplicity, ascending.
std::vector<Int> prime_factors(Int n);

// Kronecker symbol (a|n).
inline int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

// a^-1 mod m, m > 1, gcd(a,m)=1.
inline Int inv_mod(const Int& a, const Int& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::domain_error("inv_mod: not invertible");
    return r;
}

inline Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

}  // namespace siegel

#endif
