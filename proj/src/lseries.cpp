#include "siegel/lseries.hpp"

#include <map>
#include <mutex>

namespace siegel {

namespace {
std::vector<Rat> g_bern = {Rat(1)};
std::mutex g_bmtx;
}  // namespace

Rat bernoulli(unsigned long k) {
    std::lock_guard<std::mutex> lock(g_bmtx);
    while (g_bern.size() <= k) {
        // B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1, j) B_j
        unsigned long m = g_bern.size();
        Rat s(0);
        for (unsigned long j = 0; j < m; ++j) s += Rat(binomial(m + 1, j)) * g_bern[j];
        Rat b = -s / Rat(Int(m) + 1);
        b.canonicalize();
        g_bern.push_back(b);
    }
    return g_bern[k];
}

Rat bernoulli_poly(unsigned long k, const Rat& x) {
    Rat s(0);
    Rat xp(1);
    // B_k(x) = sum_i C(k,i) B_i x^{k-i}; accumulate from i = k downward
    for (long i = static_cast<long>(k); i >= 0; --i) {
        s += Rat(binomial(k, static_cast<unsigned long>(i))) * bernoulli(static_cast<unsigned long>(i)) * xp;
        xp *= x;
    }
    s.canonicalize();
    return s;
}

Cyc gen_bernoulli(unsigned long k, const DirichletCharacter& chi) {
    long f = chi.modulus();
    Cyc s = Cyc::zero();
    for (long a = 1; a <= f; ++a) {
        Cyc va = chi(Int(a));
        if (va.is_zero()) continue;
        s += Cyc(bernoulli_poly(k, Rat(a) / Rat(f))) * va;
    }
    return Cyc(pow_rat(Rat(f), static_cast<long>(k) - 1)) * s;
}

LValue L_nonpositive(const DirichletCharacter& chi, long s) {
    if (s > 0) throw std::domain_error("L_nonpositive: s must be <= 0 (s = 1-k, k >= 1)");
    unsigned long k = static_cast<unsigned long>(1 - s);
    LValue out;
    int want = (k % 2 == 0) ? 1 : -1;
    out.parity_mismatch = chi.parity() != want;
    out.value = Cyc(Rat(-1) / Rat(Int(k))) * gen_bernoulli(k, chi);
    if (out.parity_mismatch && chi.conductor() == chi.modulus() && !(k == 1 && chi.is_trivial())) {
        if (!out.value.is_zero()) throw std::logic_error("L_nonpositive: nonzero value at parity mismatch");
    }
    return out;
}

Cyc partial_L(const DirichletCharacter& chi, long s, const std::vector<Int>& removed) {
    long k = 1 - s;
    Cyc v = L_nonpositive(chi, s).value;
    for (const Int& q : removed) {
        Cyc factor = Cyc::one() - chi(q) * Cyc(pow_rat(Rat(q), k - 1));
        v *= factor;
    }
    return v;
}

Cyc gauss_sum(const DirichletCharacter& chi) {
    if (chi.conductor() != chi.modulus())
        throw NotPrimitive("gauss_sum: character is not primitive");
    long f = chi.modulus();
    Cyc s = Cyc::zero();
    for (long a = 0; a < f; ++a) {
        Cyc va = chi(Int(a));
        if (va.is_zero()) continue;
        s += va * Cyc::root_of_unity(f, a);
    }
    if (f == 1) s = Cyc::one();
    return s;
}

}  // namespace siegel
