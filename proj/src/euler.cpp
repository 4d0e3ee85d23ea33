#include "siegel/euler.hpp"

#include "siegel/lseries.hpp"

namespace siegel {

ArithmeticWeight::ArithmeticWeight(PartitionParabolic P, std::vector<long> t_, std::vector<DirichletCharacter> eps_)
    : parabolic(std::move(P)), t(std::move(t_)), eps(std::move(eps_)) {
    if (static_cast<long>(t.size()) != parabolic.d() || static_cast<long>(eps.size()) != parabolic.d())
        throw std::domain_error("ArithmeticWeight: need one t and one eps per block");
    for (size_t i = 1; i < t.size(); ++i)
        if (t[i - 1] < t[i]) throw std::domain_error("ArithmeticWeight: t must be dominant");
}

bool ArithmeticWeight::admissible() const { return t.back() >= parabolic.n + 1; }

SatakeData::SatakeData(ArithmeticWeight w, long p_, std::vector<Cyc> a, std::vector<Rat> v)
    : weight(std::move(w)), p(p_), alphas(std::move(a)), valuations(std::move(v)) {
    if (static_cast<long>(alphas.size()) != weight.parabolic.n ||
        static_cast<long>(valuations.size()) != weight.parabolic.n)
        throw std::domain_error("SatakeData: need n alphas with valuations");
}

bool is_P_ordinary(const SatakeData& data) {
    const PartitionParabolic& P = data.weight.parabolic;
    for (long i = 1; i <= P.d(); ++i) {
        long A = P.cum(i - 1);
        long ni = P.parts[static_cast<size_t>(i - 1)];
        long ti = data.weight.t[static_cast<size_t>(i - 1)];
        Rat sum(0);
        for (long r = 1; r <= ni; ++r) {
            sum += data.valuations[static_cast<size_t>(A + r - 1)];
            // sum >= -r (t_i - A - (r+1)/2), compared as 2*sum >= -r(2t_i - 2A - r - 1)
            Rat rhs = Rat(-r * (2 * ti - 2 * A - r - 1)) / 2;
            if (sum < rhs) return false;
            if (r == ni && sum != rhs) return false;  // block sums must meet the bound exactly
        }
    }
    return true;
}

std::vector<Cyc> up_eigenvalues(const SatakeData& data) {
    const PartitionParabolic& P = data.weight.parabolic;
    long n = P.n;
    std::vector<Cyc> a(static_cast<size_t>(n + 1), Cyc::one());
    Rat p(data.p);
    for (long j = 1; j <= P.d(); ++j) {
        long A = P.cum(j - 1);
        long nj = P.parts[static_cast<size_t>(j - 1)];
        long tj = data.weight.t[static_cast<size_t>(j - 1)];
        // elementary symmetric polynomials of the block alphas
        std::vector<Cyc> e(static_cast<size_t>(nj + 1), Cyc::zero());
        e[0] = Cyc::one();
        for (long idx = 0; idx < nj; ++idx) {
            const Cyc& al = data.alphas[static_cast<size_t>(A + idx)];
            for (long r = std::min(idx + 1, nj); r >= 1; --r) e[static_cast<size_t>(r)] += e[static_cast<size_t>(r - 1)] * al;
        }
        for (long r = 1; r <= nj; ++r) {
            long num = r * (2 * tj - 2 * A - r - 1);
            if (num % 2 != 0) throw std::logic_error("up_eigenvalues: non-integral exponent");
            Cyc coeff(pow_rat(p, num / 2));
            a[static_cast<size_t>(A + r)] = a[static_cast<size_t>(A)] * coeff * e[static_cast<size_t>(r)];
        }
    }
    a.erase(a.begin());
    return a;
}

std::vector<Rat> up_eigenvalue_valuations(const SatakeData& data) {
    const PartitionParabolic& P = data.weight.parabolic;
    long n = P.n;
    std::vector<Rat> a(static_cast<size_t>(n + 1), Rat(0));
    for (long j = 1; j <= P.d(); ++j) {
        long A = P.cum(j - 1);
        long nj = P.parts[static_cast<size_t>(j - 1)];
        long tj = data.weight.t[static_cast<size_t>(j - 1)];
        for (long r = 1; r <= nj; ++r) {
            // valuation of the minimal-valuation monomial in e_r: the alphas
            // are ordered by weakly increasing valuation inside the block
            Rat v(0);
            for (long idx = 0; idx < r; ++idx) v += data.valuations[static_cast<size_t>(A + idx)];
            long num = r * (2 * tj - 2 * A - r - 1);
            a[static_cast<size_t>(A + r)] = a[static_cast<size_t>(A)] + Rat(num) / 2 + v;
        }
    }
    a.erase(a.begin());
    return a;
}

namespace {

// conductor exponent c with cond(eta) = p^c; rejects non-p-power conductors
long p_power_conductor_exponent(const DirichletCharacter& eta, long p) {
    long f = eta.conductor();
    long c = 0;
    while (f % p == 0) {
        f /= p;
        ++c;
    }
    if (f != 1) throw std::domain_error("twist character must have p-power conductor");
    return c;
}

}  // namespace

Cyc gamma_p(long s, long block_i, const SatakeData& data, const TameCharacter& phi,
            const DirichletCharacter& chi) {
    const PartitionParabolic& P = data.weight.parabolic;
    if (block_i < 1 || block_i > P.d()) throw std::domain_error("gamma_p: bad block");
    long A = P.cum(block_i - 1), B = P.cum(block_i);
    DirichletCharacter eta = (chi * data.weight.eps[static_cast<size_t>(block_i - 1)].inverse()).primitive_part();
    Cyc phim1 = phi.value_at_p.inverse();
    Rat p(data.p);
    if (eta.is_trivial()) {
        Cyc num = Cyc::one(), den = Cyc::one();
        Cyc ps1(pow_rat(p, s - 1));
        Cyc pms(pow_rat(p, -s));
        for (long j = A + 1; j <= B; ++j) {
            const Cyc& al = data.alphas[static_cast<size_t>(j - 1)];
            num *= Cyc::one() - phim1 * al.inverse() * ps1;
            Cyc dfac = Cyc::one() - phi.value_at_p * al * pms;
            if (dfac.is_zero()) throw PoleAtS("gamma_p: pole in the unramified denominator");
            den *= dfac;
        }
        return num * den.inverse();
    }
    long c = p_power_conductor_exponent(eta, data.p);
    Cyc G = gauss_sum(eta);
    long ni = P.parts[static_cast<size_t>(block_i - 1)];
    Cyc out = G.pow(ni);
    Cyc base_p(pow_rat(p, s - 1));
    for (long j = A + 1; j <= B; ++j) {
        const Cyc& al = data.alphas[static_cast<size_t>(j - 1)];
        out *= (phim1 * al.inverse() * base_p).pow(c);
    }
    return out;
}

Cyc E_p(long s, const SatakeData& data, const TameCharacter& phi, const DirichletCharacter& chi) {
    Cyc out = Cyc::one();
    for (long i = 1; i <= data.weight.parabolic.d(); ++i) out *= gamma_p(s, i, data, phi, chi);
    return out;
}

Cyc E_imp(long s, const SatakeData& data, const TameCharacter& phi) {
    const PartitionParabolic& P = data.weight.parabolic;
    const DirichletCharacter& eps_d = data.weight.eps.back();
    Cyc out = Cyc::one();
    for (long i = 1; i < P.d(); ++i) out *= gamma_p(s, i, data, phi, eps_d);
    Cyc pms(pow_rat(Rat(data.p), -s));
    for (long j = P.cum(P.d() - 1) + 1; j <= P.n; ++j) {
        Cyc fac = Cyc::one() - phi.value_at_p * data.alphas[static_cast<size_t>(j - 1)] * pms;
        if (fac.is_zero()) throw PoleAtS("E_imp: pole in the local L-factor");
        out *= fac.inverse();
    }
    return out;
}

Cyc A_P(const SatakeData& data, const TameCharacter& phi) {
    const PartitionParabolic& P = data.weight.parabolic;
    long n = P.n;
    long A = P.cum(P.d() - 1);
    long nd = P.parts.back();
    long td = data.weight.t.back();
    Cyc phim1 = phi.value_at_p.inverse();
    Cyc pw(pow_rat(Rat(data.p), n - td));
    Cyc prod = Cyc::one();
    for (long j = A + 1; j <= n; ++j)
        prod *= Cyc::one() - phim1 * data.alphas[static_cast<size_t>(j - 1)].inverse() * pw;

    // eigenvalue expansion: 1 + a_n^-1 sum_{r=0}^{nd-1} a_{A+r} (-phi(p)^-1)^{nd-r} p^{(nd-r)(nd-1-r)/2}
    std::vector<Cyc> a = up_eigenvalues(data);
    auto a_at = [&](long i) { return i == 0 ? Cyc::one() : a[static_cast<size_t>(i - 1)]; };
    Cyc an_inv = a_at(n).inverse();
    Cyc expansion = Cyc::one();
    for (long r = 0; r < nd; ++r) {
        long e2 = (nd - r) * (nd - 1 - r);
        if (e2 % 2 != 0) throw std::logic_error("A_P: sqrt(p) failed to cancel");
        Cyc term = an_inv * a_at(A + r) * (-phim1).pow(nd - r) * Cyc(pow_rat(Rat(data.p), e2 / 2));
        expansion += term;
    }
    if (!(prod == expansion)) throw MismatchedForms("A_P: product and eigenvalue forms disagree");
    return prod;
}

Cyc d_factor(const Rat& s, const DirichletCharacter& xi, long n, const std::vector<Int>& primes) {
    auto as_long = [](const Rat& x) {
        if (x.get_den() != 1) throw std::domain_error("d_factor: argument does not land at an integer");
        return mpz_get_si(x.get_num().get_mpz_t());
    };
    long m0 = as_long(s + Rat(2 * n + 1, 2));
    std::vector<long> margs = {m0};
    for (long j = 1; j <= n; ++j) margs.push_back(as_long(2 * s + Rat(2 * n + 1 - 2 * j)));
    DirichletCharacter xi2 = xi.squared();
    Cyc out = Cyc::one();
    for (const Int& q : primes) {
        for (size_t t = 0; t < margs.size(); ++t) {
            const DirichletCharacter& ch = (t == 0) ? xi : xi2;
            Cyc fac = Cyc::one() - ch(q) * Cyc(pow_rat(Rat(q), -margs[t]));
            if (fac.is_zero()) throw PoleAtS("d_factor: local L-factor pole");
            out *= fac.inverse();
        }
    }
    return out;
}

TrivialZeroKind classify_trivial_zero(const SatakeData& data, const TameCharacter& phi) {
    if (!(phi.value_at_p == Cyc::one())) return TrivialZeroKind::None;
    bool unramified = true;
    for (const auto& e : data.weight.eps)
        if (!e.is_trivial()) unramified = false;
    if (unramified) return TrivialZeroKind::Crystalline;
    if (data.weight.eps.back().is_trivial() &&
        data.alphas.back() == Cyc(Rat(1, data.p)))
        return TrivialZeroKind::SemiStable;
    return TrivialZeroKind::None;
}

const char* to_string(TrivialZeroKind k) {
    switch (k) {
        case TrivialZeroKind::None: return "None";
        case TrivialZeroKind::Crystalline: return "Crystalline";
        case TrivialZeroKind::SemiStable: return "SemiStable";
    }
    return "?";
}

}  // namespace siegel
