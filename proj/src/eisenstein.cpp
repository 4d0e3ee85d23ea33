#include "siegel/eisenstein.hpp"

#include <algorithm>
#include <map>

namespace siegel {

void EisensteinSpec::validate() const {
    if (weight.parabolic.n != n) throw std::domain_error("EisensteinSpec: weight parabolic size mismatch");
    if (N % phi.conductor() != 0) throw std::domain_error("EisensteinSpec: phi conductor must divide N");
    if (phi.squared().is_trivial()) throw std::domain_error("EisensteinSpec: phi^2 must be nontrivial");
    if (gcd_long(N, p) != 1) throw std::domain_error("EisensteinSpec: p must be prime to N");
    const std::vector<long>& t = weight.t;
    if (mode == EisMode::Full) {
        if (!(t.back() >= k && k >= n + 1)) throw std::domain_error("EisensteinSpec: need t_d >= k >= n+1");
        int par = (k % 2 == 0) ? 1 : -1;
        if ((phi * chi).parity() != par) throw std::domain_error("EisensteinSpec: parity phi*chi(-1) = (-1)^k fails");
        long c = chi.conductor();
        while (c % p == 0) c /= p;
        if (c != 1) throw std::domain_error("EisensteinSpec: chi must have p-power conductor");
    } else {
        if (!(t.back() >= n + 1)) throw std::domain_error("EisensteinSpec: need t_d >= n+1");
        int par = (t.back() % 2 == 0) ? 1 : -1;
        if ((phi * weight.eps.back()).parity() != par)
            throw std::domain_error("EisensteinSpec: parity phi*eps_d(-1) = (-1)^{t_d} fails");
    }
}

ArchNormalization ArchNormalization::operator*(const ArchNormalization& o) const {
    ArchNormalization r;
    r.sign = sign * o.sign;
    r.pow2 = pow2 + o.pow2;
    r.powpi = powpi + o.powpi;
    r.gamma_rational = gamma_rational * o.gamma_rational;
    r.gamma_rational.canonicalize();
    return r;
}

bool ArchNormalization::is_identity() const {
    return sign == 1 && pow2 == 0 && powpi == 0 && gamma_rational == 1;
}

std::pair<Rat, Rat> gamma_m_half_integral(long m, const Rat& s) {
    Rat powpi = Rat(m * (m - 1)) / 4;
    Rat rational(1);
    for (long j = 0; j < m; ++j) {
        Rat a = s - Rat(j) / 2;
        Rat twice = a * 2;
        if (twice.get_den() != 1) throw std::domain_error("gamma_m_half_integral: argument not half-integral");
        long u = mpz_get_si(twice.get_num().get_mpz_t());
        if (u <= 0) throw std::domain_error("gamma_m_half_integral: nonpositive argument");
        if (u % 2 == 0) {
            rational *= Rat(factorial(static_cast<unsigned long>(u / 2 - 1)));
        } else {
            long h = (u - 1) / 2;  // Gamma(h + 1/2) = (2h)! / (4^h h!) sqrt(pi)
            rational *= Rat(factorial(static_cast<unsigned long>(2 * h))) /
                        (pow_rat(Rat(4), h) * Rat(factorial(static_cast<unsigned long>(h))));
            powpi += Rat(1, 2);
        }
    }
    rational.canonicalize();
    return {powpi, rational};
}

ArchNormalization arch_norm(long k, long n) {
    ArchNormalization r;
    r.sign = ((n * k) % 2 == 0) ? 1 : -1;
    r.pow2 = -n + 2 * n * n - 2 * n * k;
    auto [gpow, grat] = gamma_m_half_integral(2 * n, Rat(2 * n + 1, 2));
    r.powpi = Rat(-n - 2 * n * n) + gpow;
    r.gamma_rational = grat;
    return r;
}

ArchNormalization arch_whittaker_row(long k, long n) {
    ArchNormalization r;
    r.sign = ((n * k) % 2 == 0) ? 1 : -1;
    r.pow2 = n - 2 * n * n + 2 * n * k;
    auto [gpow, grat] = gamma_m_half_integral(2 * n, Rat(2 * n + 1, 2));
    r.powpi = Rat(n + 2 * n * n) - gpow;
    r.gamma_rational = Rat(1) / grat;
    return r;
}

int lambda_beta(const HalfIntMatrix& beta, const Int& q) {
    long r = rank(beta);
    if (r % 2 != 0) throw OddRank("lambda_beta: rank must be even");
    if (q <= 2 || !mpz_probab_prime_p(q.get_mpz_t(), 25)) throw std::domain_error("lambda_beta: q must be an odd prime");
    if (mpz_divisible_p(Int(beta.N).get_mpz_t(), q.get_mpz_t()))
        throw std::domain_error("lambda_beta: q must not divide the level");
    if (r == 0) return 1;
    Rat D = det_star(beta);
    if ((r / 2) % 2 != 0) D = -D;
    long v = vp_rat(D, q);
    if (v > 0) return 0;
    if (v < 0) throw std::domain_error("lambda_beta: q divides the denominator of det*");
    return kronecker(D.get_num(), q) * kronecker(D.get_den(), q);
}

namespace {

// squarefree kernel (with sign) of a nonzero rational
Int squarefree_kernel(const Rat& x) {
    Int m = x.get_num() * x.get_den();
    int sign = (m < 0) ? -1 : 1;
    m = abs(m);
    Int s = 1;
    for (Int f = 2; f * f <= m; ++f) {
        long e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), f.get_mpz_t())) {
            m /= f;
            ++e;
        }
        if (e % 2 == 1) s *= f;
    }
    s *= m;  // leftover prime
    return sign * s;
}

Int fundamental_discriminant(const Int& s) {
    if (mod_pos(s, 4) == 1) return s;
    return 4 * s;
}

}  // namespace

DirichletCharacter lambda_beta_character(const HalfIntMatrix& beta) {
    long r = rank(beta);
    if (r % 2 != 0) throw OddRank("lambda_beta_character: rank must be even");
    if (r == 0) return DirichletCharacter::trivial(1);
    Rat D = det_star(beta);
    if ((r / 2) % 2 != 0) D = -D;
    Int s = squarefree_kernel(D);
    if (s == 1) return DirichletCharacter::trivial(1);
    return DirichletCharacter::kronecker_character(fundamental_discriminant(s));
}

Cyc schwartz_hat(const EisensteinSpec& spec, const HalfIntMatrix& beta) {
    long n = spec.n;
    if (beta.n != 2 * n || beta.N != spec.N) throw std::domain_error("schwartz_hat: index shape mismatch");
    const ZMat& S = beta.twice_scaled;
    Int p(spec.p), p2 = p * p;
    // beta_1 in p^2 Sym(n,Z_p)*
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (mod_pos(S(i, j), p2) != 0) return Cyc::zero();
    const PartitionParabolic& P = spec.weight.parabolic;
    long d = P.d();
    long minors = (spec.mode == EisMode::Full) ? d : d - 1;
    // unit leading minors of 2*beta_0
    std::vector<Rat> minor_dets(static_cast<size_t>(d), Rat(1));
    for (long i = 1; i <= d; ++i) {
        long Ni = P.cum(i);
        ZMat M(Ni, Ni);
        for (long a = 0; a < Ni; ++a)
            for (long b = 0; b < Ni; ++b) M(a, b) = S(a, n + b);
        Int dz = det_z(M);
        minor_dets[static_cast<size_t>(i - 1)] = Rat(dz) / pow_rat(Rat(spec.N), Ni);
        if (i <= minors) {
            if (dz == 0 || mod_pos(dz, p) == 0) return Cyc::zero();
        }
    }
    Cyc value = Cyc::one();
    for (long i = 1; i <= d - 1; ++i) {
        DirichletCharacter ch = spec.weight.eps[static_cast<size_t>(i - 1)] *
                                spec.weight.eps[static_cast<size_t>(i)].inverse();
        value *= ch.at_rational(minor_dets[static_cast<size_t>(i - 1)]);
    }
    if (spec.mode == EisMode::Full) {
        DirichletCharacter ch = spec.weight.eps.back() * spec.chi.inverse();
        value *= ch.at_rational(minor_dets[static_cast<size_t>(d - 1)]);
    }
    return value;
}

namespace {

// primes dividing the numerator of x, excluding those dividing excl
std::vector<Int> numerator_primes_excluding(const Rat& x, const Int& excl) {
    std::vector<Int> out;
    for (const Int& q : prime_factors(x.get_num()))
        if (!mpz_divisible_p(excl.get_mpz_t(), q.get_mpz_t())) out.push_back(q);
    return out;
}

// product over v|N of e_v(x) for x with denominator dividing N: equals
// e^{-2 pi i x} = zeta_b^{-a} for x = a/b in lowest terms
Cyc ev_product(const Rat& x, long N) {
    Rat y = x;
    y.canonicalize();
    Int b = y.get_den();
    if (!mpz_divisible_p(Int(N).get_mpz_t(), b.get_mpz_t()))
        throw std::domain_error("ev_product: denominator must divide N");
    long bl = mpz_get_si(b.get_mpz_t());
    Int a = mod_pos(-y.get_num(), b);
    return Cyc::root_of_unity(bl, mpz_get_si(a.get_mpz_t()));
}

}  // namespace

CoeffValue coeff_c(const EisensteinSpec& spec, const HalfIntMatrix& beta,
                   const SiegelSeriesProvider& provider) {
    spec.validate();
    long n = spec.n;
    if (beta.n != 2 * n || beta.N != spec.N) throw std::domain_error("coeff_c: index shape mismatch");
    if (!is_psd(beta)) throw std::domain_error("coeff_c: index must be PSD");
    long k_eff = (spec.mode == EisMode::Full) ? spec.k : spec.weight.t.back();
    CoeffValue out;
    out.arch = arch_norm(k_eff, n) * arch_whittaker_row(k_eff, n);
    out.cyc = Cyc::zero();

    Cyc alpha_hat = schwartz_hat(spec, beta);
    if (alpha_hat.is_zero()) return out;
    long rk = rank(beta);
    if (spec.mode == EisMode::Full && rk < 2 * n) return out;

    const ZMat& S = beta.twice_scaled;
    const PartitionParabolic& P = spec.weight.parabolic;
    long d = P.d();
    std::vector<Int> removed = prime_factors(Int(spec.N) * Int(spec.p));

    // level normalization and the N-part additive characters
    Cyc total(pow_rat(Rat(spec.N), -n * (2 * n + 1)));
    Int trS0(0);
    for (long i = 0; i < n; ++i) trS0 += S(i, n + i);
    total *= ev_product(Rat(trS0) / Rat(spec.N), spec.N);

    // local Siegel-series polynomials away from Np
    Rat dstar = det_star(beta) * pow_rat(Rat(2), rk);  // det*(2 beta)
    DirichletCharacter twist = (spec.mode == EisMode::Full) ? (spec.phi * spec.chi)
                                                            : (spec.phi * spec.weight.eps.back());
    long exp_k = (spec.mode == EisMode::Full) ? spec.k : spec.weight.t.back();
    for (const Int& q : numerator_primes_excluding(dstar, Int(spec.N) * Int(spec.p))) {
        Cyc t = twist(q) * Cyc(pow_rat(Rat(q), exp_k - 2 * n - 1));
        total *= provider.evaluate(beta, q, t);
    }

    // Dirichlet L-values
    if (spec.mode == EisMode::Full) {
        DirichletCharacter psi = spec.phi * spec.chi * lambda_beta_character(beta);
        total *= partial_L(psi, n + 1 - spec.k, removed);
    } else {
        long td = spec.weight.t.back();
        long r_cork = 2 * n - rk;
        DirichletCharacter phieps = spec.phi * spec.weight.eps.back();
        long halves = (rk % 2 == 0) ? r_cork / 2 : (r_cork + 1) / 2;
        if (rk % 2 == 0) {
            DirichletCharacter psi = phieps * lambda_beta_character(beta);
            total *= partial_L(psi, n + 1 - td - r_cork / 2, removed);
        }
        DirichletCharacter sq = phieps.squared();
        for (long j = 1; j <= halves; ++j) total *= partial_L(sq, 2 * n + 3 - 2 * td - 2 * j, removed);
    }

    // determinant-power weight terms
    for (long i = 1; i <= d - 1; ++i) {
        long Ni = P.cum(i);
        ZMat M(Ni, Ni);
        for (long a = 0; a < Ni; ++a)
            for (long b = 0; b < Ni; ++b) M(a, b) = S(a, n + b);
        Rat det_i = Rat(det_z(M)) / pow_rat(Rat(spec.N), Ni);
        long e = spec.weight.t[static_cast<size_t>(i - 1)] - spec.weight.t[static_cast<size_t>(i)];
        total *= Cyc(pow_rat(det_i, e));
    }
    if (spec.mode == EisMode::Full) {
        ZMat M(n, n);
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) M(a, b) = S(a, n + b);
        Rat det_d = Rat(det_z(M)) / pow_rat(Rat(spec.N), n);
        total *= Cyc(pow_rat(det_d, spec.weight.t.back() - spec.k));
    }

    total *= alpha_hat;
    out.cyc = total;
    return out;
}

CoeffValue restricted_coeff(const EisensteinSpec& spec, const HalfIntMatrix& beta1,
                            const HalfIntMatrix& beta2, const SiegelSeriesProvider& provider) {
    spec.validate();
    long k_eff = (spec.mode == EisMode::Full) ? spec.k : spec.weight.t.back();
    CoeffValue out;
    out.arch = arch_norm(k_eff, spec.n) * arch_whittaker_row(k_eff, spec.n);
    out.cyc = Cyc::zero();
    for (const ZMat& B0 : completions(beta1, beta2)) {
        HalfIntMatrix big = block_embed(beta1, B0, beta2);
        out.cyc += coeff_c(spec, big, provider).cyc;
    }
    return out;
}

Cyc bs_fourier(const DirichletCharacter& chi, long size, long p, long conductor_exp, const QMat& lam) {
    if (lam.rows != size || lam.cols != size) throw std::domain_error("bs_fourier: lambda shape mismatch");
    DirichletCharacter prim = chi.primitive_part();
    if (prim.is_trivial()) {
        if (size != 1) throw std::domain_error("bs_fourier: trivial branch implemented for size 1 only");
        const Rat& x = lam(0, 0);
        auto in_Zp = [&](const Rat& y) { return y == 0 || vp_rat(y, Int(p)) >= 0; };
        Rat v(0);
        if (in_Zp(x)) v += 1;
        if (in_Zp(x * p)) v -= Rat(1, p);
        return Cyc(v);
    }
    long c = 0;
    long f = prim.conductor();
    while (f % p == 0) {
        f /= p;
        ++c;
    }
    if (f != 1) throw std::domain_error("bs_fourier: character conductor must be a p-power");
    if (c != conductor_exp) throw std::domain_error("bs_fourier: conductor exponent mismatch");
    // p^c lam must be in GL(size, Z_p)
    QMat M(size, size);
    Rat pc = pow_rat(Rat(p), c);
    bool integral = true;
    for (long i = 0; i < size && integral; ++i)
        for (long j = 0; j < size; ++j) {
            M(i, j) = lam(i, j) * pc;
            if (M(i, j) != 0 && vp_rat(M(i, j), Int(p)) < 0) { integral = false; break; }
        }
    if (!integral) return Cyc::zero();
    Rat dm = det_q(M);
    if (dm == 0 || vp_rat(dm, Int(p)) != 0) return Cyc::zero();
    // under e_p(x) = e^{-2 pi i {x}} the additive-character Gauss integral
    // equals chi(-1) times the classical sum
    Cyc G = prim(Int(-1)) * gauss_sum(prim);
    long e2 = size * (size + 1) * c;
    if (e2 % 2 != 0) throw std::logic_error("bs_fourier: odd exponent");
    Cyc out(pow_rat(Rat(p), -e2 / 2));
    out *= G.pow(size);
    out *= prim.inverse().at_rational(dm);
    return out;
}

bool cyc_congruent_mod(const Cyc& a, const Cyc& b, long p, long e) {
    Cyc d = a - b;
    for (const Rat& q : d.coeffs()) {
        if (q == 0) continue;
        if (mpz_divisible_p(q.get_den().get_mpz_t(), Int(p).get_mpz_t())) return false;
        if (vp_int(q.get_num(), Int(p)) < e) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// brute-force Siegel-series provider
// ---------------------------------------------------------------------------

namespace {

long vq_long(long long x, long q, long cap) {
    if (x == 0) return cap;
    if (x < 0) x = -x;
    long v = 0;
    while (x % q == 0 && v < cap) {
        x /= q;
        ++v;
    }
    return v;
}

// per-shell phase sums: sums[nuexp] += zeta_{q^K}^{-phase}
struct ShellData {
    std::vector<Cyc> by_nuexp;  // index nuexp, up to 2K
};

// exact terminating Whittaker sum data for one form
struct SeriesData {
    long K;
    std::vector<ShellData> shells;  // index by shell level l = 0..K
};

SeriesData whittaker_shells(const HalfIntMatrix& beta, long q, long K) {
    long m = beta.n;
    // the additive phase Tr(beta x) has denominator (2N) q^l; at q = 2 the
    // half-integral pairing contributes one extra power of q
    long e2 = (q == 2) ? 1 : 0;
    long unit_den = (q == 2) ? beta.N : 2 * beta.N;
    long qKe = 1;
    for (long i = 0; i < K + e2; ++i) qKe *= q;
    long long iu = mpz_get_si(inv_mod(Int(unit_den), Int(qKe)).get_mpz_t());
    SeriesData sd;
    sd.K = K;
    sd.shells.resize(static_cast<size_t>(K + 1));
    for (auto& sh : sd.shells) sh.by_nuexp.assign(static_cast<size_t>(2 * K + 1), Cyc::zero());
    // phase accumulation buckets as raw counts, converted to Cyc per shell
    for (long l = 0; l <= K; ++l) {
        long ql = 1;
        for (long i = 0; i < l; ++i) ql *= q;
        long qle = ql * (e2 ? q : 1);  // phase modulus at this shell
        long scale = qKe / qle;
        std::vector<std::vector<long long>> counts(static_cast<size_t>(2 * K + 1),
                                                   std::vector<long long>(static_cast<size_t>(qKe), 0));
        if (l == 0) {
            counts[0][0] += 1;
        } else if (m == 1) {
            long long P00 = mpz_get_si(mod_pos(beta.twice_scaled(0, 0), Int(qle)).get_mpz_t());
            for (long s = 0; s < ql; ++s) {
                if (s % q == 0) continue;
                long long T = P00 * s % qle;
                long long phase = T * iu % qle;
                counts[static_cast<size_t>(l)][static_cast<size_t>(phase * scale)] += 1;
            }
        } else {  // m == 2
            long long P11 = mpz_get_si(mod_pos(beta.twice_scaled(0, 0), Int(qle)).get_mpz_t());
            long long P12 = mpz_get_si(mod_pos(beta.twice_scaled(0, 1), Int(qle)).get_mpz_t());
            long long P22 = mpz_get_si(mod_pos(beta.twice_scaled(1, 1), Int(qle)).get_mpz_t());
            for (long a = 0; a < ql; ++a)
                for (long b = 0; b < ql; ++b) {
                    long long Tab = P11 * a + 2 * P12 * b;
                    for (long cc = 0; cc < ql; ++cc) {
                        if (a % q == 0 && b % q == 0 && cc % q == 0) continue;
                        long long det = static_cast<long long>(a) * cc - static_cast<long long>(b) * b;
                        long vdet = vq_long(det, q, 2 * l + 1);
                        long a2 = std::min<long>(vdet, l);
                        long nuexp = l + std::max(0L, l - a2);
                        long long T = (Tab + P22 * cc) % qle;
                        long long phase = T * iu % qle;
                        counts[static_cast<size_t>(nuexp)][static_cast<size_t>(phase * scale)] += 1;
                    }
                }
        }
        for (long e = 0; e <= 2 * K; ++e) {
            Cyc acc = Cyc::zero();
            for (long ph = 0; ph < qKe; ++ph) {
                long long ct = counts[static_cast<size_t>(e)][static_cast<size_t>(ph)];
                if (!ct) continue;
                acc += Cyc(Rat(static_cast<long>(ct))) * Cyc::root_of_unity(qKe, -ph);
            }
            sd.shells[static_cast<size_t>(l)].by_nuexp[static_cast<size_t>(e)] = acc;
        }
    }
    return sd;
}

bool shell_vanishes(const ShellData& sh) {
    for (const Cyc& c : sh.by_nuexp)
        if (!c.is_zero()) return false;
    return true;
}

Rat series_value(const SeriesData& sd, long q, long z) {
    Cyc total = Cyc::zero();
    for (const auto& sh : sd.shells)
        for (size_t e = 0; e < sh.by_nuexp.size(); ++e) {
            if (sh.by_nuexp[e].is_zero()) continue;
            total += Cyc(pow_rat(Rat(q), -z * static_cast<long>(e))) * sh.by_nuexp[e];
        }
    return total.to_rational();
}

class BruteForceProvider : public SiegelSeriesProvider {
  public:
    BruteForceProvider(long max_size, long extra) : max_size_(max_size), extra_(extra) {}

    Capability capability() const override { return Capability{max_size_, 2}; }

    std::vector<Rat> polynomial(const HalfIntMatrix& beta, const Int& q) const override {
        if (!mpz_probab_prime_p(q.get_mpz_t(), 25)) throw std::domain_error("provider: q must be prime");
        if (mpz_divisible_p(Int(beta.N).get_mpz_t(), q.get_mpz_t()))
            throw ProviderCapability("provider: q divides the level");
        long rk = rank(beta);
        if (rk == 0) return {Rat(1)};
        HalfIntMatrix core = (rk == beta.n) ? beta : nondegenerate_core(beta);
        long m = core.n;
        if (m > max_size_ || m > 2) throw ProviderCapability("provider: core size beyond capability");
        long ql = mpz_get_si(q.get_mpz_t());
        // size-1 reference is 2*beta_0 = (2), the minimal-valuation form; at
        // q = 2 this is the classical sigma-series normalization
        // cache
        std::string key = cache_key(core, ql);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;

        long val = vp_int(det_z(core.twice_scaled), q) - static_cast<long>(m) * vp_int(Int(core.N), q);
        if (val > capability().max_valuation)
            throw ProviderCapability("provider: det valuation beyond capability");
        long K = val + extra_;
        long entries = (m == 1) ? 1 : 3;
        double work = 0;
        for (long l = 0; l <= K; ++l) {
            double shell = 1;
            for (long i = 0; i < entries * l; ++i) shell *= ql;
            work += shell;
        }
        if (work > 4.0e8) throw ProviderCapability("provider: enumeration too large");

        SeriesData sb = whittaker_shells(core, ql, K);
        if (!shell_vanishes(sb.shells.back()))
            throw NonConvergent("provider: last shell nonzero; raise max_denominator_exponent");

        // unimodular reference of the same size
        HalfIntMatrix ref = (m == 1) ? HalfIntMatrix(1, 1, [] {
            ZMat s(1, 1);
            s(0, 0) = 2;
            return s;
        }())
                                     : HalfIntMatrix(2, 1, [] {
                                           ZMat s(2, 2);
                                           s(0, 1) = 1;
                                           s(1, 0) = 1;
                                           return s;
                                       }());
        SeriesData s0 = whittaker_shells(ref, ql, std::max(K, 2L));
        if (!shell_vanishes(s0.shells.back()))
            throw NonConvergent("provider: reference shells did not stabilize");

        long dg = 2 * m * val;
        long lam_core = (m % 2 == 0) ? lambda_char_value(core, ql) : 0;
        long lam_ref = (m % 2 == 0) ? lambda_char_value(ref, ql) : 0;
        std::vector<Rat> ts, gs;
        long z = 2;
        while (static_cast<long>(ts.size()) < dg + 2) {
            Rat b = series_value(sb, ql, z);
            Rat b0 = series_value(s0, ql, z);
            if (b0 == 0) { ++z; continue; }
            Rat g = b / b0;
            if (m % 2 == 0) {
                Rat mid_num = Rat(1) - Rat(lam_core) * pow_rat(Rat(ql), m / 2 - z);
                Rat mid_den = Rat(1) - Rat(lam_ref) * pow_rat(Rat(ql), m / 2 - z);
                if (mid_den == 0) { ++z; continue; }
                g *= mid_num / mid_den;
            }
            g.canonicalize();
            ts.push_back(pow_rat(Rat(ql), -z));
            gs.push_back(g);
            ++z;
        }
        std::vector<Rat> poly = lagrange(ts, gs, dg);
        // consistency at the spare sample point
        Rat check(0), tp(1);
        for (const Rat& c : poly) {
            check += c * tp;
            tp *= ts.back();
        }
        if (check != gs.back()) throw std::logic_error("provider: interpolation inconsistent with spare sample");
        for (const Rat& c : poly)
            if (c.get_den() != 1) throw std::logic_error("provider: non-integer Siegel-series coefficient");
        if (poly.empty() || poly[0] != 1) throw std::logic_error("provider: g(0) != 1");
        cache_[key] = poly;
        return poly;
    }

  private:
    long max_size_;
    long extra_;
    mutable std::map<std::string, std::vector<Rat>> cache_;

    static std::string cache_key(const HalfIntMatrix& core, long q) {
        std::string s = std::to_string(core.n) + "|" + std::to_string(core.N) + "|" + std::to_string(q);
        for (const Int& e : core.twice_scaled.a) s += "," + e.get_str();
        return s;
    }

    static long lambda_char_value(const HalfIntMatrix& b, long q) {
        DirichletCharacter lam = lambda_beta_character(b);
        Cyc v = lam(Int(q));
        if (v.is_zero()) return 0;
        Rat r = v.to_rational();
        return (r == 1) ? 1 : -1;
    }

    // interpolate a degree <= dg polynomial through the first dg+1 points
    static std::vector<Rat> lagrange(const std::vector<Rat>& xs, const std::vector<Rat>& ys, long dg) {
        long npts = dg + 1;
        std::vector<Rat> poly(static_cast<size_t>(npts), Rat(0));
        for (long i = 0; i < npts; ++i) {
            // basis polynomial prod_{j != i} (x - x_j)/(x_i - x_j)
            std::vector<Rat> basis = {Rat(1)};
            Rat denom(1);
            for (long j = 0; j < npts; ++j) {
                if (j == i) continue;
                std::vector<Rat> nb(basis.size() + 1, Rat(0));
                for (size_t t = 0; t < basis.size(); ++t) {
                    nb[t + 1] += basis[t];
                    nb[t] -= basis[t] * xs[static_cast<size_t>(j)];
                }
                basis = std::move(nb);
                denom *= xs[static_cast<size_t>(i)] - xs[static_cast<size_t>(j)];
            }
            for (size_t t = 0; t < basis.size(); ++t) {
                poly[t] += basis[t] * ys[static_cast<size_t>(i)] / denom;
                poly[t].canonicalize();
            }
        }
        while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
        return poly;
    }
};

}  // namespace

Cyc SiegelSeriesProvider::evaluate(const HalfIntMatrix& beta, const Int& q, const Cyc& t) const {
    std::vector<Rat> poly = polynomial(beta, q);
    Cyc out = Cyc::zero();
    for (long i = static_cast<long>(poly.size()) - 1; i >= 0; --i)
        out = out * t + Cyc(poly[static_cast<size_t>(i)]);
    return out;
}

std::unique_ptr<SiegelSeriesProvider> brute_force_provider(long max_size, long extra_denominator_exponent) {
    return std::make_unique<BruteForceProvider>(max_size, extra_denominator_exponent);
}

}  // namespace siegel
