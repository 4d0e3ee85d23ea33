#ifndef SIEGEL_EISENSTEIN_HPP
#define SIEGEL_EISENSTEIN_HPP

#include <memory>

#include "siegel/euler.hpp"
#include "siegel/lseries.hpp"
#include "siegel/symmat.hpp"

namespace siegel {

// Which family of sections the coefficients belong to: the full
// (cyclotomic-variable) family or the improved one.
enum class EisMode { Full, Improved };

struct EisensteinSpec {
    long n;  // coefficients are indexed by size-2n matrices
    long N;
    long p;
    DirichletCharacter phi;  // tame, conductor dividing N; phi^2 nontrivial
    ArithmeticWeight weight; // parabolic of GL(n), t's and eps's
    EisMode mode;
    long k = 0;                                    // Full mode cyclotomic weight
    DirichletCharacter chi = DirichletCharacter(); // Full mode finite part, p-power conductor

    void validate() const;  // admissibility + parity invariants
};

// sign * 2^pow2 * pi^powpi * gamma_rational, with powpi in (1/2)Z.
struct ArchNormalization {
    int sign = 1;
    long pow2 = 0;
    Rat powpi = Rat(0);
    Rat gamma_rational = Rat(1);

    ArchNormalization operator*(const ArchNormalization& o) const;
    bool is_identity() const;
};

// Gamma_m(s) = pi^{m(m-1)/4} prod_j Gamma(s - j/2) at s = (2n+1)/2, returned
// as (power of pi, rational).
std::pair<Rat, Rat> gamma_m_half_integral(long m, const Rat& s);

// the normalization record of the algebraic Eisenstein family
ArchNormalization arch_norm(long k, long n);
// the reciprocal record carried by the archimedean Whittaker value
ArchNormalization arch_whittaker_row(long k, long n);

// Siegel-series evaluation interface with a capability descriptor.
class SiegelSeriesProvider {
  public:
    struct Capability {
        long max_size = 2;
        long max_valuation = 2;
    };
    virtual ~SiegelSeriesProvider() = default;
    virtual Capability capability() const = 0;
    // coefficients (ascending) of g_{beta,q} in Z[t]
    virtual std::vector<Rat> polynomial(const HalfIntMatrix& beta, const Int& q) const = 0;
    Cyc evaluate(const HalfIntMatrix& beta, const Int& q, const Cyc& t) const;
};

// Brute-force oracle: terminating Whittaker exponential sum over
// Sym(m, q^{-K} Z/Z), normalized against the unimodular reference form,
// interpolated from >= degree+1 sample points.  K defaults to
// val_q(det(2*core)) + extra_denominator_exponent; the last shell must
// vanish or NonConvergent is thrown.
std::unique_ptr<SiegelSeriesProvider> brute_force_provider(long max_size = 2,
                                                           long extra_denominator_exponent = 2);

// the Schwartz-function Fourier transform at p evaluated at beta (size 2n)
Cyc schwartz_hat(const EisensteinSpec& spec, const HalfIntMatrix& beta);

struct CoeffValue {
    Cyc cyc;
    ArchNormalization arch;
};

// single Fourier coefficient of the normalized Eisenstein family
CoeffValue coeff_c(const EisensteinSpec& spec, const HalfIntMatrix& beta,
                   const SiegelSeriesProvider& provider);

// sum over all PSD completions [[beta1, beta0],[t(beta0), beta2]]
CoeffValue restricted_coeff(const EisensteinSpec& spec, const HalfIntMatrix& beta1,
                            const HalfIntMatrix& beta2, const SiegelSeriesProvider& provider);

// quadratic character value ((-1)^{rank/2} det*(beta) / q), q odd
int lambda_beta(const HalfIntMatrix& beta, const Int& q);
// the associated primitive quadratic Dirichlet character
DirichletCharacter lambda_beta_character(const HalfIntMatrix& beta);

// Closed forms of the inverse Fourier transform of
// y -> 1_{GL(size,Z_p)}(y) chi(det(-y)) on M_size(Q_p):
//   ramified (cond = p^c > 1): p^{-size(size+1)c/2} G^size 1_{GL}(p^c lam) chi^{-1}(det(p^c lam))
//   trivial, size 1:           1_{Z_p}(lam) - p^{-1} 1_{Z_p}(p lam)
Cyc bs_fourier(const DirichletCharacter& chi, long size, long p, long conductor_exp, const QMat& lam);

// coefficientwise congruence of cyclotomic values mod p^e (requires
// p-integral coefficients in the common canonical basis)
bool cyc_congruent_mod(const Cyc& a, const Cyc& b, long p, long e);

}  // namespace siegel

#endif
