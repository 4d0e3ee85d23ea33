#ifndef SIEGEL_EULER_HPP
#define SIEGEL_EULER_HPP

#include <vector>

#include "siegel/cosets.hpp"
#include "siegel/cyclotomic.hpp"
#include "siegel/dirichlet.hpp"

namespace siegel {

// Arithmetic weight point: dominant algebraic part t_1 >= ... >= t_d plus
// finite-order parts of p-power conductor, one per block.
struct ArithmeticWeight {
    PartitionParabolic parabolic;
    std::vector<long> t;                   // size d
    std::vector<DirichletCharacter> eps;   // size d, p-power conductors

    ArithmeticWeight(PartitionParabolic P, std::vector<long> t_, std::vector<DirichletCharacter> eps_);
    long d() const { return parabolic.d(); }
    bool admissible() const;  // t_d >= n+1 on top of dominance
};

struct TameCharacter {
    DirichletCharacter chi;  // modulus dividing N
    Cyc value_at_p;          // phi_p(p)
};

// Satake parameters of a P-ordinary local representation: exact field values
// together with their declared p-adic valuations (as exact rationals), so the
// Newton-Hodge tests never touch the field embedding.
struct SatakeData {
    ArithmeticWeight weight;
    long p;
    std::vector<Cyc> alphas;      // size n
    std::vector<Rat> valuations;  // size n

    SatakeData(ArithmeticWeight w, long p_, std::vector<Cyc> a, std::vector<Rat> v);
    long n() const { return weight.parabolic.n; }
};

// Newton-above-Hodge partial-sum inequalities and block-sum equalities.
bool is_P_ordinary(const SatakeData& data);

// U^P_{p,i}-eigenvalues a_1..a_n; a_{N_i} by the block product formula,
// intermediate ones via elementary symmetric polynomials of the block alphas.
std::vector<Cyc> up_eigenvalues(const SatakeData& data);
// declared valuations of the same
std::vector<Rat> up_eigenvalue_valuations(const SatakeData& data);

// Local gamma factor of block i with cyclotomic twist chi (the twist entering
// block i is chi * eps_i^{-1}):
//   unramified: prod_j (1 - phi(p)^-1 alpha_j^-1 p^{s-1}) / (1 - phi(p) alpha_j p^{-s})
//   ramified:   G(chi eps_i^-1)^{n_i} prod_j (phi(p)^-1 alpha_j^-1 p^{s-1})^c
Cyc gamma_p(long s, long block_i, const SatakeData& data, const TameCharacter& phi,
            const DirichletCharacter& chi);

// E_p(s, pi x phi chi) = prod over blocks of the gamma factors.
Cyc E_p(long s, const SatakeData& data, const TameCharacter& phi, const DirichletCharacter& chi);

// Improved factor: gamma factors for blocks 1..d-1 twisted by eps_d, times
// L_p(s, sigma_d x phi) = prod_{j > N_{d-1}} (1 - phi(p) alpha_j p^{-s})^{-1}.
Cyc E_imp(long s, const SatakeData& data, const TameCharacter& phi);

// A^P = prod_{j > N_{d-1}} (1 - phi(p)^-1 alpha_j^-1 p^{n - t_d}); evaluated
// both as the product and through the U_p-eigenvalue expansion, which must
// agree (MismatchedForms otherwise).
Cyc A_P(const SatakeData& data, const TameCharacter& phi);

// Doubling normalizer d_v(s, xi) at half-integer s:
//   L_v(s + (2n+1)/2, xi) * prod_{j=1..n} L_v(2s + 2n + 1 - 2j, xi^2)
// with L_v(m, xi) = (1 - xi(v) v^{-m})^{-1}.
Cyc d_factor(const Rat& s, const DirichletCharacter& xi, long n, const std::vector<Int>& primes);

enum class TrivialZeroKind { None, Crystalline, SemiStable };

// Classification at the near-central point s = 0 (k = n+1).
TrivialZeroKind classify_trivial_zero(const SatakeData& data, const TameCharacter& phi);

const char* to_string(TrivialZeroKind k);

}  // namespace siegel

#endif
