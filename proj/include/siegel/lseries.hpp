#ifndef SIEGEL_LSERIES_HPP
#define SIEGEL_LSERIES_HPP

#include <vector>

#include "siegel/dirichlet.hpp"

namespace siegel {

// Classical Bernoulli numbers, B_1 = -1/2.
Rat bernoulli(unsigned long k);

// Bernoulli polynomial B_k(x).
Rat bernoulli_poly(unsigned long k, const Rat& x);

// Generalized Bernoulli number B_{k,chi} = f^{k-1} sum_{a=1}^{f} chi(a) B_k(a/f).
// For the trivial character mod 1 this gives B_k(1), i.e. B_k except k = 1
// where the value is +1/2.
Cyc gen_bernoulli(unsigned long k, const DirichletCharacter& chi);

struct LValue {
    Cyc value;
    bool parity_mismatch = false;  // chi(-1) != (-1)^k; value is 0 for primitive chi
};

// L(1-k, chi) = -B_{k,chi}/k for k >= 1.
LValue L_nonpositive(const DirichletCharacter& chi, long s_one_minus_k);

// L-value with the Euler factors at `removed` primes stripped:
// L(1-k,chi) * prod_q (1 - chi(q) q^{k-1}).
Cyc partial_L(const DirichletCharacter& chi, long s_one_minus_k, const std::vector<Int>& removed_primes);

// Gauss sum of a primitive character: sum_{a mod f} chi(a) zeta_f^a.
Cyc gauss_sum(const DirichletCharacter& chi);

}  // namespace siegel

#endif
