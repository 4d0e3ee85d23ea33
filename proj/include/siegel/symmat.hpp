#ifndef SIEGEL_SYMMAT_HPP
#define SIEGEL_SYMMAT_HPP

#include <vector>

#include "siegel/linalg.hpp"

namespace siegel {

// Half-integral symmetric Fourier index beta in N^{-1}Sym(n,Z)*, stored as
// the integer matrix 2N*beta (symmetric, even diagonal).  All predicates on
// beta reduce to integer linear algebra on the stored matrix.
struct HalfIntMatrix {
    long n = 0;
    long N = 1;
    ZMat twice_scaled;  // 2N*beta

    HalfIntMatrix() = default;
    HalfIntMatrix(long n_, long N_, ZMat m);

    static HalfIntMatrix zero(long n, long N = 1);
    // beta from a rational symmetric matrix (must be half-integral of level N)
    static HalfIntMatrix from_rational(long N, const QMat& beta);

    QMat rational() const;  // beta itself over Q
    Rat trace_N() const;    // trace(N*beta); integrality is not forced
    bool operator==(const HalfIntMatrix& o) const {
        return n == o.n && N == o.N && twice_scaled == o.twice_scaled;
    }
    bool operator<(const HalfIntMatrix& o) const;  // (trace, row-major) ordering key
};

// The sublattice Z^{split} + p^e Z^{n-split} of the dual lattice.
struct LatticeCondition {
    long n;
    long split;  // n' = N_{d-1}
    Int p;
    long e = 1;
};

long rank(const HalfIntMatrix& beta);
long corank(const HalfIntMatrix& beta);

// Saturated integer kernel { v : beta v = 0 }, rows in HNF order.
std::vector<std::vector<Int>> radical_basis(const HalfIntMatrix& beta);

// True iff the radical contains a vector not divisible by p lying in
// Z^{split} + p^e Z^{n-split}.
bool radical_has_primitive_in(const HalfIntMatrix& beta, const LatticeCondition& L);

// t(a) * beta * a
HalfIntMatrix transform(const HalfIntMatrix& beta, const ZMat& a);

bool is_psd(const HalfIntMatrix& beta);
bool is_pd(const HalfIntMatrix& beta);

// All PSD beta with trace(N*beta) <= max_trace, sorted by (trace, row-major).
std::vector<HalfIntMatrix> enumerate(long n, long N, long max_trace);

// All blocks beta0 (as integer matrices 2N*beta0) making
// [[beta1, beta0],[t(beta0), beta2]] PSD; deterministic row-major order.
std::vector<ZMat> completions(const HalfIntMatrix& beta1, const HalfIntMatrix& beta2);

// Assemble the size-2n index from blocks; beta0 passed as 2N*beta0.
HalfIntMatrix block_embed(const HalfIntMatrix& beta1, const ZMat& twice_scaled_beta0,
                          const HalfIntMatrix& beta2);

// det* = product of the nonzero eigenvalues of 2N*beta (exact, via the sum
// of principal rank-minors).
Rat det_star_twice_scaled(const HalfIntMatrix& beta);
// det* of beta itself
Rat det_star(const HalfIntMatrix& beta);

// Nondegenerate core: the induced form on Z^n / radical, expressed in a
// complement basis (size rank x rank, same level).  For nondegenerate beta
// this is beta itself up to basis choice.
HalfIntMatrix nondegenerate_core(const HalfIntMatrix& beta);

}  // namespace siegel

#endif
