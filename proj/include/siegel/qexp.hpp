#ifndef SIEGEL_QEXP_HPP
#define SIEGEL_QEXP_HPP

#include <cstdint>
#include <map>
#include <optional>

#include "siegel/cosets.hpp"
#include "siegel/symmat.hpp"

namespace siegel {

// Truncated q-expansion with coefficients in Z/p^m.  Stored indices are PSD,
// half-integral of level N, with trace(N*beta) <= trace_bound; zero residues
// are never stored.
class QExpansion {
  public:
    QExpansion(PartitionParabolic parabolic, long N, long p, long m, long trace_bound);

    const PartitionParabolic& parabolic() const { return parabolic_; }
    long n() const { return parabolic_.n; }
    long N() const { return N_; }
    long p() const { return p_; }
    long m() const { return m_; }
    long trace_bound() const { return trace_bound_; }
    std::uint64_t modulus() const { return pm_; }
    // the reduced bound hit zero: only the constant term is certified
    bool constant_term_only() const { return trace_bound_ == 0; }

    // stored value, 0 inside the bound, nullopt (Unknown) beyond it
    std::optional<std::uint64_t> coefficient(const HalfIntMatrix& beta) const;
    void set_coefficient(const HalfIntMatrix& beta, std::uint64_t value);
    const std::map<HalfIntMatrix, std::uint64_t>& coefficients() const { return coeffs_; }

    bool same_shape(const QExpansion& o) const;
    // equality of certified coefficients on the common bound
    bool agrees_on_common_bound(const QExpansion& o) const;

  private:
    PartitionParabolic parabolic_;
    long N_, p_, m_, trace_bound_;
    std::uint64_t pm_;
    std::map<HalfIntMatrix, std::uint64_t> coeffs_;
};

// Largest certified trace bound for U^P_{p,N_i} applied to a bound-T input.
long up_reduced_bound(long T, long n, long N, long p, long Ni);

// U^P_{p,N_i} on q-expansions:
// (Uf)(beta) = sum over x in M_{N_i,n-N_i}(Z/p) of f(t(M) beta M),
// M = [[p I, N x],[0, I]].
QExpansion up_Ni(const QExpansion& f, long i);

// U^P_p = prod_{i=1..d} U^P_{p,N_i}
QExpansion up_composite(const QExpansion& f);

// true iff every stored coefficient at rank(beta) <= k vanishes
bool vanishes_rank_le(const QExpansion& f, long k);

// the V^{SP,r,flat} predicate at the q-expansion level
bool is_flat(const QExpansion& f, long r);

struct ProjectResult {
    QExpansion value;
    long steps_used;
};

// Stabilization-based ordinary projector: iterate h_{j+1} = (U^P_p)^{j*j!} h_j
// until two consecutive iterates agree on the surviving common bound.
ProjectResult ordinary_project(const QExpansion& f, long max_steps);

struct StratumParams {
    PartitionParabolic parabolic;
    long N, p, m, trace_bound;
    long support_size = 12;
};

// Deterministic pseudo-random expansion satisfying vanishes_rank_le(., n-r-1).
QExpansion random_in_stratum(const StratumParams& params, long r, std::uint64_t seed);

}  // namespace siegel

#endif
