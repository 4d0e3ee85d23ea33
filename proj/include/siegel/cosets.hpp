#ifndef SIEGEL_COSETS_HPP
#define SIEGEL_COSETS_HPP

#include <cstdint>
#include <vector>

#include "siegel/numeric.hpp"

namespace siegel {

// Block upper-triangular parabolic of GL(n) given by a partition
// n = n_1 + ... + n_d.
struct PartitionParabolic {
    long n;
    std::vector<long> parts;

    PartitionParabolic(long n_, std::vector<long> parts_);
    long d() const { return static_cast<long>(parts.size()); }
    // N_i = n_1 + ... + n_i, with N_0 = 0
    long cum(long i) const;
    // block index j (1-based) with N_{j-1} < i <= N_j
    long block_of(long i) const;
};

struct CosetSpec {
    PartitionParabolic parabolic;
    long r;   // 1 <= r <= n_d
    long p;   // prime
    long l;   // level exponent
    std::uint64_t budget = 10000000;  // group-size guard
};

// Matrix over Z/p^l, entries row-major in [0, p^l).
using ModMat = std::vector<std::uint8_t>;

struct DoubleCosets {
    long n;
    long mod;                         // p^l
    std::vector<ModMat> reps;         // one representative per coset
    std::vector<std::uint64_t> sizes; // coset sizes, same order
    std::vector<char> flat;           // flat flag per coset
    std::uint64_t group_size;
};

// Orbit partition of GL(n, Z/p^l) under (P°_{n,r}, SP) two-sided action.
DoubleCosets enumerate_double_cosets(const CosetSpec& spec);

// Representatives in the flat locus P°_{n,r} P_{n,r} w SP.
std::vector<ModMat> flat_subset(const CosetSpec& spec);

struct IndexReport {
    std::uint64_t total_cosets;
    std::uint64_t flat_count;
    std::uint64_t predicted_flat;
    bool match;
    std::uint64_t group_size;
};

// predicted_flat = 1 if r < n_d, else p^{l-1}(p-1).
IndexReport verify_index_formula(const CosetSpec& spec);

}  // namespace siegel

#endif
