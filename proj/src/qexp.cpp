#include "siegel/qexp.hpp"

#include <random>

namespace siegel {

QExpansion::QExpansion(PartitionParabolic parabolic, long N, long p, long m, long trace_bound)
    : parabolic_(std::move(parabolic)), N_(N), p_(p), m_(m), trace_bound_(trace_bound) {
    if (N < 1 || p < 2 || m < 1 || trace_bound < 0) throw std::domain_error("QExpansion: bad parameters");
    pm_ = 1;
    for (long i = 0; i < m; ++i) {
        pm_ *= static_cast<std::uint64_t>(p);
        if (pm_ > (1ull << 40)) throw std::domain_error("QExpansion: p^m too large");
    }
}

std::optional<std::uint64_t> QExpansion::coefficient(const HalfIntMatrix& beta) const {
    if (beta.n != parabolic_.n || beta.N != N_) throw std::domain_error("coefficient: index shape mismatch");
    if (beta.trace_N() > trace_bound_) return std::nullopt;
    auto it = coeffs_.find(beta);
    if (it == coeffs_.end()) return 0;
    return it->second;
}

void QExpansion::set_coefficient(const HalfIntMatrix& beta, std::uint64_t value) {
    if (beta.n != parabolic_.n || beta.N != N_) throw std::domain_error("set_coefficient: index shape mismatch");
    if (!is_psd(beta)) throw std::domain_error("set_coefficient: index not PSD");
    if (beta.trace_N() > trace_bound_) throw std::domain_error("set_coefficient: index beyond trace bound");
    value %= pm_;
    if (value == 0)
        coeffs_.erase(beta);
    else
        coeffs_[beta] = value;
}

bool QExpansion::same_shape(const QExpansion& o) const {
    return parabolic_.n == o.parabolic_.n && parabolic_.parts == o.parabolic_.parts && N_ == o.N_ &&
           p_ == o.p_ && m_ == o.m_;
}

bool QExpansion::agrees_on_common_bound(const QExpansion& o) const {
    if (!same_shape(o)) return false;
    long T = std::min(trace_bound_, o.trace_bound_);
    for (const auto& [beta, v] : coeffs_) {
        if (beta.trace_N() > T) continue;
        auto w = o.coefficient(beta);
        if (!w || *w != v) return false;
    }
    for (const auto& [beta, v] : o.coeffs_) {
        if (beta.trace_N() > T) continue;
        auto w = coefficient(beta);
        if (!w || *w != v) return false;
    }
    return true;
}

long up_reduced_bound(long T, long n, long N, long p, long Ni) {
    // ||M||_1 * ||M||_inf bound for M = [[p I_k, N x],[0, I_{n-k}]],
    // entries of x in [0, p-1]; exact p^2 when k = n (x empty).
    long k = Ni;
    long shrink;
    if (k == n) {
        shrink = p * p;
    } else {
        long col = std::max(p, 1 + N * (p - 1) * k);
        long row = std::max(p + N * (p - 1) * (n - k), 1L);
        shrink = col * row;
    }
    return T / shrink;
}

QExpansion up_Ni(const QExpansion& f, long i) {
    const PartitionParabolic& P = f.parabolic();
    if (i < 1 || i > P.d()) throw std::domain_error("up_Ni: block index out of range");
    long n = P.n, N = f.N(), p = f.p();
    long k = P.cum(i);
    long T2 = up_reduced_bound(f.trace_bound(), n, N, p, k);
    QExpansion out(P, N, p, f.m(), T2);

    // push each stored source coefficient through every x: the target is
    // beta = t(M^-1) gamma M^-1 when that index is half-integral of level N.
    long xcount = 1;
    for (long t = 0; t < k * (n - k); ++t) xcount *= p;
    std::vector<long> xent(static_cast<size_t>(std::max(k * (n - k), 1L)), 0);
    for (const auto& [gamma, value] : f.coefficients()) {
        for (long code = 0; code < xcount; ++code) {
            long rem = code;
            for (long t = 0; t < k * (n - k); ++t) {
                xent[static_cast<size_t>(t)] = rem % p;
                rem /= p;
            }
            // Minv = [[p^-1 I, -p^-1 N x],[0, I]]
            QMat Minv(n, n);
            for (long a = 0; a < k; ++a) Minv(a, a) = Rat(1, p);
            for (long a = k; a < n; ++a) Minv(a, a) = 1;
            for (long a = 0; a < k; ++a)
                for (long b = 0; b < n - k; ++b)
                    Minv(a, k + b) = Rat(-N * xent[static_cast<size_t>(a * (n - k) + b)], p);
            QMat g = to_qmat(gamma.twice_scaled);
            QMat target = mat_mul(mat_mul(mat_transpose(Minv), g), Minv);
            // half-integrality: entries of 2N*beta integral, diagonal even
            bool ok = true;
            ZMat S(n, n);
            for (long a = 0; a < n && ok; ++a)
                for (long b = 0; b < n && ok; ++b) {
                    if (target(a, b).get_den() != 1) { ok = false; break; }
                    S(a, b) = target(a, b).get_num();
                    if (a == b && S(a, b) % 2 != 0) ok = false;
                }
            if (!ok) continue;
            HalfIntMatrix beta(n, N, std::move(S));
            if (beta.trace_N() > T2) continue;
            auto cur = out.coefficient(beta);
            out.set_coefficient(beta, (*cur + value) % out.modulus());
        }
    }
    return out;
}

QExpansion up_composite(const QExpansion& f) {
    QExpansion h = f;
    for (long i = 1; i <= f.parabolic().d(); ++i) h = up_Ni(h, i);
    return h;
}

bool vanishes_rank_le(const QExpansion& f, long k) {
    for (const auto& [beta, v] : f.coefficients()) {
        if (v == 0) continue;
        if (rank(beta) <= k) return false;
    }
    return true;
}

bool is_flat(const QExpansion& f, long r) {
    const PartitionParabolic& P = f.parabolic();
    if (r > P.parts.back()) throw std::domain_error("is_flat: r exceeds n_d");
    if (!vanishes_rank_le(f, P.n - r - 1)) return false;
    LatticeCondition L{P.n, P.cum(P.d() - 1), Int(f.p()), 1};
    for (const auto& [beta, v] : f.coefficients()) {
        if (v == 0) continue;
        if (corank(beta) != r) continue;
        if (radical_has_primitive_in(beta, L)) return false;
    }
    return true;
}

ProjectResult ordinary_project(const QExpansion& f, long max_steps) {
    // h_j = (U^P_p)^{j!} f computed incrementally
    QExpansion h = up_composite(f);  // j = 1
    for (long j = 1; j <= max_steps; ++j) {
        // h_next = (U^P_p)^{j * j!} h, so that h_next = (U^P_p)^{(j+1)!} f
        QExpansion h_next = h;
        Int extra = Int(j) * factorial(static_cast<unsigned long>(j));
        if (extra > 10000) throw NotStabilized("ordinary_project: factorial exponent too large");
        long e = mpz_get_si(extra.get_mpz_t());
        for (long t = 0; t < e; ++t) h_next = up_composite(h_next);
        bool agree = h.agrees_on_common_bound(h_next);
        long common = std::min(h.trace_bound(), h_next.trace_bound());
        bool all_zero = h.coefficients().empty() && h_next.coefficients().empty();
        // return the earlier iterate: same certified values, larger bound
        if (agree && (common >= 1 || all_zero)) return ProjectResult{h, j};
        if (common == 0) throw NotStabilized("ordinary_project: trace bound exhausted before stabilization");
        h = h_next;
    }
    throw NotStabilized("ordinary_project: max_steps reached");
}

QExpansion random_in_stratum(const StratumParams& params, long r, std::uint64_t seed) {
    const PartitionParabolic& P = params.parabolic;
    long n = P.n;
    if (r < 0 || r > n) throw std::domain_error("random_in_stratum: bad r");
    QExpansion f(P, params.N, params.p, params.m, params.trace_bound);
    std::mt19937_64 rng(seed);
    long min_rank = n - r;  // support must avoid rank <= n-r-1
    long placed = 0;
    long attempts = 0;
    while (placed < params.support_size && attempts < 4000) {
        ++attempts;
        // Gram matrix of `take` random small vectors, optionally rescaled so
        // the index sits in the image of the U_p index transforms.
        long take = min_rank + (min_rank < n ? static_cast<long>(rng() % static_cast<std::uint64_t>(n - min_rank + 1)) : 0);
        if (take == 0) take = std::max(min_rank, 1L);
        ZMat G(n, n);
        std::vector<std::vector<long>> vecs;
        for (long t = 0; t < take; ++t) {
            std::vector<long> v(static_cast<size_t>(n));
            for (long a = 0; a < n; ++a) v[static_cast<size_t>(a)] = static_cast<long>(rng() % 5) - 2;
            vecs.push_back(std::move(v));
        }
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) {
                long s = 0;
                for (auto& v : vecs) s += v[static_cast<size_t>(a)] * v[static_cast<size_t>(b)];
                G(a, b) = s;
            }
        // 2N*beta = 2N * G, scaled by p^2 on a coin flip to seed U_p images
        long scale = 2 * params.N;
        if (rng() % 2 == 0) scale *= params.p * params.p;
        for (auto& e : G.a) e *= scale;
        HalfIntMatrix beta(n, params.N, std::move(G));
        if (rank(beta) < min_rank) continue;
        if (beta.trace_N() > params.trace_bound) continue;
        std::uint64_t val = rng() % f.modulus();
        if (val == 0) val = 1;
        auto cur = f.coefficient(beta);
        f.set_coefficient(beta, (*cur + val) % f.modulus());
        ++placed;
    }
    return f;
}

}  // namespace siegel
