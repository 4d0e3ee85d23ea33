#include "siegel/symmat.hpp"

#include <algorithm>
#include <functional>

namespace siegel {

HalfIntMatrix::HalfIntMatrix(long n_, long N_, ZMat m) : n(n_), N(N_), twice_scaled(std::move(m)) {
    if (n < 1 || N < 1) throw std::domain_error("HalfIntMatrix: bad size or level");
    if (twice_scaled.rows != n || twice_scaled.cols != n)
        throw std::domain_error("HalfIntMatrix: shape mismatch");
    for (long i = 0; i < n; ++i) {
        if (twice_scaled(i, i) % 2 != 0)
            throw std::domain_error("HalfIntMatrix: diagonal of 2N*beta must be even");
        for (long j = i + 1; j < n; ++j)
            if (twice_scaled(i, j) != twice_scaled(j, i))
                throw std::domain_error("HalfIntMatrix: not symmetric");
    }
}

HalfIntMatrix HalfIntMatrix::zero(long n, long N) { return HalfIntMatrix(n, N, ZMat(n, n)); }

HalfIntMatrix HalfIntMatrix::from_rational(long N, const QMat& beta) {
    if (beta.rows != beta.cols) throw std::domain_error("from_rational: not square");
    long n = beta.rows;
    ZMat s(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Rat v = beta(i, j) * Rat(2 * N);
            if (v.get_den() != 1) throw std::domain_error("from_rational: not half-integral of level N");
            s(i, j) = v.get_num();
        }
    return HalfIntMatrix(n, N, std::move(s));
}

QMat HalfIntMatrix::rational() const {
    QMat b(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) b(i, j) = Rat(twice_scaled(i, j)) / Rat(2 * N);
    return b;
}

Rat HalfIntMatrix::trace_N() const {
    Int t(0);
    for (long i = 0; i < n; ++i) t += twice_scaled(i, i);
    return Rat(t) / Rat(2);
}

bool HalfIntMatrix::operator<(const HalfIntMatrix& o) const {
    Int t1(0), t2(0);
    for (long i = 0; i < n; ++i) t1 += twice_scaled(i, i);
    for (long i = 0; i < o.n; ++i) t2 += o.twice_scaled(i, i);
    if (t1 != t2) return t1 < t2;
    return std::lexicographical_compare(twice_scaled.a.begin(), twice_scaled.a.end(),
                                        o.twice_scaled.a.begin(), o.twice_scaled.a.end());
}

long rank(const HalfIntMatrix& beta) { return rank_z(beta.twice_scaled); }
long corank(const HalfIntMatrix& beta) { return beta.n - rank(beta); }

std::vector<std::vector<Int>> radical_basis(const HalfIntMatrix& beta) {
    auto ker = kernel_saturated(beta.twice_scaled);
    if (ker.empty()) return ker;
    ZMat B(static_cast<long>(ker.size()), beta.n);
    for (long i = 0; i < B.rows; ++i)
        for (long j = 0; j < B.cols; ++j) B(i, j) = ker[static_cast<size_t>(i)][static_cast<size_t>(j)];
    ZMat H = hnf_rows(std::move(B));
    std::vector<std::vector<Int>> out;
    for (long i = 0; i < H.rows; ++i) {
        std::vector<Int> v(static_cast<size_t>(H.cols));
        for (long j = 0; j < H.cols; ++j) v[static_cast<size_t>(j)] = H(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

bool radical_has_primitive_in(const HalfIntMatrix& beta, const LatticeCondition& L) {
    if (L.n != beta.n) throw std::domain_error("radical_has_primitive_in: size mismatch");
    auto basis = radical_basis(beta);
    long k = static_cast<long>(basis.size());
    if (k == 0) return false;
    Int pe = pow_int(L.p, static_cast<unsigned long>(L.e));
    // v = sum c_i basis_i; membership in Z^{split}+p^e Z^{n-split} and
    // primitivity depend only on c mod p^e (basis is saturated).
    Int total = 1;
    for (long i = 0; i < k; ++i) {
        total *= pe;
        if (total > 2000000) throw BudgetExceeded("radical_has_primitive_in: p^(e*k) too large");
    }
    long count = mpz_get_si(total.get_mpz_t());
    for (long code = 1; code < count; ++code) {
        long rem = code;
        std::vector<Int> c(static_cast<size_t>(k));
        bool unit = false;
        long pe_l = mpz_get_si(pe.get_mpz_t());
        for (long i = 0; i < k; ++i) {
            c[static_cast<size_t>(i)] = rem % pe_l;
            rem /= pe_l;
            if (c[static_cast<size_t>(i)] % L.p != 0) unit = true;
        }
        if (!unit) continue;  // v would be divisible by p
        bool inside = true;
        for (long j = L.split; j < beta.n && inside; ++j) {
            Int coord(0);
            for (long i = 0; i < k; ++i) coord += c[static_cast<size_t>(i)] * basis[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (mod_pos(coord, pe) != 0) inside = false;
        }
        if (inside) return true;
    }
    return false;
}

HalfIntMatrix transform(const HalfIntMatrix& beta, const ZMat& a) {
    if (a.rows != beta.n || a.cols != beta.n) throw std::domain_error("transform: shape mismatch");
    ZMat s = mat_mul(mat_mul(mat_transpose(a), beta.twice_scaled), a);
    return HalfIntMatrix(beta.n, beta.N, std::move(s));
}

bool is_psd(const HalfIntMatrix& beta) { return is_psd_q(to_qmat(beta.twice_scaled)); }
bool is_pd(const HalfIntMatrix& beta) { return is_pd_q(to_qmat(beta.twice_scaled)); }

namespace {

Int isqrt(const Int& x) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

}  // namespace

std::vector<HalfIntMatrix> enumerate(long n, long N, long max_trace) {
    if (max_trace < 0) throw std::domain_error("enumerate: max_trace < 0");
    std::vector<HalfIntMatrix> out;
    // diagonal entries of S = 2N*beta are even and sum to <= 2*max_trace
    std::vector<long> diag(static_cast<size_t>(n), 0);
    std::vector<long> offpos;  // (i,j) pairs i<j
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) offpos.push_back(i * n + j);

    std::function<void(long, long)> rec_diag = [&](long idx, long remaining) {
        if (idx == n) {
            // enumerate off-diagonal entries within the PSD box
            std::vector<long> off(offpos.size(), 0);
            std::function<void(size_t)> rec_off = [&](size_t k) {
                if (k == offpos.size()) {
                    ZMat S(n, n);
                    for (long i = 0; i < n; ++i) S(i, i) = diag[static_cast<size_t>(i)];
                    for (size_t t = 0; t < offpos.size(); ++t) {
                        long i = offpos[t] / n, j = offpos[t] % n;
                        S(i, j) = off[t];
                        S(j, i) = off[t];
                    }
                    HalfIntMatrix b(n, N, std::move(S));
                    if (is_psd(b)) out.push_back(std::move(b));
                    return;
                }
                long i = offpos[k] / n, j = offpos[k] % n;
                Int bound2 = Int(diag[static_cast<size_t>(i)]) * Int(diag[static_cast<size_t>(j)]);
                long bd = mpz_get_si(isqrt(bound2).get_mpz_t());
                for (long v = -bd; v <= bd; ++v) {
                    off[k] = v;
                    rec_off(k + 1);
                }
            };
            rec_off(0);
            return;
        }
        for (long v = 0; v <= remaining; v += 2) {
            diag[static_cast<size_t>(idx)] = v;
            rec_diag(idx + 1, remaining - v);
        }
    };
    rec_diag(0, 2 * max_trace);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ZMat> completions(const HalfIntMatrix& beta1, const HalfIntMatrix& beta2) {
    if (beta1.n != beta2.n || beta1.N != beta2.N)
        throw std::domain_error("completions: blocks must share size and level");
    if (!is_psd(beta1) || !is_psd(beta2)) throw std::domain_error("completions: blocks must be PSD");
    long n = beta1.n;
    std::vector<ZMat> out;
    std::vector<long> ent(static_cast<size_t>(n * n), 0);
    std::function<void(long)> rec = [&](long k) {
        if (k == n * n) {
            ZMat B0(n, n);
            for (long t = 0; t < n * n; ++t) B0.a[static_cast<size_t>(t)] = ent[static_cast<size_t>(t)];
            HalfIntMatrix big = block_embed(beta1, B0, beta2);
            if (is_psd(big)) out.push_back(std::move(B0));
            return;
        }
        long i = k / n, j = k % n;
        Int bound2 = beta1.twice_scaled(i, i) * beta2.twice_scaled(j, j);
        long bd = mpz_get_si(isqrt(bound2).get_mpz_t());
        for (long v = -bd; v <= bd; ++v) {
            ent[static_cast<size_t>(k)] = v;
            rec(k + 1);
        }
    };
    rec(0);
    // already in row-major lexicographic order by construction
    return out;
}

HalfIntMatrix block_embed(const HalfIntMatrix& beta1, const ZMat& B0, const HalfIntMatrix& beta2) {
    if (beta1.n != beta2.n || beta1.N != beta2.N || B0.rows != beta1.n || B0.cols != beta1.n)
        throw std::domain_error("block_embed: inconsistent shapes");
    long n = beta1.n;
    ZMat S(2 * n, 2 * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            S(i, j) = beta1.twice_scaled(i, j);
            S(n + i, n + j) = beta2.twice_scaled(i, j);
            S(i, n + j) = B0(i, j);
            S(n + j, i) = B0(i, j);
        }
    return HalfIntMatrix(2 * n, beta1.N, std::move(S));
}

Rat det_star_twice_scaled(const HalfIntMatrix& beta) {
    long r = rank(beta);
    if (r == 0) return Rat(1);
    return principal_minor_sum(to_qmat(beta.twice_scaled), r);
}

Rat det_star(const HalfIntMatrix& beta) {
    long r = rank(beta);
    Rat d = det_star_twice_scaled(beta);
    return d / pow_rat(Rat(2 * beta.N), r);
}

HalfIntMatrix nondegenerate_core(const HalfIntMatrix& beta) {
    long r = rank(beta);
    if (r == beta.n) return beta;
    if (r == 0) throw std::domain_error("nondegenerate_core: zero form has no core");
    auto rad = radical_basis(beta);
    long k = static_cast<long>(rad.size());
    // columns of M span the radical; complement = last n-k columns of U^-1
    ZMat M(beta.n, k);
    for (long i = 0; i < beta.n; ++i)
        for (long j = 0; j < k; ++j) M(i, j) = rad[static_cast<size_t>(j)][static_cast<size_t>(i)];
    ZMat U;
    smith_diagonal(M, nullptr, &U);
    QMat Uinv_q = inverse_q(to_qmat(U));
    ZMat C(beta.n, r);
    for (long i = 0; i < beta.n; ++i)
        for (long j = 0; j < r; ++j) {
            Rat v = Uinv_q(i, k + j);
            if (v.get_den() != 1) throw std::logic_error("nondegenerate_core: U not unimodular");
            C(i, j) = v.get_num();
        }
    ZMat S = mat_mul(mat_mul(mat_transpose(C), beta.twice_scaled), C);
    return HalfIntMatrix(r, beta.N, std::move(S));
}

}  // namespace siegel
