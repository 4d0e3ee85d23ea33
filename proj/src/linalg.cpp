#include "siegel/linalg.hpp"

#include <algorithm>

namespace siegel {

std::vector<Int> prime_factors(Int n) {
    std::vector<Int> out;
    n = abs(n);
    if (n <= 1) return out;
    for (Int q = 2; q * q <= n; ++q) {
        if (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
            out.push_back(q);
            while (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::domain_error("rat_from_string: bad literal " + s);
    q.canonicalize();
    return q;
}

long rank_q(QMat m) {
    long rank = 0;
    long row = 0;
    for (long col = 0; col < m.cols && row < m.rows; ++col) {
        long piv = -1;
        for (long i = row; i < m.rows; ++i)
            if (m(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        for (long j = 0; j < m.cols; ++j) std::swap(m(row, j), m(piv, j));
        for (long i = row + 1; i < m.rows; ++i) {
            if (m(i, col) == 0) continue;
            Rat f = m(i, col) / m(row, col);
            for (long j = col; j < m.cols; ++j) m(i, j) -= f * m(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

Rat det_q(QMat m) {
    if (m.rows != m.cols) throw std::domain_error("det_q: not square");
    Rat det(1);
    for (long col = 0; col < m.cols; ++col) {
        long piv = -1;
        for (long i = col; i < m.rows; ++i)
            if (m(i, col) != 0) { piv = i; break; }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            for (long j = 0; j < m.cols; ++j) std::swap(m(col, j), m(piv, j));
            det = -det;
        }
        det *= m(col, col);
        for (long i = col + 1; i < m.rows; ++i) {
            if (m(i, col) == 0) continue;
            Rat f = m(i, col) / m(col, col);
            for (long j = col; j < m.cols; ++j) m(i, j) -= f * m(col, j);
        }
    }
    det.canonicalize();
    return det;
}

QMat inverse_q(const QMat& m) {
    if (m.rows != m.cols) throw std::domain_error("inverse_q: not square");
    long n = m.rows;
    QMat w(n, 2 * n);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) w(i, j) = m(i, j);
        w(i, n + i) = 1;
    }
    for (long col = 0; col < n; ++col) {
        long piv = -1;
        for (long i = col; i < n; ++i)
            if (w(i, col) != 0) { piv = i; break; }
        if (piv < 0) throw std::domain_error("inverse_q: singular");
        if (piv != col)
            for (long j = 0; j < 2 * n; ++j) std::swap(w(col, j), w(piv, j));
        Rat d = w(col, col);
        for (long j = 0; j < 2 * n; ++j) w(col, j) /= d;
        for (long i = 0; i < n; ++i) {
            if (i == col || w(i, col) == 0) continue;
            Rat f = w(i, col);
            for (long j = 0; j < 2 * n; ++j) w(i, j) -= f * w(col, j);
        }
    }
    QMat r(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) r(i, j) = w(i, n + j);
    return r;
}

std::vector<Int> smith_diagonal(ZMat A, ZMat* V_out, ZMat* U_out) {
    long m = A.rows, n = A.cols;
    ZMat V = ZMat::identity(n);
    ZMat U = ZMat::identity(m);
    auto row_swap = [&](long i, long k) {
        for (long j = 0; j < n; ++j) std::swap(A(i, j), A(k, j));
        for (long j = 0; j < m; ++j) std::swap(U(i, j), U(k, j));
    };
    auto row_sub = [&](long i, long k, const Int& q) {  // row i -= q*row k
        for (long j = 0; j < n; ++j) A(i, j) -= q * A(k, j);
        for (long j = 0; j < m; ++j) U(i, j) -= q * U(k, j);
    };
    long t = 0;
    while (t < std::min(m, n)) {
        // locate a nonzero pivot in the remaining block
        long pi = -1, pj = -1;
        for (long i = t; i < m && pi < 0; ++i)
            for (long j = t; j < n; ++j)
                if (A(i, j) != 0) { pi = i; pj = j; break; }
        if (pi < 0) break;
        // move pivot to (t,t)
        if (pi != t) row_swap(t, pi);
        if (pj != t) {
            for (long i = 0; i < m; ++i) std::swap(A(i, t), A(i, pj));
            for (long i = 0; i < n; ++i) std::swap(V(i, t), V(i, pj));
        }
        bool again = true;
        while (again) {
            again = false;
            for (long i = t + 1; i < m; ++i) {
                while (A(i, t) != 0) {
                    Int q = A(i, t) / A(t, t);
                    row_sub(i, t, q);
                    if (A(i, t) != 0) row_swap(t, i);
                }
            }
            for (long j = t + 1; j < n; ++j) {
                while (A(t, j) != 0) {
                    Int q = A(t, j) / A(t, t);
                    for (long i = 0; i < m; ++i) A(i, j) -= q * A(i, t);
                    for (long i = 0; i < n; ++i) V(i, j) -= q * V(i, t);
                    if (A(t, j) != 0) {
                        for (long i = 0; i < m; ++i) std::swap(A(i, t), A(i, j));
                        for (long i = 0; i < n; ++i) std::swap(V(i, t), V(i, j));
                        again = true;
                    }
                }
            }
            for (long i = t + 1; i < m && !again; ++i)
                if (A(i, t) != 0) again = true;
        }
        // divisibility cleanup: fold any entry not divisible by pivot
        bool redo = false;
        for (long i = t + 1; i < m && !redo; ++i)
            for (long j = t + 1; j < n && !redo; ++j)
                if (A(i, j) % A(t, t) != 0) {
                    row_sub(t, i, Int(-1));
                    redo = true;
                }
        if (redo) continue;
        ++t;
    }
    std::vector<Int> d;
    for (long i = 0; i < std::min(m, n); ++i) d.push_back(abs(A(i, i)));
    if (V_out) *V_out = V;
    if (U_out) *U_out = U;
    return d;
}

std::vector<std::vector<Int>> kernel_saturated(const ZMat& A) {
    ZMat V;
    std::vector<Int> d = smith_diagonal(A, &V);
    std::vector<std::vector<Int>> basis;
    long n = A.cols;
    for (long j = 0; j < n; ++j) {
        bool zero_slot = j >= static_cast<long>(d.size()) || d[static_cast<size_t>(j)] == 0;
        if (!zero_slot) continue;
        std::vector<Int> v(static_cast<size_t>(n));
        for (long i = 0; i < n; ++i) v[static_cast<size_t>(i)] = V(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

ZMat hnf_rows(ZMat B) {
    long m = B.rows, n = B.cols;
    long row = 0;
    for (long col = 0; col < n && row < m; ++col) {
        // gcd-reduce the column below `row`
        while (true) {
            long piv = -1;
            for (long i = row; i < m; ++i)
                if (B(i, col) != 0) {
                    if (piv < 0 || abs(B(i, col)) < abs(B(piv, col))) piv = i;
                }
            if (piv < 0) break;
            if (piv != row)
                for (long j = 0; j < n; ++j) std::swap(B(row, j), B(piv, j));
            bool clean = true;
            for (long i = row + 1; i < m; ++i) {
                if (B(i, col) == 0) continue;
                Int q = B(i, col) / B(row, col);
                for (long j = 0; j < n; ++j) B(i, j) -= q * B(row, j);
                if (B(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (B(row, col) == 0) continue;
        if (B(row, col) < 0)
            for (long j = 0; j < n; ++j) B(row, j) = -B(row, j);
        for (long i = 0; i < row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), B(i, col).get_mpz_t(), B(row, col).get_mpz_t());
            if (q != 0)
                for (long j = 0; j < n; ++j) B(i, j) -= q * B(row, j);
        }
        ++row;
    }
    B.rows = row;
    B.a.resize(static_cast<size_t>(row * n));
    return B;
}

bool is_psd_q(QMat A) {
    if (A.rows != A.cols) throw std::domain_error("is_psd_q: not square");
    long n = A.rows;
    std::vector<long> act;
    for (long i = 0; i < n; ++i) act.push_back(i);
    while (!act.empty()) {
        long piv = -1;
        for (long idx : act) {
            if (A(idx, idx) < 0) return false;
            if (A(idx, idx) > 0 && piv < 0) piv = idx;
        }
        if (piv < 0) {
            // all active diagonal entries are zero: PSD iff the block vanishes
            for (long i : act)
                for (long j : act)
                    if (A(i, j) != 0) return false;
            return true;
        }
        Rat d = A(piv, piv);
        std::vector<long> next;
        for (long i : act) {
            if (i == piv) continue;
            next.push_back(i);
        }
        for (long i : next)
            for (long j : next) A(i, j) -= A(i, piv) * A(piv, j) / d;
        act = next;
    }
    return true;
}

bool is_pd_q(const QMat& A) {
    if (A.rows != A.cols) throw std::domain_error("is_pd_q: not square");
    for (long k = 1; k <= A.rows; ++k) {
        QMat sub(k, k);
        for (long i = 0; i < k; ++i)
            for (long j = 0; j < k; ++j) sub(i, j) = A(i, j);
        if (det_q(sub) <= 0) return false;
    }
    return true;
}

Rat principal_minor_sum(const QMat& A, long r) {
    long n = A.rows;
    if (r == 0) return Rat(1);
    Rat sum(0);
    std::vector<long> idx(static_cast<size_t>(r));
    // iterate over r-subsets of {0..n-1}
    for (long i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        QMat sub(r, r);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < r; ++j) sub(i, j) = A(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
        sum += det_q(sub);
        long k = r - 1;
        while (k >= 0 && idx[static_cast<size_t>(k)] == n - r + k) --k;
        if (k < 0) break;
        ++idx[static_cast<size_t>(k)];
        for (long j = k + 1; j < r; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    sum.canonicalize();
    return sum;
}

}  // namespace siegel
