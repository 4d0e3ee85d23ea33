#ifndef SIEGEL_LINALG_HPP
#define SIEGEL_LINALG_HPP

#include <vector>

#include "siegel/numeric.hpp"

namespace siegel {

// Small dense matrix, row-major.  The sizes in this project are tiny
// (n <= 6), so everything below is plain cubic-or-worse exact arithmetic.
template <typename T>
struct Mat {
    long rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r * c)) {}

    T& operator()(long i, long j) { return a[static_cast<size_t>(i * cols + j)]; }
    const T& operator()(long i, long j) const { return a[static_cast<size_t>(i * cols + j)]; }

    static Mat identity(long n) {
        Mat m(n, n);
        for (long i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

using ZMat = Mat<Int>;
using QMat = Mat<Rat>;

template <typename T>
Mat<T> mat_mul(const Mat<T>& x, const Mat<T>& y) {
    if (x.cols != y.rows) throw std::domain_error("mat_mul: shape mismatch");
    Mat<T> r(x.rows, y.cols);
    for (long i = 0; i < x.rows; ++i)
        for (long k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (long j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

template <typename T>
Mat<T> mat_transpose(const Mat<T>& x) {
    Mat<T> r(x.cols, x.rows);
    for (long i = 0; i < x.rows; ++i)
        for (long j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
    return r;
}

inline QMat to_qmat(const ZMat& m) {
    QMat r(m.rows, m.cols);
    for (long i = 0; i < m.rows; ++i)
        for (long j = 0; j < m.cols; ++j) r(i, j) = Rat(m(i, j));
    return r;
}

// Rank via rational Gaussian elimination.
long rank_q(QMat m);
inline long rank_z(const ZMat& m) { return rank_q(to_qmat(m)); }

// Determinant (square) over Q by fraction-full elimination.
Rat det_q(QMat m);
inline Int det_z(const ZMat& m) {
    Rat d = det_q(to_qmat(m));
    if (d.get_den() != 1) throw std::logic_error("det_z: non-integer determinant");
    return d.get_num();
}

// Inverse of a square rational matrix; throws on singular input.
QMat inverse_q(const QMat& m);

// Smith normal form U*A*V = D: returns the diagonal entries (nonnegative)
// and optionally the unimodular transforms.  Kernel of A is spanned by the
// columns of V at zero diagonal slots; the column span of A is spanned by
// the first rank columns of U^-1.
std::vector<Int> smith_diagonal(ZMat A, ZMat* V_out, ZMat* U_out = nullptr);

// Saturated integer kernel basis of A (vectors of length A.cols), via SNF.
std::vector<std::vector<Int>> kernel_saturated(const ZMat& A);

// Row Hermite normal form of a full-row-rank lattice basis (rows = vectors):
// canonical basis with positive pivots and reduced entries above pivots.
ZMat hnf_rows(ZMat B);

// Exact positive (semi)definiteness of a symmetric rational matrix.
bool is_psd_q(QMat A);
bool is_pd_q(const QMat& A);

// Sum of all principal r x r minors (symmetric A): equals e_r(eigenvalues).
Rat principal_minor_sum(const QMat& A, long r);

}  // namespace siegel

#endif
