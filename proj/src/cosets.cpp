#include "siegel/cosets.hpp"

#include <algorithm>
#include <unordered_set>

#include "siegel/linalg.hpp"

namespace siegel {

PartitionParabolic::PartitionParabolic(long n_, std::vector<long> parts_) : n(n_), parts(std::move(parts_)) {
    long s = 0;
    for (long x : parts) {
        if (x < 1) throw std::domain_error("PartitionParabolic: parts must be >= 1");
        s += x;
    }
    if (s != n || parts.empty()) throw std::domain_error("PartitionParabolic: parts must sum to n");
}

long PartitionParabolic::cum(long i) const {
    if (i < 0 || i > d()) throw std::domain_error("PartitionParabolic::cum: bad index");
    long s = 0;
    for (long j = 0; j < i; ++j) s += parts[static_cast<size_t>(j)];
    return s;
}

long PartitionParabolic::block_of(long i) const {
    for (long j = 1; j <= d(); ++j)
        if (i <= cum(j)) return j;
    throw std::domain_error("PartitionParabolic::block_of: out of range");
}

namespace {

struct ModCtx {
    long n;
    long mod;
    long p;

    std::uint64_t key(const ModMat& m) const {
        std::uint64_t k = 0;
        for (long i = 0; i < n * n; ++i) k = k * static_cast<std::uint64_t>(mod) + m[static_cast<size_t>(i)];
        return k;
    }
    ModMat unkey(std::uint64_t k) const {
        ModMat m(static_cast<size_t>(n * n));
        for (long i = n * n - 1; i >= 0; --i) {
            m[static_cast<size_t>(i)] = static_cast<std::uint8_t>(k % static_cast<std::uint64_t>(mod));
            k /= static_cast<std::uint64_t>(mod);
        }
        return m;
    }
    ModMat mul(const ModMat& a, const ModMat& b) const {
        ModMat c(static_cast<size_t>(n * n), 0);
        for (long i = 0; i < n; ++i)
            for (long k = 0; k < n; ++k) {
                long av = a[static_cast<size_t>(i * n + k)];
                if (!av) continue;
                for (long j = 0; j < n; ++j) {
                    long v = c[static_cast<size_t>(i * n + j)] + av * b[static_cast<size_t>(k * n + j)];
                    c[static_cast<size_t>(i * n + j)] = static_cast<std::uint8_t>(v % mod);
                }
            }
        return c;
    }
    long det_mod(const ModMat& m) const {
        // Laplace for n <= 3, generic elimination otherwise (n stays tiny here)
        auto at = [&](long i, long j) { return static_cast<long>(m[static_cast<size_t>(i * n + j)]); };
        long d = 0;
        if (n == 1) d = at(0, 0);
        else if (n == 2) d = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
        else if (n == 3)
            d = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
        else {
            Int dz = 0;
            ZMat z(n, n);
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j) z(i, j) = at(i, j);
            dz = det_z(z);
            Int r = mod_pos(dz, Int(mod));
            return mpz_get_si(r.get_mpz_t());
        }
        d %= mod;
        if (d < 0) d += mod;
        return d;
    }
    bool invertible(const ModMat& m) const { return det_mod(m) % p != 0; }
    ModMat identity() const {
        ModMat m(static_cast<size_t>(n * n), 0);
        for (long i = 0; i < n; ++i) m[static_cast<size_t>(i * n + i)] = 1;
        return m;
    }
    ModMat transvection(long i, long j) const {
        ModMat m = identity();
        m[static_cast<size_t>(i * n + j)] = 1;
        return m;
    }
};

std::uint64_t gl_order(long n, long p, long l) {
    Int order = 1;
    Int P(p);
    for (long i = 0; i < n; ++i) order *= (pow_int(P, static_cast<unsigned long>(n)) - pow_int(P, static_cast<unsigned long>(i)));
    order *= pow_int(P, static_cast<unsigned long>((l - 1) * n * n));
    if (order > Int("18446744073709551615")) throw BudgetExceeded("gl_order: does not fit in 64 bits");
    return mpz_get_ui(order.get_mpz_t());
}

// generators of P°_{n,r} = (SL(r) * ; 0 GL(n-r)) over Z/p^l
std::vector<ModMat> pcirc_generators(const ModCtx& cx, long r) {
    std::vector<ModMat> gens;
    long n = cx.n;
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j)
            if (i != j) gens.push_back(cx.transvection(i, j));
    for (long i = 0; i < r; ++i)
        for (long j = r; j < n; ++j) gens.push_back(cx.transvection(i, j));
    for (long i = r; i < n; ++i)
        for (long j = r; j < n; ++j)
            if (i != j) gens.push_back(cx.transvection(i, j));
    if (r < n) {
        for (long u = 2; u < cx.mod; ++u) {
            if (gcd_long(u, cx.mod) != 1) continue;
            ModMat m = cx.identity();
            m[static_cast<size_t>(r * n + r)] = static_cast<std::uint8_t>(u);
            gens.push_back(std::move(m));
        }
    }
    return gens;
}

// generators of SP (block upper-triangular, SL on diagonal blocks)
std::vector<ModMat> sp_generators(const ModCtx& cx, const PartitionParabolic& P) {
    std::vector<ModMat> gens;
    for (long b = 1; b <= P.d(); ++b) {
        long lo = P.cum(b - 1), hi = P.cum(b);
        for (long i = lo; i < hi; ++i)
            for (long j = lo; j < hi; ++j)
                if (i != j) gens.push_back(cx.transvection(i, j));
    }
    for (long b = 1; b <= P.d(); ++b)
        for (long c = b + 1; c <= P.d(); ++c) {
            long li = P.cum(b - 1), hi = P.cum(b);
            long lj = P.cum(c - 1), hj = P.cum(c);
            for (long i = li; i < hi; ++i)
                for (long j = lj; j < hj; ++j) gens.push_back(cx.transvection(i, j));
        }
    return gens;
}

ModMat w_matrix(const ModCtx& cx, long r) {
    long n = cx.n;
    ModMat w(static_cast<size_t>(n * n), 0);
    for (long i = 0; i < r; ++i) w[static_cast<size_t>(i * n + (n - r + i))] = 1;
    for (long i = 0; i < n - r; ++i) w[static_cast<size_t>((r + i) * n + i)] = 1;
    return w;
}

ModMat transpose_mod(const ModCtx& cx, const ModMat& m) {
    ModMat t(static_cast<size_t>(cx.n * cx.n));
    for (long i = 0; i < cx.n; ++i)
        for (long j = 0; j < cx.n; ++j) t[static_cast<size_t>(j * cx.n + i)] = m[static_cast<size_t>(i * cx.n + j)];
    return t;
}

// h in (GL(r) * ; 0 GL(n-r)) * w * SP  <=>  orbit of h meets Q*w, with
// Q = upper block triangular; tested via the shape of h * w^-1.
bool in_flat_locus(const ModCtx& cx, const ModMat& h, const ModMat& w_inv, long r) {
    ModMat q = cx.mul(h, w_inv);
    for (long i = r; i < cx.n; ++i)
        for (long j = 0; j < r; ++j)
            if (q[static_cast<size_t>(i * cx.n + j)] != 0) return false;
    return true;
}

}  // namespace

DoubleCosets enumerate_double_cosets(const CosetSpec& spec) {
    const PartitionParabolic& P = spec.parabolic;
    long n = P.n;
    long nd = P.parts.back();
    if (spec.r < 1 || spec.r > nd) throw std::domain_error("enumerate_double_cosets: need 1 <= r <= n_d");
    long mod = 1;
    for (long i = 0; i < spec.l; ++i) {
        mod *= spec.p;
        if (mod > 128) throw BudgetExceeded("enumerate_double_cosets: p^l too large for the encoding");
    }
    std::uint64_t order = gl_order(n, spec.p, spec.l);
    if (order > spec.budget) throw BudgetExceeded("enumerate_double_cosets: |GL| exceeds budget");
    double scan = 1;
    for (long i = 0; i < n * n; ++i) scan *= mod;
    if (scan > 8.0 * static_cast<double>(spec.budget)) throw BudgetExceeded("enumerate_double_cosets: scan too large");

    ModCtx cx{n, mod, spec.p};

    // enumerate the group
    std::vector<std::uint64_t> group;
    group.reserve(order);
    std::uint64_t total_keys = 1;
    for (long i = 0; i < n * n; ++i) total_keys *= static_cast<std::uint64_t>(mod);
    for (std::uint64_t k = 0; k < total_keys; ++k) {
        ModMat m = cx.unkey(k);
        if (cx.invertible(m)) group.push_back(k);
    }
    if (group.size() != order) throw std::logic_error("enumerate_double_cosets: group order mismatch");

    auto gl = pcirc_generators(cx, spec.r);
    auto gr = sp_generators(cx, P);
    ModMat w = w_matrix(cx, spec.r);
    ModMat w_inv = transpose_mod(cx, w);

    DoubleCosets out;
    out.n = n;
    out.mod = mod;
    out.group_size = order;

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(group.size() * 2);
    for (std::uint64_t start : group) {
        if (seen.count(start)) continue;
        // BFS closure of the double coset
        std::vector<std::uint64_t> orbit;
        std::vector<std::uint64_t> stack = {start};
        seen.insert(start);
        bool flat = false;
        std::uint64_t rep = start;
        while (!stack.empty()) {
            std::uint64_t cur = stack.back();
            stack.pop_back();
            orbit.push_back(cur);
            if (cur < rep) rep = cur;
            ModMat m = cx.unkey(cur);
            if (!flat && in_flat_locus(cx, m, w_inv, spec.r)) flat = true;
            for (const ModMat& g : gl) {
                std::uint64_t k2 = cx.key(cx.mul(g, m));
                if (seen.insert(k2).second) stack.push_back(k2);
            }
            for (const ModMat& s : gr) {
                std::uint64_t k2 = cx.key(cx.mul(m, s));
                if (seen.insert(k2).second) stack.push_back(k2);
            }
        }
        out.reps.push_back(cx.unkey(rep));
        out.sizes.push_back(orbit.size());
        out.flat.push_back(flat ? 1 : 0);
    }
    return out;
}

std::vector<ModMat> flat_subset(const CosetSpec& spec) {
    DoubleCosets dc = enumerate_double_cosets(spec);
    std::vector<ModMat> out;
    for (size_t i = 0; i < dc.reps.size(); ++i)
        if (dc.flat[i]) out.push_back(dc.reps[i]);
    return out;
}

IndexReport verify_index_formula(const CosetSpec& spec) {
    DoubleCosets dc = enumerate_double_cosets(spec);
    IndexReport rep;
    rep.total_cosets = dc.reps.size();
    rep.flat_count = 0;
    for (char f : dc.flat) rep.flat_count += (f != 0);
    long nd = spec.parabolic.parts.back();
    if (spec.r < nd) {
        rep.predicted_flat = 1;
    } else {
        std::uint64_t v = 1;
        for (long i = 0; i < spec.l - 1; ++i) v *= static_cast<std::uint64_t>(spec.p);
        v *= static_cast<std::uint64_t>(spec.p - 1);
        rep.predicted_flat = v;
    }
    rep.match = rep.flat_count == rep.predicted_flat;
    rep.group_size = dc.group_size;
    std::uint64_t sum = 0;
    for (std::uint64_t s : dc.sizes) sum += s;
    if (sum != dc.group_size) throw std::logic_error("verify_index_formula: orbit sizes do not partition the group");
    return rep;
}

}  // namespace siegel
