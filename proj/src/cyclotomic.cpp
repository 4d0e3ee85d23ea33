#include "siegel/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace siegel {

namespace {

// polynomial helpers on ascending coefficient vectors
std::vector<Int> poly_div_exact(const std::vector<Int>& num, const std::vector<Int>& den) {
    // exact division of integer polynomials, den monic-leading or divides exactly
    std::vector<Int> rem = num;
    long dn = static_cast<long>(num.size()) - 1, dd = static_cast<long>(den.size()) - 1;
    std::vector<Int> q(static_cast<size_t>(dn - dd + 1));
    for (long k = dn - dd; k >= 0; --k) {
        Int lead = rem[static_cast<size_t>(k + dd)];
        if (lead % den.back() != 0) throw std::logic_error("poly_div_exact: not exact");
        Int f = lead / den.back();
        q[static_cast<size_t>(k)] = f;
        if (f != 0)
            for (long j = 0; j <= dd; ++j) rem[static_cast<size_t>(k + j)] -= f * den[static_cast<size_t>(j)];
    }
    for (const Int& r : rem)
        if (r != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

std::map<long, std::vector<Int>> g_cyclo;
std::map<long, std::vector<std::vector<Rat>>> g_pows;
std::mutex g_mtx;

}  // namespace

const std::vector<Int>& Cyc::cyclo_poly(long n) {
    std::lock_guard<std::mutex> lock(g_mtx);
    auto it = g_cyclo.find(n);
    if (it != g_cyclo.end()) return it->second;
    // compute Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d, recursively without the lock
    // (manual recursion using the map directly, all under one lock)
    std::vector<long> stack = {n};
    while (!stack.empty()) {
        long m = stack.back();
        if (g_cyclo.count(m)) {
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (long d = 1; d < m; ++d)
            if (m % d == 0 && !g_cyclo.count(d)) {
                stack.push_back(d);
                ready = false;
            }
        if (!ready) continue;
        std::vector<Int> num(static_cast<size_t>(m + 1));
        num[0] = -1;
        num[static_cast<size_t>(m)] = 1;
        std::vector<Int> acc = num;
        for (long d = 1; d < m; ++d)
            if (m % d == 0) acc = poly_div_exact(acc, g_cyclo[d]);
        g_cyclo[m] = acc;
        stack.pop_back();
    }
    return g_cyclo[n];
}

const std::vector<std::vector<Rat>>& Cyc::power_table(long n) {
    {
        std::lock_guard<std::mutex> lock(g_mtx);
        auto it = g_pows.find(n);
        if (it != g_pows.end()) return it->second;
    }
    const std::vector<Int>& phi_poly = cyclo_poly(n);
    long deg = static_cast<long>(phi_poly.size()) - 1;  // = phi(n)
    // x^j mod Phi_n for j = 0 .. max(2*deg-2, n-1)
    long top = std::max(2 * deg - 2, n - 1);
    std::vector<std::vector<Rat>> tbl;
    std::vector<Rat> cur(static_cast<size_t>(deg), Rat(0));
    cur[0] = 1;
    tbl.push_back(cur);
    for (long j = 1; j <= top; ++j) {
        // multiply by x
        std::vector<Rat> nxt(static_cast<size_t>(deg), Rat(0));
        Rat carry = cur[static_cast<size_t>(deg - 1)];
        for (long i = deg - 1; i >= 1; --i) nxt[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
        nxt[0] = 0;
        if (carry != 0) {
            // x^deg = -(Phi - x^deg)  (Phi monic)
            for (long i = 0; i < deg; ++i) nxt[static_cast<size_t>(i)] -= carry * Rat(phi_poly[static_cast<size_t>(i)]);
        }
        cur = nxt;
        tbl.push_back(cur);
    }
    std::lock_guard<std::mutex> lock(g_mtx);
    auto [it, inserted] = g_pows.emplace(n, std::move(tbl));
    (void)inserted;
    return it->second;
}

Cyc Cyc::root_of_unity(long order, long k) {
    if (order < 1) throw std::domain_error("root_of_unity: bad order");
    k %= order;
    if (k < 0) k += order;
    Cyc r;
    r.order_ = order;
    long deg = euler_phi(order);
    r.c_.assign(static_cast<size_t>(deg), Rat(0));
    const auto& tbl = power_table(order);
    r.c_ = tbl[static_cast<size_t>(k)];
    return r;
}

void Cyc::reduce_from(std::vector<Rat>& raw) {
    long deg = euler_phi(order_);
    const auto& tbl = power_table(order_);
    c_.assign(static_cast<size_t>(deg), Rat(0));
    for (long j = 0; j < static_cast<long>(raw.size()); ++j) {
        if (raw[static_cast<size_t>(j)] == 0) continue;
        if (j < deg) {
            c_[static_cast<size_t>(j)] += raw[static_cast<size_t>(j)];
        } else {
            const auto& xj = tbl[static_cast<size_t>(j)];
            for (long i = 0; i < deg; ++i) c_[static_cast<size_t>(i)] += raw[static_cast<size_t>(j)] * xj[static_cast<size_t>(i)];
        }
    }
    for (auto& q : c_) q.canonicalize();
}

Cyc Cyc::promoted(long new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0) throw std::domain_error("Cyc::promoted: order must divide");
    long step = new_order / order_;
    Cyc r;
    r.order_ = new_order;
    long deg_new = euler_phi(new_order);
    std::vector<Rat> raw(static_cast<size_t>(deg_new), Rat(0));
    const auto& tbl = power_table(new_order);
    for (long j = 0; j < static_cast<long>(c_.size()); ++j) {
        const Rat& q = c_[static_cast<size_t>(j)];
        if (q == 0) continue;
        long e = (j * step) % new_order;
        const auto& xe = tbl[static_cast<size_t>(e)];
        for (long i = 0; i < deg_new; ++i) raw[static_cast<size_t>(i)] += q * xe[static_cast<size_t>(i)];
    }
    for (auto& q : raw) q.canonicalize();
    r.c_ = std::move(raw);
    return r;
}

void Cyc::shrink_if_rational() {
    if (order_ == 1) return;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return;
    Rat v = c_[0];
    order_ = 1;
    c_.assign(1, v);
}

bool Cyc::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    Cyc t = *this;
    t.shrink_if_rational();
    if (t.order_ == 1) return true;
    // order 2: basis is {1}; phi(2)=1 so always rational
    return euler_phi(t.order_) == 1;
}

Rat Cyc::to_rational() const {
    if (order_ == 1 || euler_phi(order_) == 1) {
        Rat v = c_[0];
        if (order_ == 2) return v;  // zeta_2 = -1 already folded by reduction
        return v;
    }
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) throw std::domain_error("Cyc::to_rational: not rational");
    return c_[0];
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Cyc Cyc::operator+(const Cyc& o) const {
    long L = lcm_long(order_, o.order_);
    Cyc x = promoted(L), y = o.promoted(L);
    for (size_t i = 0; i < x.c_.size(); ++i) {
        x.c_[i] += y.c_[i];
        x.c_[i].canonicalize();
    }
    return x;
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc Cyc::operator*(const Cyc& o) const {
    long L = lcm_long(order_, o.order_);
    Cyc x = promoted(L), y = o.promoted(L);
    long deg = static_cast<long>(x.c_.size());
    std::vector<Rat> raw(static_cast<size_t>(2 * deg - 1), Rat(0));
    for (long i = 0; i < deg; ++i) {
        if (x.c_[static_cast<size_t>(i)] == 0) continue;
        for (long j = 0; j < deg; ++j) {
            if (y.c_[static_cast<size_t>(j)] == 0) continue;
            raw[static_cast<size_t>(i + j)] += x.c_[static_cast<size_t>(i)] * y.c_[static_cast<size_t>(j)];
        }
    }
    Cyc r;
    r.order_ = L;
    r.reduce_from(raw);
    return r;
}

bool Cyc::operator==(const Cyc& o) const {
    long L = lcm_long(order_, o.order_);
    Cyc x = promoted(L), y = o.promoted(L);
    return x.c_ == y.c_;
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("Cyc::inverse: zero");
    // extended Euclid in Q[x] against Phi_order (irreducible over Q)
    const auto& phi_int = cyclo_poly(order_);
    std::vector<Rat> r0(phi_int.size()), r1(c_.begin(), c_.end());
    for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rat(phi_int[i]);
    std::vector<Rat> s0(1, Rat(0)), s1(1, Rat(1));
    auto deg = [](const std::vector<Rat>& p) {
        for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
            if (p[static_cast<size_t>(i)] != 0) return i;
        return -1L;
    };
    while (deg(r1) > 0) {
        // divide r0 by r1
        std::vector<Rat> rem = r0, q;
        long d1 = deg(r1);
        long dr = deg(rem);
        q.assign(static_cast<size_t>(std::max(dr - d1 + 1, 1L)), Rat(0));
        while (dr >= d1) {
            Rat f = rem[static_cast<size_t>(dr)] / r1[static_cast<size_t>(d1)];
            q[static_cast<size_t>(dr - d1)] = f;
            for (long j = 0; j <= d1; ++j) {
                rem[static_cast<size_t>(dr - d1 + j)] -= f * r1[static_cast<size_t>(j)];
                rem[static_cast<size_t>(dr - d1 + j)].canonicalize();
            }
            dr = deg(rem);
        }
        // s_next = s0 - q*s1
        std::vector<Rat> s2(std::max(s0.size(), q.size() + s1.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) {
                s2[i + j] -= q[i] * s1[j];
                s2[i + j].canonicalize();
            }
        }
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    long d = deg(r1);
    if (d != 0) throw std::logic_error("Cyc::inverse: gcd not constant");
    Rat lead = r1[0];
    Cyc out;
    out.order_ = order_;
    std::vector<Rat> raw(s1.size());
    for (size_t i = 0; i < s1.size(); ++i) {
        raw[i] = s1[i] / lead;
        raw[i].canonicalize();
    }
    out.reduce_from(raw);
    return out;
}

Cyc Cyc::pow(long e) const {
    if (e == 0) return Cyc::one();
    Cyc base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    Cyc r = Cyc::one();
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Cyc Cyc::galois(long a) const {
    a %= order_;
    if (a < 0) a += order_;
    if (order_ == 1) return *this;
    if (gcd_long(a, order_) != 1) throw std::domain_error("Cyc::galois: a not coprime to order");
    const auto& tbl = power_table(order_);
    long deg = euler_phi(order_);
    std::vector<Rat> acc(static_cast<size_t>(deg), Rat(0));
    for (long j = 0; j < deg; ++j) {
        const Rat& q = c_[static_cast<size_t>(j)];
        if (q == 0) continue;
        long e = (j * a) % order_;
        const auto& xe = tbl[static_cast<size_t>(e)];
        for (long i = 0; i < deg; ++i) {
            acc[static_cast<size_t>(i)] += q * xe[static_cast<size_t>(i)];
            acc[static_cast<size_t>(i)].canonicalize();
        }
    }
    Cyc r;
    r.order_ = order_;
    r.c_ = std::move(acc);
    return r;
}

Cyc operator*(const Rat& a, const Cyc& b) { return Cyc(a) * b; }

}  // namespace siegel
