#include "siegel/dirichlet.hpp"

#include <algorithm>

namespace siegel {

DirichletCharacter::DirichletCharacter(long f) : modulus_(f), order_(1) {
    if (f < 1) throw std::domain_error("DirichletCharacter: bad modulus");
    exps_.assign(static_cast<size_t>(f), -1);
    for (long a = 0; a < f; ++a)
        if (gcd_long(a, f) == 1 || f == 1) exps_[static_cast<size_t>(a)] = 0;
    conductor_ = 1;
}

DirichletCharacter::DirichletCharacter(long f, long order, std::vector<long> exps)
    : modulus_(f), order_(order), exps_(std::move(exps)) {
    if (f < 1 || order < 1 || static_cast<long>(exps_.size()) != f)
        throw std::domain_error("DirichletCharacter: bad table");
    normalize_order();
    compute_conductor();
}

void DirichletCharacter::normalize_order() {
    // reduce the declared order to the actual order of the character
    long g = order_;
    for (long a = 0; a < modulus_; ++a)
        if (exps_[static_cast<size_t>(a)] > 0) g = gcd_long(g, exps_[static_cast<size_t>(a)]);
    if (g > 1) {
        for (auto& e : exps_)
            if (e >= 0) e /= g;
        order_ /= g;
    }
    if (order_ < 1) order_ = 1;
}

void DirichletCharacter::compute_conductor() {
    conductor_ = modulus_;
    for (long d = 1; d <= modulus_; ++d) {
        if (modulus_ % d != 0) continue;
        // chi factors through (Z/d)* iff chi(a)=chi(b) whenever a=b mod d (units mod modulus)
        bool ok = true;
        for (long a = 0; a < modulus_ && ok; ++a) {
            if (exps_[static_cast<size_t>(a)] < 0) continue;
            for (long b = a + d; b < modulus_; b += d) {
                if (exps_[static_cast<size_t>(b)] < 0) continue;
                if (exps_[static_cast<size_t>(b)] != exps_[static_cast<size_t>(a)]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            conductor_ = d;
            return;
        }
    }
}

int DirichletCharacter::parity() const {
    if (modulus_ == 1) return 1;
    long e = exps_[static_cast<size_t>(modulus_ - 1)];
    if (e < 0) throw std::logic_error("parity: -1 not a unit");
    // chi(-1)^2 = 1, so the value is +-1
    return (2 * e) % order_ == 0 ? ((e % order_) == 0 ? 1 : -1) : throw std::logic_error("parity: not +-1");
}

Cyc DirichletCharacter::operator()(const Int& a) const {
    Int r = mod_pos(a, Int(modulus_));
    long idx = mpz_get_si(r.get_mpz_t());
    long e = exps_[static_cast<size_t>(idx)];
    if (e < 0) return Cyc::zero();
    return Cyc::root_of_unity(order_, e);
}

std::optional<long> DirichletCharacter::exponent(const Int& a) const {
    Int r = mod_pos(a, Int(modulus_));
    long e = exps_[static_cast<size_t>(mpz_get_si(r.get_mpz_t()))];
    if (e < 0) return std::nullopt;
    return e;
}

Cyc DirichletCharacter::at_rational(const Rat& x) const {
    Int num = x.get_num(), den = x.get_den();
    auto en = exponent(num);
    auto ed = exponent(den);
    if (!ed) throw std::domain_error("at_rational: denominator shares a factor with the modulus");
    if (!en) return Cyc::zero();
    long e = *en - *ed;
    return Cyc::root_of_unity(order_, e);
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& o) const {
    long f = lcm_long(modulus_, o.modulus_);
    long ord = lcm_long(order_, o.order_);
    std::vector<long> ex(static_cast<size_t>(f), -1);
    for (long a = 0; a < f; ++a) {
        auto e1 = exponent(Int(a));
        auto e2 = o.exponent(Int(a));
        if (!e1 || !e2) continue;
        long v = ((*e1) * (ord / order_) + (*e2) * (ord / o.order_)) % ord;
        if (v < 0) v += ord;
        ex[static_cast<size_t>(a)] = v;
    }
    return DirichletCharacter(f, ord, std::move(ex));
}

DirichletCharacter DirichletCharacter::inverse() const {
    std::vector<long> ex = exps_;
    for (auto& e : ex)
        if (e > 0) e = order_ - e;
    return DirichletCharacter(modulus_, order_, std::move(ex));
}

DirichletCharacter DirichletCharacter::primitive_part() const {
    long d = conductor_;
    std::vector<long> ex(static_cast<size_t>(d), -1);
    for (long a = 0; a < d; ++a) {
        if (d > 1 && gcd_long(a, d) != 1) continue;
        // find a lift of a mod d that is a unit mod modulus
        for (long b = a; b < a + modulus_ * d + 1; b += d) {
            long bb = b % std::max(modulus_, 1L);
            if (exps_[static_cast<size_t>(bb)] >= 0) {
                ex[static_cast<size_t>(a)] = exps_[static_cast<size_t>(bb)];
                break;
            }
        }
        if (d > 1 && ex[static_cast<size_t>(a)] < 0)
            throw std::logic_error("primitive_part: no unit lift found");
    }
    if (d == 1) ex[0] = 0;
    return DirichletCharacter(d, order_, std::move(ex));
}

DirichletCharacter DirichletCharacter::induced_to(long bigger) const {
    if (bigger % modulus_ != 0) throw std::domain_error("induced_to: modulus must divide");
    std::vector<long> ex(static_cast<size_t>(bigger), -1);
    for (long a = 0; a < bigger; ++a) {
        if (bigger > 1 && gcd_long(a, bigger) != 1) continue;
        auto e = exponent(Int(a));
        if (e) ex[static_cast<size_t>(a)] = *e;
    }
    return DirichletCharacter(bigger, order_, std::move(ex));
}

bool DirichletCharacter::operator==(const DirichletCharacter& o) const {
    DirichletCharacter a = primitive_part(), b = o.primitive_part();
    if (a.modulus_ != b.modulus_ || a.order_ != b.order_) return false;
    return a.exps_ == b.exps_;
}

DirichletCharacter DirichletCharacter::kronecker_character(const Int& D) {
    if (D == 1) return trivial(1);
    long f = static_cast<long>(mpz_get_si(Int(abs(D)).get_mpz_t()));
    std::vector<long> ex(static_cast<size_t>(f), -1);
    for (long a = 0; a < f; ++a) {
        if (gcd_long(a, f) != 1) continue;
        int k = kronecker(D, Int(a));
        if (k == 0) continue;
        ex[static_cast<size_t>(a)] = (k == 1) ? 0 : 1;
    }
    return DirichletCharacter(f, 2, std::move(ex));
}

std::vector<DirichletCharacter> DirichletCharacter::all_mod(long f) {
    std::vector<DirichletCharacter> out;
    if (f == 1 || f == 2) {
        out.push_back(trivial(f));
        return out;
    }
    // need a cyclic unit group: f = 4 or an odd prime power
    long phi = euler_phi(f);
    long g = -1;
    for (long cand = 2; cand < f; ++cand) {
        if (gcd_long(cand, f) != 1) continue;
        long x = cand % f, ordg = 1;
        while (x != 1) {
            x = (x * cand) % f;
            ++ordg;
        }
        if (ordg == phi) {
            g = cand;
            break;
        }
    }
    if (g < 0) throw std::domain_error("all_mod: unit group not cyclic");
    // discrete logs
    std::vector<long> dlog(static_cast<size_t>(f), -1);
    long x = 1;
    for (long e = 0; e < phi; ++e) {
        dlog[static_cast<size_t>(x)] = e;
        x = (x * g) % f;
    }
    for (long j = 0; j < phi; ++j) {
        std::vector<long> ex(static_cast<size_t>(f), -1);
        for (long a = 0; a < f; ++a)
            if (dlog[static_cast<size_t>(a)] >= 0) ex[static_cast<size_t>(a)] = (j * dlog[static_cast<size_t>(a)]) % phi;
        out.emplace_back(f, phi, std::move(ex));
    }
    return out;
}

}  // namespace siegel
