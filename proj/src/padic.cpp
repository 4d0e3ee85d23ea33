#include "siegel/padic.hpp"

#include <algorithm>
#include <sstream>

namespace siegel {

namespace {
Int p_power(long p, long e) {
    if (e < 0) throw std::logic_error("p_power: negative exponent");
    return pow_int(Int(p), static_cast<unsigned long>(e));
}
}  // namespace

PadicNumber PadicNumber::exact_zero(long p) {
    PadicNumber x;
    x.p_ = p;
    x.kind_ = Kind::ExactZero;
    return x;
}

PadicNumber PadicNumber::prec_zero(long p, const Rat& abs) {
    PadicNumber x;
    x.p_ = p;
    x.kind_ = Kind::PrecZero;
    x.val_ = abs;
    return x;
}

PadicNumber PadicNumber::from_unit(long p, const Rat& valuation, const Int& unit, long prec) {
    if (prec < 1) throw PrecisionExhausted("PadicNumber: no digits left");
    if (2 % valuation.get_den() != 0) throw std::domain_error("PadicNumber: valuation denominator > 2");
    PadicNumber x;
    x.p_ = p;
    x.kind_ = Kind::Unit;
    x.val_ = valuation;
    x.prec_ = prec;
    x.unit_ = mod_pos(unit, p_power(p, prec));
    if (x.unit_ % p == 0) throw std::domain_error("PadicNumber: unit part divisible by p");
    return x;
}

PadicNumber PadicNumber::from_rational(long p, const Rat& x, long prec) {
    if (x == 0) return exact_zero(p);
    long v = vp_rat(x, Int(p));
    Rat u = x / pow_rat(Rat(p), v);
    Int num = u.get_num(), den = u.get_den();
    Int m = p_power(p, prec);
    Int unit = mod_pos(num * inv_mod(mod_pos(den, m), m), m);
    return from_unit(p, Rat(v), unit, prec);
}

Rat PadicNumber::valuation() const {
    if (kind_ == Kind::ExactZero) throw std::domain_error("valuation of exact zero");
    return val_;
}

Rat PadicNumber::abs_precision() const {
    if (kind_ == Kind::ExactZero) throw std::domain_error("abs_precision of exact zero");
    if (kind_ == Kind::PrecZero) return val_;
    return val_ + Rat(prec_);
}

PadicNumber PadicNumber::operator-() const {
    if (kind_ != Kind::Unit) return *this;
    PadicNumber x = *this;
    x.unit_ = mod_pos(-unit_, p_power(p_, prec_));
    return x;
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
    if (p_ != o.p_) throw std::domain_error("PadicNumber: mixed primes");
    if (kind_ == Kind::ExactZero) return o;
    if (o.kind_ == Kind::ExactZero) return *this;
    if (kind_ == Kind::PrecZero && o.kind_ == Kind::PrecZero)
        return prec_zero(p_, std::min(val_, o.val_));
    if (kind_ == Kind::PrecZero || o.kind_ == Kind::PrecZero) {
        const PadicNumber& z = (kind_ == Kind::PrecZero) ? *this : o;
        const PadicNumber& u = (kind_ == Kind::PrecZero) ? o : *this;
        Rat abs = std::min(z.val_, u.abs_precision());
        if (u.val_ >= abs) return prec_zero(p_, abs);
        Rat relr = abs - u.val_;
        if (relr.get_den() != 1) throw std::domain_error("PadicNumber: half-integral precision gap");
        long rel = std::min<long>(mpz_get_si(relr.get_num().get_mpz_t()), u.prec_);
        return from_unit(p_, u.val_, mod_pos(u.unit_, p_power(p_, rel)), rel);
    }
    // Unit + Unit
    Rat gap = val_ - o.val_;
    if (gap.get_den() != 1) throw std::domain_error("PadicNumber: incompatible half-power grading in sum");
    Rat v = std::min(val_, o.val_);
    Rat abs = std::min(abs_precision(), o.abs_precision());
    Rat wr = abs - v;
    if (wr.get_den() != 1) throw std::domain_error("PadicNumber: half-integral window");
    long w = mpz_get_si(wr.get_num().get_mpz_t());
    if (w <= 0) return prec_zero(p_, abs);
    Int m = p_power(p_, w);
    Rat s1 = val_ - v, s2 = o.val_ - v;
    Int t1 = mod_pos(unit_ * p_power(p_, mpz_get_si(s1.get_num().get_mpz_t())), m);
    Int t2 = mod_pos(o.unit_ * p_power(p_, mpz_get_si(s2.get_num().get_mpz_t())), m);
    Int s = mod_pos(t1 + t2, m);
    if (s == 0) return prec_zero(p_, abs);
    long shift = vp_int(s, Int(p_));
    return from_unit(p_, v + Rat(shift), s / p_power(p_, shift), w - shift);
}

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
    if (p_ != o.p_) throw std::domain_error("PadicNumber: mixed primes");
    if (kind_ == Kind::ExactZero || o.kind_ == Kind::ExactZero) return exact_zero(p_);
    if (kind_ == Kind::PrecZero || o.kind_ == Kind::PrecZero) {
        Rat a = (kind_ == Kind::PrecZero) ? val_ : valuation();
        Rat b = (o.kind_ == Kind::PrecZero) ? o.val_ : o.valuation();
        return prec_zero(p_, a + b);
    }
    long rel = std::min(prec_, o.prec_);
    Int m = p_power(p_, rel);
    return from_unit(p_, val_ + o.val_, mod_pos(unit_ * o.unit_, m), rel);
}

PadicNumber PadicNumber::inverse() const {
    if (kind_ != Kind::Unit) throw PrecisionExhausted("PadicNumber::inverse: not a visible unit");
    Int m = p_power(p_, prec_);
    return from_unit(p_, -val_, inv_mod(unit_, m), prec_);
}

PadicNumber PadicNumber::divide_by_int(const Int& k) const {
    if (k == 0) throw std::domain_error("divide_by_int: zero divisor");
    if (kind_ == Kind::ExactZero) return *this;
    long t = vp_int(k, Int(p_));
    Int kp = k / p_power(p_, t);
    if (kind_ == Kind::PrecZero) return prec_zero(p_, val_ - Rat(t));
    Int m = p_power(p_, prec_);
    return from_unit(p_, val_ - Rat(t), mod_pos(unit_ * inv_mod(mod_pos(kp, m), m), m), prec_);
}

bool PadicNumber::indistinguishable_from(const PadicNumber& o) const {
    PadicNumber d = *this - o;
    return d.kind_ != Kind::Unit;
}

std::string PadicNumber::str() const {
    std::ostringstream os;
    if (kind_ == Kind::ExactZero) {
        os << "0";
    } else if (kind_ == Kind::PrecZero) {
        os << "O(" << p_ << "^" << rat_to_string(val_) << ")";
    } else {
        os << unit_.get_str() << "*" << p_ << "^" << rat_to_string(val_) << " + O(" << p_ << "^"
           << rat_to_string(val_ + prec_) << ")";
    }
    return os.str();
}

void PadicNumber::normalize() {}

PadicSeries::PadicSeries(long p, long prec, std::vector<std::string> vars, long D)
    : p_(p), prec_(prec), D_(D), vars_(std::move(vars)) {
    if (p < 2 || prec < 1 || D < 0 || vars_.empty()) throw std::domain_error("PadicSeries: bad parameters");
}

long PadicSeries::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<long>(i);
    throw std::domain_error("PadicSeries: unknown variable " + name);
}

PadicSeries PadicSeries::constant(long p, long prec, std::vector<std::string> vars, long D,
                                  const PadicNumber& c) {
    PadicSeries s(p, prec, std::move(vars), D);
    Exponents e(s.vars_.size(), 0);
    s.set_coefficient(e, c);
    return s;
}

PadicNumber PadicSeries::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) return PadicNumber::exact_zero(p_);
    return it->second;
}

void PadicSeries::set_coefficient(const Exponents& e, const PadicNumber& c) {
    if (e.size() != vars_.size()) throw std::domain_error("set_coefficient: exponent arity");
    long tot = 0;
    for (long x : e) {
        if (x < 0) throw std::domain_error("set_coefficient: negative exponent");
        tot += x;
    }
    if (tot > D_) throw std::domain_error("set_coefficient: beyond degree bound");
    if (c.is_exact_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

PadicNumber PadicSeries::constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

void PadicSeries::check_compatible(const PadicSeries& o) const {
    if (p_ != o.p_ || vars_ != o.vars_)
        throw std::domain_error("PadicSeries: incompatible operands");
}

PadicSeries PadicSeries::operator-() const {
    PadicSeries r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

PadicSeries PadicSeries::operator+(const PadicSeries& o) const {
    check_compatible(o);
    // truncation semantics: the sum is certified to the smaller bound
    PadicSeries r(p_, std::min(prec_, o.prec_), vars_, std::min(D_, o.D_));
    for (const auto& [e, c] : terms_) {
        long tot = 0;
        for (long x : e) tot += x;
        if (tot <= r.D_) r.set_coefficient(e, c);
    }
    for (const auto& [e, c] : o.terms_) {
        long tot = 0;
        for (long x : e) tot += x;
        if (tot <= r.D_) r.set_coefficient(e, r.coefficient(e) + c);
    }
    return r;
}

PadicSeries PadicSeries::operator-(const PadicSeries& o) const { return *this + (-o); }

PadicSeries PadicSeries::operator*(const PadicSeries& o) const {
    check_compatible(o);
    long D = std::min(D_, o.D_);
    PadicSeries r(p_, std::min(prec_, o.prec_), vars_, D);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(vars_.size());
            long tot = 0;
            for (size_t i = 0; i < e.size(); ++i) {
                e[i] = e1[i] + e2[i];
                tot += e[i];
            }
            if (tot > D) continue;
            r.set_coefficient(e, r.coefficient(e) + c1 * c2);
        }
    return r;
}

PadicSeries PadicSeries::scaled(const PadicNumber& c) const {
    PadicSeries r(p_, prec_, vars_, D_);
    for (const auto& [e, v] : terms_) r.set_coefficient(e, v * c);
    return r;
}

PadicSeries PadicSeries::inverse() const {
    PadicNumber c0 = constant_term();
    if (c0.kind() != PadicNumber::Kind::Unit || c0.valuation() != 0)
        throw NotOneUnit("PadicSeries::inverse: constant term is not a visible unit");
    PadicNumber c0inv = c0.inverse();
    // f = c0 (1 + h), h nilpotent to degree D+1
    PadicSeries h = scaled(c0inv);
    Exponents zero(vars_.size(), 0);
    h.set_coefficient(zero, h.coefficient(zero) - PadicNumber::from_rational(p_, Rat(1), prec_));
    PadicSeries acc = PadicSeries::constant(p_, prec_, vars_, D_, PadicNumber::from_rational(p_, Rat(1), prec_));
    PadicSeries pw = acc;
    for (long k = 1; k <= D_; ++k) {
        pw = pw * h;
        if (pw.terms_.empty()) break;
        acc = (k % 2 == 1) ? acc - pw : acc + pw;
    }
    return acc.scaled(c0inv);
}

PadicSeries logp(const PadicSeries& u) {
    long p = u.p(), prec = u.prec(), D = u.degree_bound();
    PadicNumber c0 = u.constant_term();
    bool ok = false;
    if (c0.kind() == PadicNumber::Kind::Unit && c0.valuation() == 0) {
        PadicNumber d = c0 - PadicNumber::from_rational(p, Rat(1), prec);
        ok = d.is_exact_zero() || d.is_visibly_zero() ||
             (d.kind() == PadicNumber::Kind::Unit && d.valuation() >= 1);
    }
    if (!ok) throw NotOneUnit("logp: constant term is not a one-unit");
    PadicSeries w = u;
    PadicSeries::Exponents zero(u.vars().size(), 0);
    w.set_coefficient(zero, w.coefficient(zero) - PadicNumber::from_rational(p, Rat(1), prec));
    PadicSeries acc(p, prec, u.vars(), D);
    PadicSeries pw = w;
    const Rat tail_cut(prec + D + 2);
    bool truncated_tail = false;
    long kmax = (D + 2) * (prec + 3) + 4;
    for (long k = 1; k <= kmax; ++k) {
        if (pw.terms().empty()) break;
        bool visible = false;
        for (const auto& [e, c] : pw.terms())
            if (c.kind() == PadicNumber::Kind::Unit && c.valuation() < tail_cut) visible = true;
        if (!visible) {
            truncated_tail = true;
            break;
        }
        PadicSeries term(p, prec, u.vars(), D);
        for (const auto& [e, c] : pw.terms()) term.set_coefficient(e, c.divide_by_int(Int(k)));
        acc = (k % 2 == 1) ? acc + term : acc - term;
        pw = pw * w;
    }
    if (!truncated_tail && !pw.terms().empty())
        throw PrecisionExhausted("logp: series did not terminate");
    if (truncated_tail) {
        // the dropped tail has coefficient valuations >= tail_cut, so no
        // coefficient may claim a better absolute precision than that
        PadicSeries clamped(p, prec, u.vars(), D);
        for (const auto& [e, c] : acc.terms()) {
            if (c.kind() != PadicNumber::Kind::Unit) {
                clamped.set_coefficient(e, c.abs_precision() > tail_cut
                                               ? PadicNumber::prec_zero(p, tail_cut)
                                               : c);
                continue;
            }
            if (c.abs_precision() <= tail_cut) {
                clamped.set_coefficient(e, c);
            } else {
                Rat relr = tail_cut - c.valuation();
                Int fl;
                mpz_fdiv_q(fl.get_mpz_t(), relr.get_num().get_mpz_t(), relr.get_den().get_mpz_t());
                long rel = mpz_get_si(fl.get_mpz_t());
                if (rel <= 0)
                    clamped.set_coefficient(e, PadicNumber::prec_zero(p, tail_cut));
                else
                    clamped.set_coefficient(
                        e, PadicNumber::from_unit(p, c.valuation(), c.unit(), rel));
            }
        }
        return clamped;
    }
    return acc;
}

PadicSeries ddT(const PadicSeries& f, const std::string& var) {
    long j = f.var_index(var);
    PadicSeries r(f.p(), f.prec(), f.vars(), std::max(f.degree_bound() - 1, 0L));
    for (const auto& [e, c] : f.terms()) {
        if (e[static_cast<size_t>(j)] == 0) continue;
        PadicSeries::Exponents e2 = e;
        e2[static_cast<size_t>(j)] -= 1;
        PadicNumber scale = PadicNumber::from_rational(f.p(), Rat(e[static_cast<size_t>(j)]), f.prec());
        r.set_coefficient(e2, r.coefficient(e2) + c * scale);
    }
    return r;
}

PadicSeries recenter(const PadicSeries& f, const std::vector<PadicNumber>& center) {
    if (center.size() != f.vars().size()) throw std::domain_error("recenter: arity mismatch");
    PadicSeries r(f.p(), f.prec(), f.vars(), f.degree_bound());
    for (const auto& [e, c] : f.terms()) {
        // expand prod_j (T_j + c_j)^{e_j}
        std::vector<std::pair<PadicSeries::Exponents, PadicNumber>> parts;
        parts.emplace_back(PadicSeries::Exponents(f.vars().size(), 0), c);
        for (size_t j = 0; j < e.size(); ++j) {
            long ej = e[j];
            if (ej == 0) continue;
            std::vector<std::pair<PadicSeries::Exponents, PadicNumber>> next;
            for (auto& [ex, co] : parts) {
                // (T_j + c_j)^{ej} = sum_a C(ej,a) T_j^a c_j^{ej-a}
                for (long a = 0; a <= ej; ++a) {
                    PadicNumber term = co;
                    if (center[j].is_exact_zero() && a < ej) continue;
                    for (long t = 0; t < ej - a; ++t) term = term * center[j];
                    term = term * PadicNumber::from_rational(f.p(), Rat(binomial(static_cast<unsigned long>(ej), static_cast<unsigned long>(a))), f.prec());
                    PadicSeries::Exponents ex2 = ex;
                    ex2[j] += a;
                    next.emplace_back(std::move(ex2), term);
                }
            }
            parts = std::move(next);
        }
        for (auto& [ex, co] : parts) {
            long tot = 0;
            for (long x : ex) tot += x;
            if (tot > f.degree_bound()) continue;
            r.set_coefficient(ex, r.coefficient(ex) + co);
        }
    }
    return r;
}

PadicNumber evaluate(const PadicSeries& f, const std::vector<PadicNumber>& center) {
    return recenter(f, center).constant_term();
}

PadicNumber l_invariant(const PadicSeries& a_n, const PadicSeries& a_nm1,
                        const std::vector<PadicNumber>& center) {
    PadicSeries ratio = a_n * a_nm1.inverse();
    PadicSeries rec = recenter(ratio, center);
    PadicSeries lg = logp(rec);
    PadicSeries der = ddT(lg, lg.vars().back());
    return -der.constant_term();
}

DerivativeIdentityReport derivative_identity(const PadicSeries& u, const PadicSeries& G,
                                             const std::vector<PadicNumber>& center) {
    long p = u.p(), prec = u.prec();
    PadicNumber uc = evaluate(u, center);
    PadicNumber dev = uc - PadicNumber::from_rational(p, Rat(1), prec);
    if (dev.kind() == PadicNumber::Kind::Unit)
        throw CenterNotZero("derivative_identity: u(center) != 1 visibly");
    const std::string& T = u.vars().back();
    PadicSeries one = PadicSeries::constant(p, prec, u.vars(), u.degree_bound(),
                                            PadicNumber::from_rational(p, Rat(1), prec));
    PadicSeries lhs_series = ddT((one - u) * G, T);
    DerivativeIdentityReport rep{PadicNumber::exact_zero(p), PadicNumber::exact_zero(p), false};
    rep.lhs = evaluate(lhs_series, center);
    PadicSeries urec = recenter(u, center);
    PadicSeries lg = logp(urec);
    rep.rhs = -(ddT(lg, T).constant_term() * evaluate(G, center));
    rep.equal = rep.lhs.indistinguishable_from(rep.rhs);
    return rep;
}

}  // namespace siegel
