#ifndef SIEGEL_PADIC_HPP
#define SIEGEL_PADIC_HPP

#include <map>
#include <string>
#include <vector>

#include "siegel/numeric.hpp"

namespace siegel {

// Finite-precision p-adic number: either exactly zero, or zero to a known
// absolute precision, or unit * p^v with the unit known mod p^prec.
// Valuations are rationals with denominator at most 2 (half powers of p can
// occur transiently in eigenvalue bookkeeping); sums require the valuation
// gap to be integral.
class PadicNumber {
  public:
    enum class Kind { ExactZero, PrecZero, Unit };

    PadicNumber() : p_(2), kind_(Kind::ExactZero) {}
    static PadicNumber exact_zero(long p);
    // zero to absolute precision abs (value in p^abs Z_p + O(p^abs))
    static PadicNumber prec_zero(long p, const Rat& abs);
    static PadicNumber from_unit(long p, const Rat& valuation, const Int& unit, long prec);
    static PadicNumber from_rational(long p, const Rat& x, long prec);
    static PadicNumber one(long p, long prec) { return from_unit(p, Rat(0), 1, prec); }

    long p() const { return p_; }
    Kind kind() const { return kind_; }
    bool is_exact_zero() const { return kind_ == Kind::ExactZero; }
    bool is_visibly_zero() const { return kind_ != Kind::Unit; }
    Rat valuation() const;       // throws on ExactZero
    Rat abs_precision() const;   // +inf modeled by throwing on ExactZero
    const Int& unit() const { return unit_; }
    long rel_precision() const { return prec_; }

    PadicNumber operator-() const;
    PadicNumber operator+(const PadicNumber& o) const;
    PadicNumber operator-(const PadicNumber& o) const { return *this + (-o); }
    PadicNumber operator*(const PadicNumber& o) const;
    PadicNumber inverse() const;
    PadicNumber divide_by_int(const Int& k) const;

    // equal to within the common visible precision
    bool indistinguishable_from(const PadicNumber& o) const;
    std::string str() const;

  private:
    long p_;
    Kind kind_;
    Rat val_;    // valuation (Unit) or absolute precision (PrecZero)
    Int unit_;   // unit mod p^prec_, in [1, p^prec_), p-coprime
    long prec_;  // relative precision digits

    void normalize();
};

// Truncated multivariable power series over PadicNumber coefficients.
class PadicSeries {
  public:
    using Exponents = std::vector<long>;

    PadicSeries(long p, long prec, std::vector<std::string> vars, long degree_bound);

    long p() const { return p_; }
    long prec() const { return prec_; }
    long degree_bound() const { return D_; }
    const std::vector<std::string>& vars() const { return vars_; }
    long var_index(const std::string& name) const;

    static PadicSeries constant(long p, long prec, std::vector<std::string> vars, long D, const PadicNumber& c);

    const std::map<Exponents, PadicNumber>& terms() const { return terms_; }
    PadicNumber coefficient(const Exponents& e) const;
    void set_coefficient(const Exponents& e, const PadicNumber& c);
    PadicNumber constant_term() const;

    PadicSeries operator-() const;
    PadicSeries operator+(const PadicSeries& o) const;
    PadicSeries operator-(const PadicSeries& o) const;
    PadicSeries operator*(const PadicSeries& o) const;
    PadicSeries scaled(const PadicNumber& c) const;

    // multiplicative inverse; constant term must be a visible unit
    PadicSeries inverse() const;

  private:
    long p_, prec_, D_;
    std::vector<std::string> vars_;
    std::map<Exponents, PadicNumber> terms_;

    void check_compatible(const PadicSeries& o) const;
};

// log of a one-unit series (constant term = 1 mod p), with the precision
// loss of each division by k tracked in the coefficients.
PadicSeries logp(const PadicSeries& u);

// formal partial derivative
PadicSeries ddT(const PadicSeries& f, const std::string& var);

// substitute T_j -> T_j + c_j (exact recentring)
PadicSeries recenter(const PadicSeries& f, const std::vector<PadicNumber>& center);

// evaluate at the center (recenter then take the constant term)
PadicNumber evaluate(const PadicSeries& f, const std::vector<PadicNumber>& center);

// -(d/dT_last) log_p(a_n / a_nm1) evaluated at center
PadicNumber l_invariant(const PadicSeries& a_n, const PadicSeries& a_nm1,
                        const std::vector<PadicNumber>& center);

struct DerivativeIdentityReport {
    PadicNumber lhs;
    PadicNumber rhs;
    bool equal;
};

// lhs = d/dT_last[(1-u) G](center), rhs = -(dlog_p u/dT_last)(center) * G(center);
// requires u(center) = 1 (the trivial-zero condition).
DerivativeIdentityReport derivative_identity(const PadicSeries& u, const PadicSeries& G,
                                             const std::vector<PadicNumber>& center);

}  // namespace siegel

#endif
