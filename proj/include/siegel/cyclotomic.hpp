#ifndef SIEGEL_CYCLOTOMIC_HPP
#define SIEGEL_CYCLOTOMIC_HPP

#include <vector>

#include "siegel/numeric.hpp"

namespace siegel {

// Element of Q(zeta_o), stored as a polynomial in zeta of degree < phi(o)
// reduced modulo the o-th cyclotomic polynomial.  Mixed-order arithmetic
// promotes both operands into Q(zeta_lcm).  Representation is canonical,
// so equality is coefficient equality after promotion.
class Cyc {
  public:
    Cyc() : order_(1), c_(1, Rat(0)) {}
    explicit Cyc(const Rat& r) : order_(1), c_(1, r) {}
    explicit Cyc(const Int& z) : order_(1), c_(1, Rat(z)) {}
    explicit Cyc(long v) : order_(1), c_(1, Rat(v)) {}

    static Cyc zero() { return Cyc(); }
    static Cyc one() { return Cyc(Rat(1)); }
    // zeta_order^k
    static Cyc root_of_unity(long order, long k);

    long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat to_rational() const;  // throws if not rational

    Cyc operator-() const;
    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator*(const Cyc& o) const;
    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    Cyc inverse() const;  // throws on zero
    Cyc pow(long e) const;
    // Galois action zeta -> zeta^a, gcd(a, order) = 1.
    Cyc galois(long a) const;
    Cyc conj() const { return galois(-1); }

    // Re-express in Q(zeta_new_order); order() must divide new_order.
    Cyc promoted(long new_order) const;
    // Drop to the smallest cyclotomic subfield containing the value that we
    // can detect cheaply (rational detection only).
    void shrink_if_rational();

  private:
    long order_;
    std::vector<Rat> c_;  // size phi(order_)

    static const std::vector<Int>& cyclo_poly(long n);              // monic, ascending
    static const std::vector<std::vector<Rat>>& power_table(long n);  // x^j mod Phi_n, j < 2*phi
    void reduce_from(std::vector<Rat>& raw);  // raw has degree < 2*phi-1
};

Cyc operator*(const Rat& a, const Cyc& b);

}  // namespace siegel

#endif
