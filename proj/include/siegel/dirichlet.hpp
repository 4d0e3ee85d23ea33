#ifndef SIEGEL_DIRICHLET_HPP
#define SIEGEL_DIRICHLET_HPP

#include <optional>
#include <vector>

#include "siegel/cyclotomic.hpp"
#include "siegel/numeric.hpp"

namespace siegel {

// Finite-order Dirichlet character stored by value table: for each residue
// a mod f, either the exponent e with chi(a) = zeta_order^e, or "none" on
// non-units.  Small moduli only; that is the regime this project exercises.
class DirichletCharacter {
  public:
    // trivial character mod f
    explicit DirichletCharacter(long f = 1);
    // character from exponent table (exps[a] = exponent of zeta_order, -1 on non-units)
    DirichletCharacter(long f, long order, std::vector<long> exps);

    static DirichletCharacter trivial(long f = 1) { return DirichletCharacter(f); }
    // quadratic character a -> kronecker(D, a) mod |D| (D a fundamental discriminant, or 1)
    static DirichletCharacter kronecker_character(const Int& fundamental_disc);
    // all characters mod f (f = 1, 2, an odd prime power, or 4; enough here)
    static std::vector<DirichletCharacter> all_mod(long f);

    long modulus() const { return modulus_; }
    long order() const { return order_; }
    long conductor() const { return conductor_; }
    bool is_trivial() const { return conductor_ == 1; }
    // chi(-1) = +1 or -1
    int parity() const;

    // value at an integer (0 on non-units)
    Cyc operator()(const Int& a) const;
    Cyc operator()(long a) const { return (*this)(Int(a)); }
    // value at a rational a/b with gcd(b, modulus) = 1
    Cyc at_rational(const Rat& x) const;
    // exponent of zeta_order at a, or nullopt on non-units
    std::optional<long> exponent(const Int& a) const;

    DirichletCharacter operator*(const DirichletCharacter& o) const;
    DirichletCharacter inverse() const;
    DirichletCharacter squared() const { return *this * *this; }
    // the primitive character inducing this one
    DirichletCharacter primitive_part() const;
    // same character induced to a larger modulus
    DirichletCharacter induced_to(long bigger_modulus) const;

    bool operator==(const DirichletCharacter& o) const;

  private:
    long modulus_;
    long order_;
    std::vector<long> exps_;  // size modulus_, -1 on non-units
    long conductor_;

    void normalize_order();
    void compute_conductor();
};

}  // namespace siegel

#endif
