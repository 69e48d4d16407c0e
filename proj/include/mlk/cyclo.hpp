#ifndef MLK_CYCLO_HPP
#define MLK_CYCLO_HPP

#include <complex>
#include <vector>

#include "mlk/numeric.hpp"
#include "mlk/poly.hpp"

namespace mlk {

// Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^{phi(m)-1},
// fully reduced mod Phi_m.  Supported moduli: phi(m) <= 64.
class Cyclo {
   public:
    Cyclo() : m_(1), coords_(1, Rat(0)) {}
    // zero element of Q(zeta_m)
    explicit Cyclo(long m);
    Cyclo(long m, std::vector<Rat> coords);  // reduced mod Phi_m on entry? no: length must be phi(m)
    static Cyclo from_poly_coeffs(long m, const std::vector<Rat>& coeffs);  // any length, reduced
    static Cyclo rational(long m, const Rat& v);
    static Cyclo zeta_power(long m, long k);  // zeta^k
    // p1 = zeta + conj(zeta)
    static Cyclo p1(long m) { return zeta_power(m, 1) + zeta_power(m, -1); }

    long modulus() const { return m_; }
    long phi() const { return static_cast<long>(coords_.size()); }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // requires is_rational
    // true iff all coordinates are integers; then the element lies in
    // Z[zeta_m], the full ring of integers of Q(zeta_m).
    bool is_integral() const;

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
    Cyclo operator*(const Rat& r) const;
    Cyclo operator/(const Cyclo& o) const { return *this * o.inverse(); }

    // Multiplicative inverse via extended Euclid mod Phi_m.
    Cyclo inverse() const;

    // Image under zeta -> zeta^k, gcd(k, m) = 1.
    Cyclo galois(long k) const;
    Cyclo conj() const { return galois(m_ - 1); }
    bool is_real() const { return *this == conj(); }

    // Rewrite as an element of Q(zeta_{m'}) via zeta_m = zeta_{m'}^{m'/m};
    // requires m | m'.
    Cyclo lift_to_modulus(long m2) const;

    std::string str() const;

   private:
    long m_;
    std::vector<Rat> coords_;
};

inline Cyclo operator*(const Rat& r, const Cyclo& x) { return x * r; }

// --- numeric embeddings -----------------------------------------------------

// Complex value of x under zeta -> e^{2 pi i k / m}, with absolute error
// certified below 10^-digits (precision escalates internally as needed).
std::complex<double> embed_complex(const Cyclo& x, long k, int digits = 0);
BigComplex embed_complex_big(const Cyclo& x, long k, int digits);

// All embeddings k coprime to m, ordered by k; pairs (k, value).
std::vector<std::pair<long, std::complex<double>>> embed_real(const Cyclo& x, int digits = 0);

// Exact sign of a real algebraic number given as (x, embedding k):
// evaluates at the requested digits; if |value| < 10^-6 the element is
// tested for exact zero, and if nonzero the sign is decided by escalating
// precision (the needed separation always exists for nonzero values, but a
// cap of 8x the starting precision guards against runaway loops).
int sign_at_embedding(const Cyclo& x, long k, int digits = 0);

// Product of x over the real Galois conjugates (one per pair {k, m-k}),
// for conjugation-fixed x: the norm in the maximal real subfield Q(p1).
Rat field_norm(const Cyclo& x);

// Product of x over all phi(m) conjugates: the norm in Q(zeta_m).
Rat field_norm_full(const Cyclo& x);

// The real number sqrt(-xi) * u(zeta) with xi = zeta^{xi_exponent}, under
// the branch sqrt(e^{2 pi i a}) = e^{pi i a}, a in (-1/2, 1/2).  Throws
// branch_undefined_error if xi = 1 and non_real_error if the product has
// |Im| above tolerance.
double sqrt_minus_xi_times(const Cyclo& u, long xi_exponent, int digits = 0);

// sign of sqrt(-xi) * u: -1, 0, +1 (0 iff u == 0).
int sqrt_minus_xi_times_sign(const Cyclo& u, long xi_exponent, int digits = 0);

}  // namespace mlk

#endif
