#ifndef MLK_HERM_HPP
#define MLK_HERM_HPP

#include "mlk/cyclo.hpp"
#include "mlk/families.hpp"
#include "mlk/orlik.hpp"

namespace mlk {

// Monodromy eigenvector with entries in Q(zeta_m), eigenvalue xi = zeta^k.
struct EigenVector {
    long m = 1;
    long xi_exponent = 0;
    std::vector<Cyclo> coords;
};

// An exact hermitian-form value sqrt(-xi) * u with u in Q(zeta); the
// sqrt(-xi) factor is deferred to numeric evaluation.
struct HermValue {
    Cyclo u;
    long xi_exponent = 0;

    double value(int digits = 0) const { return sqrt_minus_xi_times(u, xi_exponent, digits); }
};

// v(beta, xi) = (block_poly / (t - xi))(M)(beta); exact eigenvector:
// M v = xi v.  xi must be a root of the block polynomial.
EigenVector eigenvector_of_block(const SeifertLattice& lat, const OrlikBlock& block, long m,
                                 long xi_exponent);

// h_xi(v, w) = sqrt(-xi) * L(v, conj(w)), L extended sesquilinearly.
HermValue herm_pair(const SeifertLattice& lat, const EigenVector& v, const EigenVector& w);

// -1, 0, +1 under the guarded numeric embedding.
int herm_sign(const HermValue& h, int digits = 0);

// Complex value sqrt(-xi) * u at the identity embedding (off-diagonal
// pairings are not real).
std::complex<double> herm_value_complex(const HermValue& h, int digits = 0);

// Environment for the hermitian layer of one subseries instance: the
// lattice at p = m*r (or the quadrangle member at r = 0) with its first two
// Orlik blocks and eigenvectors.
struct HermData {
    FamilySpec spec;
    SeifertLattice lat;
    OrlikBlock b1, b2;
    long m = 1;

    EigenVector v1(long xi_exponent) const;
    EigenVector v2(long xi_exponent) const;
};
HermData herm_data(Series s, long r);  // r = 0 builds the quadrangle member

// w(xi) = -h_xi(v2,v2) / h_xi(v1,v1), exact in Q(zeta); checks that
// b5(conj xi) * w(xi) is integral.
Cyclo w_of_xi(const HermData& hd, long xi_exponent);

// Closed form of w(xi) per subseries at p = m*r.
Cyclo w_closed_form(Series s, long r, long xi_exponent);

// Closed form of the exact part u of h_xi(v1,v1) = u * sqrt(-xi).
Cyclo h11_closed_form(Series s, long xi_exponent);

// Closed form of the exact part u of h_xi(v2,v2) at p = m*r.
Cyclo h22_closed_form(Series s, long r, long xi_exponent);

// b5 = b1 / Phi_m and b6 = b2 / Phi_m for a subseries instance.
IntPoly b5_poly(const FamilySpec& spec);
IntPoly b6_poly(const FamilySpec& spec);

}  // namespace mlk

#endif
