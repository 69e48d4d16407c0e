#ifndef MLK_LATTICE_HPP
#define MLK_LATTICE_HPP

#include "mlk/linalg.hpp"
#include "mlk/poly.hpp"

namespace mlk {

// Upper-triangular integer matrix with unit diagonal; the matrix of the
// normalized Seifert form of a distinguished basis.  Its graph is the
// Coxeter-Dynkin diagram.
class StokesMatrix {
   public:
    explicit StokesMatrix(long n) : s_(IntMat::identity(n)) {}
    explicit StokesMatrix(IntMat s);

    long rank() const { return s_.rows(); }
    const IntMat& matrix() const { return s_; }
    Int& at(long i, long j);
    const Int& at(long i, long j) const { return s_.at(i, j); }

    // S(f+g) = S(f) (x) S(g), vanishing cycles in lexicographic order.
    StokesMatrix tensor(const StokesMatrix& o) const;

   private:
    IntMat s_;
};

// Rank-mu integer lattice with unimodular Seifert form L, monodromy M and
// intersection form I on a fixed basis e_1..e_mu.  Surface conventions:
//   L(M a, b) = -L(b, a),  I(a, b) = L((M - id)a, b),  I symmetric,
//   I(e_i, e_i) = -2,  det L = +-1.
struct SeifertLattice {
    long rank = 0;
    IntMat L;  // L.at(i, j) = L(e_i, e_j)
    IntMat M;  // columns are images of basis vectors
    IntMat I;

    Int seifert(const std::vector<Int>& a, const std::vector<Int>& b) const;

    // Verify the surface-case invariants; throws error on violation.
    void validate() const;
};

// Build L per the distinguished-basis rules, solve M from the Seifert
// relation and I from it; validates all invariants.
SeifertLattice lattice_from_stokes(const StokesMatrix& s);

// Product of Picard-Lefschetz reflections s_{e_1} o ... o s_{e_mu}
// (rightmost acts first), s_d(b) = b + I(d, b) d.  Agrees with the M of
// lattice_from_stokes; this is the independent construction.
IntMat monodromy_from_reflections(const StokesMatrix& s);

// Saturated kernel of p(M): the primitive monodromy-invariant sublattice
// with characteristic polynomial p.  p must divide char_poly(M).
IntMat eigen_sublattice(const SeifertLattice& lat, const IntPoly& p);

// g invertible over Z and preserving L (then automatically commuting with
// M and preserving I).
bool is_form_automorphism(const SeifertLattice& lat, const IntMat& g);

// Stabilization f -> f + x^2: L fixed, M negated, I recomputed from the
// general relation I(a,b) = L((M - id)a, b).
SeifertLattice suspend(const SeifertLattice& lat);

}  // namespace mlk

#endif
