#ifndef MLK_LINALG_HPP
#define MLK_LINALG_HPP

#include <optional>
#include <vector>

#include "mlk/base.hpp"
#include "mlk/poly.hpp"

namespace mlk {

inline constexpr long kRankCap = 256;

// Dense integer matrix, row-major.
class IntMat {
   public:
    IntMat() : r_(0), c_(0) {}
    IntMat(long rows, long cols) : r_(rows), c_(cols), a_(rows * cols, Int(0)) {
        if (rows > kRankCap || cols > kRankCap) throw error("matrix exceeds rank cap");
    }
    static IntMat identity(long n);

    long rows() const { return r_; }
    long cols() const { return c_; }
    Int& at(long i, long j) { return a_[i * c_ + j]; }
    const Int& at(long i, long j) const { return a_[i * c_ + j]; }

    bool operator==(const IntMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }

    IntMat operator*(const IntMat& o) const;
    IntMat operator+(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    IntMat operator-() const;
    std::vector<Int> operator*(const std::vector<Int>& v) const;
    IntMat transposed() const;
    bool is_zero() const;

    // Kronecker product in lexicographic basis order.
    IntMat kronecker(const IntMat& o) const;

    std::string str() const;

   private:
    long r_, c_;
    std::vector<Int> a_;
};

// Determinant by fraction-free Bareiss elimination.
Int det(const IntMat& m);

// Characteristic polynomial det(t*I - M), exact (Faddeev-LeVerrier).
IntPoly char_poly(const IntMat& m);

// Evaluate a polynomial at a square matrix.
IntMat poly_at_matrix(const IntPoly& p, const IntMat& m);

// Is g in GL(n, Z)?  (det = +-1)
bool is_unimodular(const IntMat& g);

// Solve x * A = b over Q for a row vector b (A square nonsingular);
// returns nullopt when singular or inconsistent.
std::optional<std::vector<Rat>> solve_left(const IntMat& a, const std::vector<Rat>& b);

// Rational inverse of a nonsingular integer matrix, as (adjugate-style)
// numerator matrix over a common denominator: inv = num / den.
struct RatInverse {
    IntMat num;
    Int den;
};
std::optional<RatInverse> rational_inverse(const IntMat& a);

// A basis (rows) of the saturated kernel {v : A v = 0, v integral}; the
// result spans a primitive sublattice of Z^cols.
IntMat kernel_saturated(const IntMat& a);

// Invariant factors d_1 | d_2 | ... (nonzero ones) of an integer matrix.
std::vector<Int> smith_invariants(IntMat a);

// Index of the row lattice of `basis` (independent rows) inside its
// saturation: the product of the invariant factors.
Int saturation_index(const IntMat& basis);

// Index of the full-rank row lattice `sub` inside the full-rank row
// lattice `super` (throws if sub is not contained in super or ranks differ).
Int lattice_index(const IntMat& super, const IntMat& sub);

// Express row vector v in the row basis `basis` over Q; nullopt if v is
// outside the span.
std::optional<std::vector<Rat>> coords_in_basis(const IntMat& basis, const std::vector<Int>& v);

// Do the rows of `sub` all lie in the integer row span of `basis`?
bool lattice_contains(const IntMat& basis, const IntMat& sub);

}  // namespace mlk

#endif
