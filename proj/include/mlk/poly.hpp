#ifndef MLK_POLY_HPP
#define MLK_POLY_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mlk/base.hpp"

namespace mlk {

// Polynomial in Z[t], coefficients ascending by degree.  The zero polynomial
// has an empty coefficient vector; otherwise the leading coefficient is
// nonzero.
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static IntPoly constant(Int v) { return IntPoly(std::vector<Int>{std::move(v)}); }
    static IntPoly monomial(int degree, Int v = Int(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Int(0); }
    Int leading() const { return is_zero() ? Int(0) : c_.back(); }
    bool is_monic() const { return !is_zero() && c_.back() == 1; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;

    Int operator()(const Int& x) const;  // evaluation
    Rat operator()(const Rat& x) const;

    // Exact division; throws divisibility_error if the remainder is nonzero
    // or the divisor is not monic.
    IntPoly div_exact(const IntPoly& d) const;
    // Quotient/remainder by a monic divisor.
    std::pair<IntPoly, IntPoly> divmod(const IntPoly& d) const;

    std::string str(const std::string& var = "t") const;

   private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

// The n-th cyclotomic polynomial, computed by exact division of t^n - 1 by
// the lower-order cyclotomics; results are cached.
const IntPoly& cyclotomic_poly(long n);

// Factor a monic p as a product of cyclotomics by repeated trial division.
// Returns the multiset of indices {n_i} with p = prod Phi_{n_i}, or nullopt
// if p is not such a product (non-quasiunipotent characteristic polynomial).
std::optional<std::multiset<long>> factor_into_cyclotomics(const IntPoly& p);

IntPoly product_of_cyclotomics(const std::multiset<long>& ns);

// t^n - 1.
IntPoly t_pow_minus_one(long n);
// t^n + 1.
IntPoly t_pow_plus_one(long n);

}  // namespace mlk

#endif
