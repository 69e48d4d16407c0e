#ifndef MLK_NUMERIC_HPP
#define MLK_NUMERIC_HPP

#include <mpfr.h>

#include <complex>
#include <string>
#include <vector>

#include "mlk/base.hpp"

namespace mlk {

// Arbitrary-precision floating point wrapper around mpfr_t, with just the
// operations the embedding code needs.  Value semantics.
class BigFloat {
   public:
    explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_swap(x_, o.x_); }
    BigFloat& operator=(BigFloat o) { mpfr_swap(x_, o.x_); return *this; }
    ~BigFloat() { mpfr_clear(x_); }

    mpfr_ptr get() { return x_; }
    mpfr_srcptr get() const { return x_; }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    std::string str(int digits = 20) const;

   private:
    mpfr_t x_;
};

struct BigComplex {
    BigFloat re, im;
    explicit BigComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    std::complex<double> to_double() const { return {re.to_double(), im.to_double()}; }
};

// Evaluate sum_i coeffs[i] * e^{2*pi*i*k*j/m} for j = 0..coeffs.size()-1 at
// precision prec bits.  The result is guaranteed to have absolute error
// below 2^(-prec/2) of the exact value provided prec is large enough for
// the coefficient sizes; callers use guarded_* wrappers instead.
BigComplex eval_at_root_of_unity(const std::vector<Rat>& coeffs, long m, long k, mpfr_prec_t prec);

// Absolute-error bound (as log2) of eval_at_root_of_unity at the given
// precision.
double eval_error_log2(const std::vector<Rat>& coeffs, mpfr_prec_t prec);

}  // namespace mlk

#endif
