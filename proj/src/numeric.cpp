#include "mlk/numeric.hpp"

#include <atomic>
#include <cmath>

namespace mlk {

std::string BigFloat::str(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, x_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

BigComplex eval_at_root_of_unity(const std::vector<Rat>& coeffs, long m, long k, mpfr_prec_t prec) {
    // zeta^k with zeta = e^{2 pi i / m}: angle 2*pi*k/m, correctly rounded
    // sine/cosine per term keeps the error accounting simple.
    BigComplex acc(prec);
    mpfr_t angle, two_pi, c, s, term_re, term_im, q;
    mpfr_inits2(prec, angle, two_pi, c, s, term_re, term_im, q, (mpfr_ptr) nullptr);
    mpfr_const_pi(two_pi, MPFR_RNDN);
    mpfr_mul_ui(two_pi, two_pi, 2, MPFR_RNDN);
    long n = static_cast<long>(coeffs.size());
    for (long j = 0; j < n; ++j) {
        if (coeffs[j] == 0) continue;
        long e = ((k % m) * (j % m)) % m;  // exponent of zeta, reduced
        if (e < 0) e += m;
        mpfr_mul_si(angle, two_pi, e, MPFR_RNDN);
        mpfr_div_si(angle, angle, m, MPFR_RNDN);
        mpfr_sin_cos(s, c, angle, MPFR_RNDN);
        mpfr_set_q(q, coeffs[j].get_mpq_t(), MPFR_RNDN);
        mpfr_mul(term_re, q, c, MPFR_RNDN);
        mpfr_mul(term_im, q, s, MPFR_RNDN);
        mpfr_add(acc.re.get(), acc.re.get(), term_re, MPFR_RNDN);
        mpfr_add(acc.im.get(), acc.im.get(), term_im, MPFR_RNDN);
    }
    mpfr_clears(angle, two_pi, c, s, term_re, term_im, q, (mpfr_ptr) nullptr);
    return acc;
}

double eval_error_log2(const std::vector<Rat>& coeffs, mpfr_prec_t prec) {
    // Each term costs a handful of correctly rounded operations; n-term
    // summation compounds linearly.  Bound: (4n + 8) * S * 2^(-prec) with
    // S = max(1, sum |c_i|).
    double sum_abs = 1.0;
    for (const auto& c : coeffs) sum_abs += std::abs(c.get_d());
    double n = static_cast<double>(coeffs.size());
    return std::log2(4.0 * n + 8.0) + std::log2(sum_abs) - static_cast<double>(prec);
}

}  // namespace mlk

namespace mlk {

namespace {
std::atomic<int> g_default_digits{40};
}

int default_digits() { return g_default_digits.load(); }

void set_default_digits(int digits) {
    if (digits < 1) throw error("digits must be positive");
    g_default_digits.store(digits);
}

}  // namespace mlk
