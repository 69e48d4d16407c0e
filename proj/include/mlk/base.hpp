#ifndef MLK_BASE_HPP
#define MLK_BASE_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mlk {

using Int = mpz_class;
using Rat = mpq_class;

// Base class for all errors thrown by this library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Division by zero in an exact field operation.
struct division_by_zero_error : error {
    explicit division_by_zero_error(const std::string& msg) : error(msg) {}
};

// A numeric sign decision fell below the guard tolerance.
struct indeterminate_sign_error : error {
    explicit indeterminate_sign_error(const std::string& msg) : error(msg) {}
};

// A value that had to be real (within tolerance) was not.
struct non_real_error : error {
    explicit non_real_error(const std::string& msg) : error(msg) {}
};

// The square-root branch on S^1 - {-1} is undefined at -1.
struct branch_undefined_error : error {
    explicit branch_undefined_error(const std::string& msg) : error(msg) {}
};

// A cyclic span that was required to be primitive is not; carries the index.
struct non_primitive_error : error {
    Int index;
    non_primitive_error(const std::string& msg, Int idx)
        : error(msg + " (saturation index " + idx.get_str() + ")"), index(std::move(idx)) {}
};

// Exact divisibility required by a construction failed.
struct divisibility_error : error {
    explicit divisibility_error(const std::string& msg) : error(msg) {}
};

// Built lattice data disagrees with the catalog's expected values.
struct catalog_mismatch_error : error {
    explicit catalog_mismatch_error(const std::string& msg) : error(msg) {}
};

// Default decimal precision for numeric embeddings and sign decisions.
// Functions taking `digits = 0` resolve it through this knob.
int default_digits();
void set_default_digits(int digits);
inline int digits_or_default(int digits) { return digits > 0 ? digits : default_digits(); }

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace mlk

#endif
