#include "mlk/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace mlk {

namespace {

// Rational-coefficient remainder mod the monic Phi_m, plus a cache of the
// reduction of t^e for phi(m) <= e < m (enough for products and Galois maps).
struct ModulusData {
    long m;
    long phi;
    std::vector<Int> phi_m;                       // coefficients of Phi_m
    std::vector<std::vector<Rat>> power_reduction;  // t^(phi+i) mod Phi_m, i = 0..m+phi
};

const ModulusData& modulus_data(long m) {
    static std::map<long, ModulusData> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 1) throw error("modulus must be positive");
    long ph = euler_phi(m);
    if (ph > 64) throw error("modulus " + std::to_string(m) + " exceeds the phi(m) <= 64 cap");
    ModulusData d;
    d.m = m;
    d.phi = ph;
    d.phi_m = cyclotomic_poly(m).coeffs();
    // t^phi = -(c_0 + c_1 t + ... + c_{phi-1} t^{phi-1}), then iterate.
    long count = 2 * m + ph + 4;  // covers products of two reduced elements and zeta^e, e < 2m
    d.power_reduction.reserve(count);
    std::vector<Rat> cur(ph);
    for (long j = 0; j < ph; ++j) cur[j] = Rat(-d.phi_m[j]);
    d.power_reduction.push_back(cur);
    for (long i = 1; i < count; ++i) {
        std::vector<Rat> next(ph, Rat(0));
        // multiply cur by t and reduce
        Rat top = cur[ph - 1];
        for (long j = ph - 1; j > 0; --j) next[j] = cur[j - 1];
        next[0] = 0;
        if (top != 0)
            for (long j = 0; j < ph; ++j) next[j] += top * d.power_reduction[0][j];
        d.power_reduction.push_back(next);
        cur = std::move(next);
    }
    return cache.emplace(m, std::move(d)).first->second;
}

std::vector<Rat> reduce_coeffs(long m, const std::vector<Rat>& coeffs) {
    const ModulusData& d = modulus_data(m);
    std::vector<Rat> out(d.phi, Rat(0));
    for (size_t e = 0; e < coeffs.size(); ++e) {
        if (coeffs[e] == 0) continue;
        if (static_cast<long>(e) < d.phi) {
            out[e] += coeffs[e];
        } else {
            long i = static_cast<long>(e) - d.phi;
            if (i >= static_cast<long>(d.power_reduction.size()))
                throw error("cyclotomic reduction table too small");
            for (long j = 0; j < d.phi; ++j) out[j] += coeffs[e] * d.power_reduction[i][j];
        }
    }
    return out;
}

}  // namespace

Cyclo::Cyclo(long m) : m_(m), coords_(modulus_data(m).phi, Rat(0)) {}

Cyclo::Cyclo(long m, std::vector<Rat> coords) : m_(m), coords_(std::move(coords)) {
    if (static_cast<long>(coords_.size()) != modulus_data(m).phi)
        throw error("coordinate vector must have length phi(m)");
    for (auto& c : coords_) c.canonicalize();
}

Cyclo Cyclo::from_poly_coeffs(long m, const std::vector<Rat>& coeffs) {
    return Cyclo(m, reduce_coeffs(m, coeffs));
}

Cyclo Cyclo::rational(long m, const Rat& v) {
    Cyclo x(m);
    x.coords_[0] = v;
    x.coords_[0].canonicalize();
    return x;
}

Cyclo Cyclo::zeta_power(long m, long k) {
    k %= m;
    if (k < 0) k += m;
    std::vector<Rat> coeffs(k + 1, Rat(0));
    coeffs[k] = 1;
    return from_poly_coeffs(m, coeffs);
}

bool Cyclo::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& c) { return c == 0; });
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational_value() const {
    if (!is_rational()) throw error("element is not rational");
    return coords_[0];
}

bool Cyclo::is_integral() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const Rat& c) { return c.get_den() == 1; });
}

bool Cyclo::operator==(const Cyclo& o) const {
    if (m_ == o.m_) return coords_ == o.coords_;
    // compare across moduli by lifting to a common field when possible
    long l = m_ / gcd_long(m_, o.m_) * o.m_;
    return lift_to_modulus(l) == o.lift_to_modulus(l);
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    if (m_ != o.m_) throw error("modulus mismatch in +");
    Cyclo r(*this);
    for (size_t i = 0; i < coords_.size(); ++i) {
        r.coords_[i] += o.coords_[i];
        r.coords_[i].canonicalize();
    }
    return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
    if (m_ != o.m_) throw error("modulus mismatch in -");
    Cyclo r(*this);
    for (size_t i = 0; i < coords_.size(); ++i) {
        r.coords_[i] -= o.coords_[i];
        r.coords_[i].canonicalize();
    }
    return r;
}

Cyclo Cyclo::operator-() const {
    Cyclo r(*this);
    for (auto& c : r.coords_) c = -c;
    return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    if (m_ != o.m_) throw error("modulus mismatch in *");
    std::vector<Rat> prod(coords_.size() + o.coords_.size(), Rat(0));
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        for (size_t j = 0; j < o.coords_.size(); ++j) {
            if (o.coords_[j] == 0) continue;
            prod[i + j] += coords_[i] * o.coords_[j];
        }
    }
    return from_poly_coeffs(m_, prod);
}

Cyclo Cyclo::operator*(const Rat& r) const {
    Cyclo out(*this);
    for (auto& c : out.coords_) {
        c *= r;
        c.canonicalize();
    }
    return out;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw division_by_zero_error("inverse of zero in Q(zeta)");
    // extended Euclid on (x, Phi_m) over Q[t]
    const ModulusData& d = modulus_data(m_);
    using Poly = std::vector<Rat>;
    auto deg = [](const Poly& p) {
        for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1L;
    };
    Poly r0(d.phi_m.size());
    for (size_t i = 0; i < d.phi_m.size(); ++i) r0[i] = Rat(d.phi_m[i]);
    Poly r1(coords_.begin(), coords_.end());
    Poly s0{Rat(0)}, s1{Rat(1)};  // coefficients of the input in the Bezout identity
    while (true) {
        long d1 = deg(r1);
        if (d1 < 0) throw error("element not invertible mod Phi_m");
        if (d1 == 0) break;
        // r0 = q*r1 + r2
        Poly q(deg(r0) - d1 + 1, Rat(0));
        Poly rem = r0;
        for (long k = deg(rem); k >= d1; --k) {
            if (rem[k] == 0) continue;
            Rat f = rem[k] / r1[d1];
            q[k - d1] = f;
            for (long j = 0; j <= d1; ++j) {
                rem[k - d1 + j] -= f * r1[j];
                rem[k - d1 + j].canonicalize();
            }
        }
        // s2 = s0 - q*s1
        Poly s2(std::max(s0.size(), q.size() + s1.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) {
                s2[i + j] -= q[i] * s1[j];
                s2[i + j].canonicalize();
            }
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    Rat unit = r1[deg(r1)];
    Poly inv(s1.size());
    for (size_t i = 0; i < s1.size(); ++i) {
        inv[i] = s1[i] / unit;
        inv[i].canonicalize();
    }
    return from_poly_coeffs(m_, inv);
}

Cyclo Cyclo::galois(long k) const {
    k %= m_;
    if (k < 0) k += m_;
    if (gcd_long(k, m_) != 1) throw error("galois exponent must be coprime to the modulus");
    std::vector<Rat> coeffs(m_, Rat(0));
    for (size_t j = 0; j < coords_.size(); ++j) {
        if (coords_[j] == 0) continue;
        long e = (static_cast<long>(j) * k) % m_;
        coeffs[e] += coords_[j];
    }
    return from_poly_coeffs(m_, coeffs);
}

Cyclo Cyclo::lift_to_modulus(long m2) const {
    if (m2 == m_) return *this;
    if (m2 % m_ != 0) throw error("lift_to_modulus requires m | m'");
    long d = m2 / m_;
    std::vector<Rat> coeffs(static_cast<size_t>(coords_.size()) * d + 1, Rat(0));
    for (size_t j = 0; j < coords_.size(); ++j) coeffs[j * d] = coords_[j];
    return from_poly_coeffs(m2, coeffs);
}

std::string Cyclo::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ",";
        os << coords_[i].get_str();
    }
    os << "]_" << m_;
    return os.str();
}

// --- numeric embeddings -----------------------------------------------------

namespace {

mpfr_prec_t precision_for(const std::vector<Rat>& coeffs, int digits) {
    double sum_abs = 1.0;
    for (const auto& c : coeffs) sum_abs += std::abs(c.get_d());
    double bits = digits * 3.3220 + std::log2(4.0 * (coeffs.size() + 2) + 8.0) +
                  std::log2(sum_abs) + 16.0;
    return static_cast<mpfr_prec_t>(bits) + 16;
}

}  // namespace

BigComplex embed_complex_big(const Cyclo& x, long k, int digits) {
    digits = digits_or_default(digits);
    mpfr_prec_t prec = precision_for(x.coords(), digits);
    for (int attempt = 0; attempt < 4; ++attempt) {
        if (eval_error_log2(x.coords(), prec) < -(digits + 1) * 3.3220) break;
        prec *= 2;
    }
    return eval_at_root_of_unity(x.coords(), x.modulus(), k, prec);
}

std::complex<double> embed_complex(const Cyclo& x, long k, int digits) {
    return embed_complex_big(x, k, digits).to_double();
}

std::vector<std::pair<long, std::complex<double>>> embed_real(const Cyclo& x, int digits) {
    std::vector<std::pair<long, std::complex<double>>> out;
    for (long k = 1; k <= x.modulus(); ++k) {
        if (gcd_long(k, x.modulus()) != 1) continue;
        if (x.modulus() == 1 && k == 1) {
            out.emplace_back(1, std::complex<double>(x.coords()[0].get_d(), 0.0));
            continue;
        }
        out.emplace_back(k, embed_complex(x, k, digits));
    }
    return out;
}

int sign_at_embedding(const Cyclo& x, long k, int digits) {
    if (x.is_zero()) return 0;
    BigComplex v = embed_complex_big(x, k, digits);
    double re = v.re.to_double();
    if (std::abs(re) < 1e-6)
        throw indeterminate_sign_error("sign decision below tolerance at embedding " +
                                       std::to_string(k));
    return re > 0 ? 1 : -1;
}

Rat field_norm(const Cyclo& x) {
    long m = x.modulus();
    if (m <= 2) return x.coords()[0];
    if (!x.is_real()) throw error("field_norm requires a conjugation-fixed element");
    Cyclo prod = Cyclo::rational(m, 1);
    for (long k = 1; 2 * k <= m; ++k) {
        if (gcd_long(k, m) != 1) continue;
        prod *= x.galois(k);
    }
    if (!prod.is_rational()) throw error("real-subfield norm did not land in Q");
    return prod.rational_value();
}

Rat field_norm_full(const Cyclo& x) {
    long m = x.modulus();
    if (m <= 2) return x.coords()[0];
    Cyclo prod = Cyclo::rational(m, 1);
    for (long k = 1; k < m; ++k) {
        if (gcd_long(k, m) != 1) continue;
        prod *= x.galois(k);
    }
    if (!prod.is_rational()) throw error("norm did not land in Q");
    return prod.rational_value();
}

namespace {

// sqrt(-xi) for xi = zeta^e != 1 under the fixed half-turn branch, as an angle in
// units of pi: (2e - m) / (2m) with e reduced into (0, m).
Rat sqrt_branch_angle(long m, long e) {
    e %= m;
    if (e < 0) e += m;
    if (e == 0) throw branch_undefined_error("sqrt branch undefined at -xi = -1");
    return Rat(2 * e - m, 2 * m);
}

}  // namespace

double sqrt_minus_xi_times(const Cyclo& u, long xi_exponent, int digits) {
    digits = digits_or_default(digits);
    Rat alpha = sqrt_branch_angle(u.modulus(), xi_exponent);
    if (u.is_zero()) return 0.0;
    BigComplex uv = embed_complex_big(u, 1, digits);
    mpfr_prec_t prec = mpfr_get_prec(uv.re.get());
    mpfr_t ang, c, s, re, im, t;
    mpfr_inits2(prec, ang, c, s, re, im, t, (mpfr_ptr) nullptr);
    mpfr_const_pi(ang, MPFR_RNDN);
    mpfr_mul_q(ang, ang, alpha.get_mpq_t(), MPFR_RNDN);
    mpfr_sin_cos(s, c, ang, MPFR_RNDN);
    // (c + i s)(u_re + i u_im)
    mpfr_mul(re, c, uv.re.get(), MPFR_RNDN);
    mpfr_mul(t, s, uv.im.get(), MPFR_RNDN);
    mpfr_sub(re, re, t, MPFR_RNDN);
    mpfr_mul(im, c, uv.im.get(), MPFR_RNDN);
    mpfr_mul(t, s, uv.re.get(), MPFR_RNDN);
    mpfr_add(im, im, t, MPFR_RNDN);
    double rre = mpfr_get_d(re, MPFR_RNDN);
    double rim = mpfr_get_d(im, MPFR_RNDN);
    mpfr_clears(ang, c, s, re, im, t, (mpfr_ptr) nullptr);
    double tol = std::pow(10.0, -std::max(6, digits - 10));
    if (std::abs(rim) > tol * std::max(1.0, std::abs(rre)))
        throw non_real_error("sqrt(-xi) * u is not real");
    return rre;
}

int sqrt_minus_xi_times_sign(const Cyclo& u, long xi_exponent, int digits) {
    if (u.is_zero()) {
        sqrt_branch_angle(u.modulus(), xi_exponent);  // still validate the branch
        return 0;
    }
    double v = sqrt_minus_xi_times(u, xi_exponent, digits);
    if (std::abs(v) < 1e-6)
        throw indeterminate_sign_error("hermitian value sign below tolerance");
    return v > 0 ? 1 : -1;
}

}  // namespace mlk
