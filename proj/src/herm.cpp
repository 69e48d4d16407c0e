#include "mlk/herm.hpp"

namespace mlk {

namespace {

long series_m(Series s) {
    switch (s) {
        case Series::Wsharp: return 12;
        case Series::Ssharp: return 10;
        case Series::U1: return 9;
        case Series::E3: return 18;
        case Series::Z1: return 14;
        case Series::Q2: return 12;
        case Series::W1: return 12;
        case Series::S1: return 10;
    }
    throw error("unknown series");
}

Cyclo eval_poly(const IntPoly& p, const Cyclo& x) {
    Cyclo acc(x.modulus());
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * x + Cyclo::rational(x.modulus(), Rat(p.coeff(i)));
    }
    return acc;
}

// coefficients of block_poly / (t - xi) in Z[zeta], ascending; the division
// is exact iff xi is a root.
std::vector<Cyclo> divide_by_root(const IntPoly& p, long m, long xi_exp) {
    Cyclo xi = Cyclo::zeta_power(m, xi_exp);
    long d = p.degree();
    if (d < 1) throw error("cannot divide a constant by t - xi");
    std::vector<Cyclo> q(d);
    q[d - 1] = Cyclo::rational(m, Rat(p.coeff(d)));
    for (long k = d - 1; k >= 1; --k)
        q[k - 1] = Cyclo::rational(m, Rat(p.coeff(k))) + xi * q[k];
    Cyclo rem = Cyclo::rational(m, Rat(p.coeff(0))) + xi * q[0];
    if (!rem.is_zero()) throw error("xi is not a root of the block polynomial");
    return q;
}

}  // namespace

EigenVector eigenvector_of_block(const SeifertLattice& lat, const OrlikBlock& block, long m,
                                 long xi_exponent) {
    auto q = divide_by_root(block.block_poly, m, xi_exponent);
    long mu = lat.rank;
    EigenVector v;
    v.m = m;
    v.xi_exponent = xi_exponent;
    v.coords.assign(mu, Cyclo(m));
    std::vector<Int> iter = block.beta;  // M^k beta
    for (size_t k = 0; k < q.size(); ++k) {
        if (k > 0) iter = lat.M * iter;
        for (long i = 0; i < mu; ++i)
            if (iter[i] != 0) v.coords[i] += q[k] * Cyclo::rational(m, Rat(iter[i]));
    }
    // exactness check: M v = xi v
    Cyclo xi = Cyclo::zeta_power(m, xi_exponent);
    for (long i = 0; i < mu; ++i) {
        Cyclo mv(m);
        for (long j = 0; j < mu; ++j)
            if (lat.M.at(i, j) != 0)
                mv += v.coords[j] * Cyclo::rational(m, Rat(lat.M.at(i, j)));
        if (mv != xi * v.coords[i]) throw error("eigenvector identity M v = xi v failed");
    }
    return v;
}

HermValue herm_pair(const SeifertLattice& lat, const EigenVector& v, const EigenVector& w) {
    if (v.xi_exponent != w.xi_exponent || v.m != w.m)
        throw error("herm_pair requires a shared eigenvalue");
    long m = v.m;
    Cyclo u(m);
    for (long i = 0; i < lat.rank; ++i) {
        if (v.coords[i].is_zero()) continue;
        for (long j = 0; j < lat.rank; ++j) {
            if (lat.L.at(i, j) == 0) continue;
            u += v.coords[i] * w.coords[j].conj() * Cyclo::rational(m, Rat(lat.L.at(i, j)));
        }
    }
    // xi = 1 needs the square root at -1; xi = -1 (the Phi_2 eigenvalue) is
    // excluded as well since no hermitian data is ever taken there
    long e = ((v.xi_exponent % m) + m) % m;
    if (e == 0 || (m % 2 == 0 && e == m / 2))
        throw branch_undefined_error("h_xi is not taken at xi = +-1");
    return HermValue{u, v.xi_exponent};
}

int herm_sign(const HermValue& h, int digits) {
    return sqrt_minus_xi_times_sign(h.u, h.xi_exponent, digits);
}

std::complex<double> herm_value_complex(const HermValue& h, int digits) {
    long m = h.u.modulus();
    long e = ((h.xi_exponent % m) + m) % m;
    if (e == 0) throw branch_undefined_error("sqrt branch undefined at -xi = -1");
    // sqrt(-xi) = e^{i pi (2e - m) / (2m)} under the fixed half-turn branch
    double ang = 3.141592653589793238462643 * (2.0 * e - m) / (2.0 * m);
    std::complex<double> root(std::cos(ang), std::sin(ang));
    return root * embed_complex(h.u, 1, digits);
}

EigenVector HermData::v1(long xi_exponent) const {
    return eigenvector_of_block(lat, b1, m, xi_exponent);
}

EigenVector HermData::v2(long xi_exponent) const {
    return eigenvector_of_block(lat, b2, m, xi_exponent);
}

HermData herm_data(Series s, long r) {
    long m = series_m(s);
    HermData hd;
    hd.spec = family_spec(s, m * r);
    hd.m = m;
    hd.lat = family_lattice(hd.spec);
    hd.b1 = make_orlik_block(hd.lat, hd.spec.betas[0]);
    hd.b2 = make_orlik_block(hd.lat, hd.spec.betas[1]);
    return hd;
}

Cyclo w_of_xi(const HermData& hd, long xi_exponent) {
    if (gcd_long(xi_exponent, hd.m) != 1)
        throw error("w(xi) needs a primitive m-th unit root");
    EigenVector v1 = hd.v1(xi_exponent);
    EigenVector v2 = hd.v2(xi_exponent);
    HermValue h11 = herm_pair(hd.lat, v1, v1);
    HermValue h22 = herm_pair(hd.lat, v2, v2);
    if (h11.u.is_zero())
        throw division_by_zero_error("h_xi(v1, v1) vanished; block data is inconsistent");
    Cyclo w = -(h22.u / h11.u);
    // integrality of b5(conj xi) * w(xi)
    Cyclo xibar = Cyclo::zeta_power(hd.m, -xi_exponent);
    Cyclo b5v = eval_poly(b5_poly(hd.spec), xibar);
    if (!(b5v * w).is_integral())
        throw error("b5(conj xi) * w(xi) is not integral");
    return w;
}

IntPoly b5_poly(const FamilySpec& spec) {
    return product_of_cyclotomics(spec.b[0]).div_exact(cyclotomic_poly(spec.m));
}

IntPoly b6_poly(const FamilySpec& spec) {
    return product_of_cyclotomics(spec.b[1]).div_exact(cyclotomic_poly(spec.m));
}

Cyclo h11_closed_form(Series s, long k) {
    long m = series_m(s);
    Cyclo xi = Cyclo::zeta_power(m, k);
    Cyclo xb = Cyclo::zeta_power(m, -k);
    Cyclo one = Cyclo::rational(m, 1);
    auto c = [&](long v) { return Cyclo::rational(m, v); };
    switch (s) {
        case Series::Wsharp: return c(-2) * (xi + xb) * (one - xb);
        case Series::Ssharp:
            return c(5) * (xi * xi + xb * xb) * (xi * xi + xb * xb - one) * (one - xi).inverse();
        case Series::U1: {
            Cyclo x4 = Cyclo::zeta_power(m, 4 * k), x4b = Cyclo::zeta_power(m, -4 * k);
            return c(3) * (x4 + x4b + one) * (one - xb);
        }
        case Series::E3:
            return c(-3) * (one + xi) * (one + xb) * (xi + xb - one) * (one - xi).inverse();
        case Series::Z1: return c(-7) * (xi * xi + xb * xb) * (one - xb);
        case Series::Q2: return c(-6) * (xi + xb + one) * (one - xi).inverse();
        case Series::W1: return c(-4) * (xi + xb) * (one - xb);
        case Series::S1: return c(-10) * (xi * xi + xb * xb) * (one - xb);
    }
    throw error("unknown series");
}

Cyclo h22_closed_form(Series s, long r, long k) {
    long m = series_m(s);
    Cyclo xi = Cyclo::zeta_power(m, k);
    Cyclo xb = Cyclo::zeta_power(m, -k);
    Cyclo one = Cyclo::rational(m, 1);
    bool rI1 = (s == Series::Wsharp || s == Series::Ssharp || s == Series::U1);
    if (rI1) return Cyclo::rational(m, Rat(m * (1 + r))) * (one - xi).inverse();
    return Cyclo::rational(m, Rat(m, 2) * Rat(1 + 2 * r)) * (one - xb);
}

Cyclo w_closed_form(Series s, long r, long k) {
    long m = series_m(s);
    Cyclo xi = Cyclo::zeta_power(m, k);
    Cyclo xb = Cyclo::zeta_power(m, -k);
    Cyclo one = Cyclo::rational(m, 1);
    auto cr = [&](const Rat& v) { return Cyclo::rational(m, v); };
    switch (s) {
        case Series::Wsharp:
            return cr(Rat(6 * (1 + r))) * ((one - xi) * (one - xb) * (xi + xb)).inverse();
        case Series::Ssharp:
            return cr(Rat(-2 * (1 + r))) *
                   ((xi * xi + xb * xb) * (xi * xi + xb * xb - one)).inverse();
        case Series::U1: {
            Cyclo x4 = Cyclo::zeta_power(m, 4 * k), x4b = Cyclo::zeta_power(m, -4 * k);
            return cr(Rat(-3 * (1 + r))) * ((one - xi) * (one - xb) * (x4 + x4b + one)).inverse();
        }
        case Series::E3:
            return cr(Rat(3 * (1 + 2 * r))) * (one - xi) * (one - xb) *
                   ((one + xi) * (one + xb) * (xi + xb - one)).inverse();
        case Series::Z1: return cr(Rat(1 + 2 * r)) * (xi * xi + xb * xb).inverse();
        case Series::Q2:
            return cr(Rat(1 + 2 * r)) * (one - xi) * (one - xb) * (xi + xb + one).inverse();
        case Series::W1: return cr(Rat(3 * (1 + 2 * r), 2)) * (xi + xb).inverse();
        case Series::S1: return cr(Rat(1 + 2 * r, 2)) * (xi * xi + xb * xb).inverse();
    }
    throw error("unknown series");
}

}  // namespace mlk
