#include "mlk/spectra.hpp"

#include <algorithm>
#include <numeric>

namespace mlk {

bool spectrum_ok(const Spectrum& sp) {
    size_t n = sp.size();
    for (size_t i = 0; i < n; ++i) {
        if (sp[i] + sp[n - 1 - i] != 1) return false;
        if (!(sp[i] > -1 && sp[i] < 2)) return false;
        if (i + 1 < n && sp[i] > sp[i + 1]) return false;
    }
    return true;
}

Spectrum spectrum_from_weights(const std::array<Rat, 3>& weights) {
    long d = 1;
    for (const auto& w : weights) {
        if (!(w > 0 && w < 1)) throw error("weights must lie in (0, 1)");
        d = d / gcd_long(d, w.get_den().get_si()) * w.get_den().get_si();
    }
    // numerator prod (u^d - u^{n_j}), denominator prod (u^{n_j} - 1), u = t^{1/d}
    IntPoly num = IntPoly::constant(1), den = IntPoly::constant(1);
    for (const auto& w : weights) {
        Rat scaled = w * d;
        scaled.canonicalize();
        long nj = scaled.get_num().get_si();
        num = num * (IntPoly::monomial(d) - IntPoly::monomial(nj));
        den = den * (IntPoly::monomial(nj) - IntPoly::constant(1));
    }
    // den is not monic in general sign: leading coeff 1; divide exactly
    auto [q, r] = num.divmod(den);
    if (!r.is_zero()) throw error("generating series is not a polynomial; data not isolated");
    Spectrum sp;
    for (int e = 0; e <= q.degree(); ++e) {
        Int c = q.coeff(e);
        if (c < 0) throw error("generating series has a negative coefficient");
        for (Int i = 0; i < c; ++i) {
            Rat a = Rat(e, d) - 1;
            a.canonicalize();
            sp.push_back(a);
        }
    }
    std::sort(sp.begin(), sp.end());
    return sp;
}

Spectrum spectrum_from_charpoly(const std::multiset<long>& indices, long m) {
    Spectrum sp;
    for (long n : indices) {
        if (n == 1) throw error("eigenvalue 1 is not supported by the spectral assignment");
        for (long k = 1; k < n; ++k)
            if (gcd_long(k, n) == 1) sp.push_back(Rat(k, n));  // coprime: already canonical
    }
    // shift one copy of 1 - 1/m (the zeta-exponent) down and one copy of
    // 1/m (the conj(zeta)-exponent) up
    auto down = std::find(sp.begin(), sp.end(), Rat(m - 1, m));
    if (down == sp.end()) throw error("spectral assignment infeasible: no zeta copy");
    *down = Rat(-1, m);
    auto up = std::find(sp.begin(), sp.end(), Rat(1, m));
    if (up == sp.end()) throw error("spectral assignment infeasible: no conj zeta copy");
    *up = Rat(m + 1, m);
    for (auto& a : sp) a.canonicalize();
    std::sort(sp.begin(), sp.end());
    if (!spectrum_ok(sp)) throw error("spectral assignment violates the symmetry");
    return sp;
}

Spectrum spectrum_from_charpoly(const FamilySpec& spec) {
    std::multiset<long> all;
    for (const auto& bj : spec.b) all.insert(bj.begin(), bj.end());
    return spectrum_from_charpoly(all, spec.m);
}

std::array<Rat, 3> hypergeom_params(long m0, long m1, long minf) {
    Rat c = 1 - Rat(1, m0);
    Rat apb = c - Rat(1, m1);
    Rat amb = Rat(1, minf);
    Rat a = (apb + amb) / 2;
    Rat b = (apb - amb) / 2;
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    return {a, b, c};
}

Rat j_invariant(const Rat& t1) {
    if (t1 == 0 || t1 == 1) throw error("j-invariant has a pole at t1 in {0, 1}");
    Rat n = t1 * t1 - t1 + 1;
    Rat v = Rat(4, 27) * n * n * n / (t1 * t1 * (1 - t1) * (1 - t1));
    v.canonicalize();
    return v;
}

Cyclo j_invariant(const Cyclo& t1) {
    long m = t1.modulus();
    Cyclo one = Cyclo::rational(m, 1);
    if (t1.is_zero() || t1 == one) throw error("j-invariant has a pole at t1 in {0, 1}");
    Cyclo n = t1 * t1 - t1 + one;
    Cyclo d = t1 * t1 * (one - t1) * (one - t1);
    return Cyclo::rational(m, Rat(4, 27)) * n * n * n * d.inverse();
}

Rat moebius_apply(const MoebiusWord& g, const Rat& t1) {
    Rat t = t1;
    for (int letter : g.letters) {
        if (letter == 1) {
            t = 1 - t;
        } else if (letter == 2) {
            if (t == 0) throw error("Moebius map 1/t at t = 0");
            t = 1 / t;
        } else {
            throw error("letters must be 1 (t -> 1-t) or 2 (t -> 1/t)");
        }
        t.canonicalize();
    }
    return t;
}

namespace {

Rat pow_rat(const Rat& x, long e) {
    Rat r(1);
    Rat b = x;
    long n = e < 0 ? -e : e;
    for (long i = 0; i < n; ++i) r *= b;
    if (e < 0) {
        if (r == 0) throw error("negative power of zero");
        r = 1 / r;
    }
    r.canonicalize();
    return r;
}

// generator values of kappa per quadrangle family
Rat kappa_generator(const FamilySpec& f, int letter, const Rat& t1) {
    bool g2_only = (f.series == Series::Wsharp || f.series == Series::Ssharp);
    if (letter == 2 && g2_only)
        throw error("family " + f.id + " only carries the order-2 coordinate group");
    switch (f.series) {
        case Series::Wsharp:  // W_{1,0}
            return Rat(1);
        case Series::Ssharp:  // S_{1,0}
            return Rat(-1);
        case Series::U1:
            return letter == 1 ? Rat(1) : -pow_rat(t1, -3);
        case Series::E3:
            return letter == 1 ? pow_rat((1 - t1) / t1, 18) : pow_rat(t1, -12);
        case Series::Z1:
            return letter == 1 ? pow_rat((1 - t1) / t1, 14) : pow_rat(t1, -10);
        case Series::Q2:
            return letter == 1 ? Rat(-1) : pow_rat(t1, 3);
        default:
            throw error("kappa is defined for the quadrangle families only");
    }
}

}  // namespace

Rat kappa(const FamilySpec& quadrangle, const MoebiusWord& g, const Rat& t1) {
    if (quadrangle.p != 0) throw error("kappa is defined for the quadrangle families only");
    if (t1 == 0 || t1 == 1) throw error("t1 must avoid {0, 1}");
    // kappa(g_k ... g_1, t) = kappa(g_1, t) * kappa(g_k ... g_2, g_1(t))
    Rat acc(1);
    Rat t = t1;
    for (int letter : g.letters) {
        acc *= kappa_generator(quadrangle, letter, t);
        acc.canonicalize();
        t = moebius_apply(MoebiusWord{{letter}}, t);
    }
    return acc;
}

}  // namespace mlk
