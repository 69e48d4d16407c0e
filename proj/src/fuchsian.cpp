#include "mlk/fuchsian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace mlk {

namespace {

constexpr double kPi = 3.141592653589793238462643;

Cyclo rat_c(long m, const Rat& v) { return Cyclo::rational(m, v); }

}  // namespace

Mat2 Mat2::identity(long m) {
    return {m, Cyclo::rational(m, 1), Cyclo(m), Cyclo(m), Cyclo::rational(m, 1)};
}

Mat2 Mat2::operator*(const Mat2& o) const {
    if (m != o.m) throw error("modulus mismatch in Mat2 product");
    return {m, a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

bool w_sign_pattern_ok(long m, const Cyclo& w, int digits) {
    if (!w.is_real()) return false;
    for (long k = 1; 2 * k <= m; ++k) {
        if (gcd_long(k, m) != 1) continue;
        int s = sign_at_embedding(w, k, digits);
        if (k == 1 ? s <= 0 : s >= 0) return false;
    }
    return true;
}

bool gamma_membership(const FuchsianGroup& g, const Mat2& A) {
    if (A.m != g.m) return false;
    if (!A.integral()) return false;
    const Cyclo &a = A.a, &b = A.b, &c = A.c, &d = A.d;
    Cyclo ab = a.conj(), bb = b.conj(), cb = c.conj(), db = d.conj();
    const Cyclo& w = g.w;
    if (-(a * ab) + w * (c * cb) != rat_c(g.m, -1)) return false;
    if (!(-(a * bb) + w * (c * db)).is_zero()) return false;
    if (!(-(b * ab) + w * (d * cb)).is_zero()) return false;
    if (-(b * bb) + w * (d * db) != w) return false;
    return true;
}

Triple triple_of(const FuchsianGroup& g, const Mat2& A) {
    if (!gamma_membership(g, A)) throw error("matrix is not in Gamma");
    return {A.a, A.c, A.det()};
}

Mat2 from_triple(const FuchsianGroup& g, const Triple& t) {
    return {g.m, t.a, g.w * t.c.conj() * t.delta, t.c, t.a.conj() * t.delta};
}

FuchsianGroup rescaled_group(const FuchsianGroup& g, const Cyclo& u) {
    return {g.m, g.w * u * u.conj()};
}

Mat2 rescale_member(const FuchsianGroup& g, const Cyclo& u, const Mat2& A) {
    Triple t = triple_of(g, A);
    FuchsianGroup g2 = rescaled_group(g, u);
    Mat2 out = from_triple(g2, {t.a, t.c * u.inverse(), t.delta});
    if (!gamma_membership(g2, out)) throw error("rescaled member left the group");
    return out;
}

// --- real subfield coordinates ---------------------------------------------

Cyclo real_from_p1_coords(long m, const std::vector<Rat>& coords) {
    Cyclo p1 = Cyclo::p1(m);
    Cyclo acc(m), pw = Cyclo::rational(m, 1);
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] != 0) acc += pw * rat_c(m, coords[i]);
        pw *= p1;
    }
    return acc;
}

std::vector<Rat> p1_coords(const Cyclo& x) {
    long m = x.modulus();
    long n = std::max(1L, euler_phi(m) / 2);
    if (!x.is_real()) throw error("p1 coordinates require a conjugation-fixed element");
    // solve sum_i y_i p1^i = x in the zeta-power basis
    long phi = euler_phi(m);
    std::vector<std::vector<Rat>> w(phi, std::vector<Rat>(n + 1, Rat(0)));
    Cyclo pw = Cyclo::rational(m, 1);
    Cyclo p1 = Cyclo::p1(m);
    for (long i = 0; i < n; ++i) {
        for (long r = 0; r < phi; ++r) w[r][i] = pw.coords()[r];
        pw *= p1;
    }
    for (long r = 0; r < phi; ++r) w[r][n] = x.coords()[r];
    // Gaussian elimination
    long rank = 0;
    std::vector<long> piv_col;
    for (long col = 0; col < n && rank < phi; ++col) {
        long piv = -1;
        for (long r = rank; r < phi; ++r)
            if (w[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(w[rank], w[piv]);
        Rat inv = 1 / w[rank][col];
        for (long j = col; j <= n; ++j) {
            w[rank][j] *= inv;
            w[rank][j].canonicalize();
        }
        for (long r = 0; r < phi; ++r) {
            if (r == rank || w[r][col] == 0) continue;
            Rat f = w[r][col];
            for (long j = col; j <= n; ++j) {
                w[r][j] -= f * w[rank][j];
                w[r][j].canonicalize();
            }
        }
        piv_col.push_back(col);
        ++rank;
    }
    for (long r = rank; r < phi; ++r)
        if (w[r][n] != 0) throw error("element is not in Q(p1)");
    std::vector<Rat> out(n, Rat(0));
    for (long i = 0; i < rank; ++i) out[piv_col[i]] = w[i][n];
    return out;
}

// --- Pell solving -----------------------------------------------------------

namespace {

struct RealEmbeddings {
    long m;
    std::vector<long> reps;                  // k = 1 first, then the others
    std::vector<std::vector<double>> basis;  // basis[j][i] = sigma_{k_j}(p1^i)
};

RealEmbeddings real_embeddings(long m) {
    RealEmbeddings re;
    re.m = m;
    for (long k = 1; 2 * k <= m; ++k)
        if (gcd_long(k, m) == 1) re.reps.push_back(k);
    long n = std::max(1L, euler_phi(m) / 2);
    Cyclo p1 = Cyclo::p1(m);
    Cyclo pw = Cyclo::rational(m, 1);
    re.basis.assign(re.reps.size(), std::vector<double>(n));
    for (long i = 0; i < n; ++i) {
        for (size_t j = 0; j < re.reps.size(); ++j)
            re.basis[j][i] = embed_complex(pw, re.reps[j], 40).real();
        pw *= p1;
    }
    return re;
}

double embed_real_value(const Cyclo& x, long k) { return embed_complex(x, k, 40).real(); }

std::string coords_key(const std::vector<Rat>& v) {
    std::string s;
    for (const auto& r : v) s += r.get_str() + ";";
    return s;
}

}  // namespace

std::vector<PellSolution> pell_solve(long m, const Cyclo& w, long height) {
    if (!w_sign_pattern_ok(m, w))
        throw error("Pell parameter must satisfy w(zeta) > 0 and w(xi) < 0 elsewhere");
    RealEmbeddings re = real_embeddings(m);
    long n = static_cast<long>(re.basis[0].size());
    long ne = static_cast<long>(re.reps.size());
    Cyclo winv = w.inverse();
    const double eps = 1e-9;

    std::map<std::string, PellSolution> found;
    auto record = [&](const Cyclo& a, const Cyclo& c) {
        auto ka = p1_coords(a), kc = p1_coords(c);
        for (const auto& v : ka)
            if (abs(v.get_num()) > height) return;
        for (const auto& v : kc)
            if (abs(v.get_num()) > height) return;
        found.emplace(coords_key(ka) + "|" + coords_key(kc), PellSolution{a, c});
    };

    // try to reconstruct c with c^2 = s from its embedding magnitudes
    auto try_c = [&](const Cyclo& a, const Cyclo& s) {
        if (s.is_zero()) {
            record(a, Cyclo(m));
            return;
        }
        std::vector<double> mags(ne);
        for (long j = 0; j < ne; ++j) {
            double v = embed_real_value(s, re.reps[j]);
            if (v < -eps) return;  // not a square of a real element
            mags[j] = std::sqrt(std::max(v, 0.0));
        }
        // solve basis * y = signed mags, first sign fixed +
        for (long mask = 0; mask < (1 << (ne - 1)); ++mask) {
            std::vector<double> vals(ne);
            vals[0] = mags[0];
            for (long j = 1; j < ne; ++j) vals[j] = ((mask >> (j - 1)) & 1) ? -mags[j] : mags[j];
            // least-squares-free exact-size solve via Gaussian elimination in doubles
            std::vector<std::vector<double>> g(ne, std::vector<double>(n + 1));
            for (long j = 0; j < ne; ++j) {
                for (long i = 0; i < n; ++i) g[j][i] = re.basis[j][i];
                g[j][n] = vals[j];
            }
            // ne == n here (one embedding per real coordinate)
            bool singular = false;
            for (long col = 0; col < n && !singular; ++col) {
                long piv = col;
                for (long r = col + 1; r < ne; ++r)
                    if (std::abs(g[r][col]) > std::abs(g[piv][col])) piv = r;
                if (std::abs(g[piv][col]) < 1e-12) {
                    singular = true;
                    break;
                }
                std::swap(g[col], g[piv]);
                for (long r = 0; r < ne; ++r) {
                    if (r == col) continue;
                    double f = g[r][col] / g[col][col];
                    for (long i = col; i <= n; ++i) g[r][i] -= f * g[col][i];
                }
            }
            if (singular) continue;
            std::vector<Rat> y(n);
            bool plausible = true;
            for (long i = 0; i < n; ++i) {
                double v = g[i][n] / g[i][i];
                if (std::abs(v) > 1e15) {
                    plausible = false;
                    break;
                }
                long r = std::lround(v);
                if (std::abs(v - r) > 0.01) {
                    plausible = false;
                    break;
                }
                y[i] = Rat(r);
            }
            if (!plausible) continue;
            Cyclo c = real_from_p1_coords(m, y);
            if (c * c == s) {
                record(a, c);
                record(a, -c);
            }
        }
    };

    // enumerate a-coordinates x_1..x_{n-1}, derive the x_0 interval from the
    // bounds |a(xi)| <= 1 at the non-zeta embeddings
    std::vector<long> x(n, 0);
    std::function<void(long)> walk = [&](long pos) {
        if (pos == n) return;  // unreachable
        if (pos == 0) {
            double lo = -static_cast<double>(height), hi = static_cast<double>(height);
            for (long j = 1; j < ne; ++j) {
                double s = 0;
                for (long i = 1; i < n; ++i) s += re.basis[j][i] * static_cast<double>(x[i]);
                lo = std::max(lo, -1.0 - s - eps);
                hi = std::min(hi, 1.0 - s + eps);
            }
            for (long x0 = static_cast<long>(std::ceil(lo)); x0 <= static_cast<long>(std::floor(hi));
                 ++x0) {
                std::vector<Rat> coords(n);
                coords[0] = Rat(x0);
                for (long i = 1; i < n; ++i) coords[i] = Rat(x[i]);
                Cyclo a = real_from_p1_coords(m, coords);
                Cyclo s = (a * a - Cyclo::rational(m, 1)) * winv;
                if (!s.is_real()) continue;
                try_c(a, s);
            }
            return;
        }
        for (long v = -height; v <= height; ++v) {
            x[pos] = v;
            walk(pos - 1);
        }
        x[pos] = 0;
    };
    if (n == 1) {
        walk(0);
    } else {
        // iterate the outer coordinates x_{n-1}..x_1, then close with x_0
        std::function<void(long)> outer = [&](long pos) {
            if (pos == 0) {
                walk(0);
                return;
            }
            for (long v = -height; v <= height; ++v) {
                x[pos] = v;
                outer(pos - 1);
            }
            x[pos] = 0;
        };
        outer(n - 1);
    }

    std::vector<PellSolution> out;
    for (auto& [key, sol] : found) out.push_back(sol);
    return out;
}

std::vector<PellSolution> pell_seed_hunt(long m, const Cyclo& w, long x0_bound, int want) {
    if (!w_sign_pattern_ok(m, w))
        throw error("Pell parameter must satisfy w(zeta) > 0 and w(xi) < 0 elsewhere");
    RealEmbeddings re = real_embeddings(m);
    long n = static_cast<long>(re.basis[0].size());
    long ne = static_cast<long>(re.reps.size());
    std::vector<double> wemb(ne);
    for (long j = 0; j < ne; ++j) wemb[j] = embed_real_value(w, re.reps[j]);
    // inverse of the full embedding matrix V[j][i] = sigma_j(p1^i)
    std::vector<std::vector<double>> vinv(n, std::vector<double>(n));
    {
        std::vector<std::vector<double>> g(n, std::vector<double>(2 * n, 0.0));
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < n; ++j) g[i][j] = re.basis[i][j];
            g[i][n + i] = 1.0;
        }
        for (long col = 0; col < n; ++col) {
            long piv = col;
            for (long r = col + 1; r < n; ++r)
                if (std::abs(g[r][col]) > std::abs(g[piv][col])) piv = r;
            std::swap(g[col], g[piv]);
            for (long r = 0; r < n; ++r) {
                if (r == col) continue;
                double f = g[r][col] / g[col][col];
                for (long j2 = 0; j2 < 2 * n; ++j2) g[r][j2] -= f * g[col][j2];
            }
        }
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) vinv[i][j] = g[i][n + j] / g[i][i];
    }
    std::vector<PellSolution> out;
    auto consider = [&](const std::vector<long>& xs) {
        std::vector<double> u(ne);
        for (long j = 0; j < ne; ++j) {
            double s = 0;
            for (long i = 0; i < n; ++i) s += re.basis[j][i] * static_cast<double>(xs[i]);
            u[j] = s;
        }
        for (long j = 1; j < ne; ++j)
            if (std::abs(u[j]) > 1.0 + 1e-9) return;
        if (u[0] <= 1.0) return;  // want a(zeta) > 1 so that c != 0
        // numeric reconstruction of c from sqrt((a^2-1)/w) at each embedding
        std::vector<double> mag(ne);
        for (long j = 0; j < ne; ++j) {
            double sv = (u[j] * u[j] - 1.0) / wemb[j];
            if (sv < -1e-9) return;
            mag[j] = std::sqrt(std::max(sv, 0.0));
        }
        for (long mask = 0; mask < (1 << (ne - 1)); ++mask) {
            std::vector<double> y(n, 0.0);
            for (long i = 0; i < n; ++i) {
                double acc = vinv[i][0] * mag[0];
                for (long j = 1; j < ne; ++j) {
                    double sgn = ((mask >> (j - 1)) & 1) ? -1.0 : 1.0;
                    acc += vinv[i][j] * sgn * mag[j];
                }
                y[i] = acc;
            }
            bool near = true;
            std::vector<Rat> yc(n);
            for (long i = 0; i < n; ++i) {
                double r = std::nearbyint(y[i]);
                if (std::abs(y[i] - r) > 1e-3 || std::abs(r) > 9e14) {
                    near = false;
                    break;
                }
                yc[i] = Rat(static_cast<long>(r));
            }
            if (!near) continue;
            std::vector<Rat> xc(n);
            for (long i = 0; i < n; ++i) xc[i] = Rat(xs[i]);
            Cyclo a = real_from_p1_coords(m, xc);
            Cyclo c = real_from_p1_coords(m, yc);
            if (c.is_zero()) continue;
            if (a * a - Cyclo::rational(m, 1) == w * c * c) {
                out.push_back({a, c});
                return;
            }
        }
    };
    if (n == 1) throw error("seed hunt needs phi(m) >= 4");
    // solve sigma_j(a) = 0 for j >= 2 as a function of x0 to center the sliver
    for (long x0 = 1; x0 <= x0_bound && static_cast<int>(out.size()) < want; ++x0) {
        for (long sgn : {1L, -1L}) {
            long x0s = sgn * x0;
            // center (x1..x_{n-1}) from the (ne-1) conditions sigma_j = 0
            std::vector<std::vector<double>> A(ne - 1, std::vector<double>(n - 1));
            std::vector<double> b(ne - 1);
            for (long j = 1; j < ne; ++j) {
                for (long i = 1; i < n; ++i) A[j - 1][i - 1] = re.basis[j][i];
                b[j - 1] = -re.basis[j][0] * static_cast<double>(x0s);
            }
            // square system (ne-1 == n-1); small Gaussian solve
            std::vector<double> ctr(n - 1, 0.0);
            {
                std::vector<std::vector<double>> g(n - 1, std::vector<double>(n));
                for (long r = 0; r < n - 1; ++r) {
                    for (long c2 = 0; c2 < n - 1; ++c2) g[r][c2] = A[r][c2];
                    g[r][n - 1] = b[r];
                }
                for (long col = 0; col < n - 1; ++col) {
                    long piv = col;
                    for (long r = col + 1; r < n - 1; ++r)
                        if (std::abs(g[r][col]) > std::abs(g[piv][col])) piv = r;
                    std::swap(g[col], g[piv]);
                    for (long r = 0; r < n - 1; ++r) {
                        if (r == col) continue;
                        double f = g[r][col] / g[col][col];
                        for (long c2 = col; c2 < n; ++c2) g[r][c2] -= f * g[col][c2];
                    }
                }
                for (long i = 0; i < n - 1; ++i) ctr[i] = g[i][n - 1] / g[i][i];
            }
            std::vector<long> xs(n);
            xs[0] = x0s;
            std::function<void(long)> box = [&](long pos) {
                if (static_cast<int>(out.size()) >= want) return;
                if (pos == n) {
                    consider(xs);
                    return;
                }
                long c0 = static_cast<long>(std::nearbyint(ctr[pos - 1]));
                for (long d = -2; d <= 2; ++d) {
                    xs[pos] = c0 + d;
                    box(pos + 1);
                }
            };
            box(1);
            if (static_cast<int>(out.size()) >= want) break;
        }
    }
    // canonicalize sign: a(zeta) > 0 already; prefer c with positive zeta embedding
    for (auto& s : out)
        if (embed_real_value(s.c, 1) < 0) s.c = -s.c;
    return out;
}

PellSolution pell_divisibility_lift(const Cyclo& w, const PellSolution& s) {
    if (s.c.is_zero()) throw error("lift requires c != 0");
    Cyclo a5 = s.a * s.a + w * s.c * s.c;
    Cyclo c5 = rat_c(w.modulus(), 2) * s.a * s.c;
    if (a5 * a5 - Cyclo::rational(w.modulus(), 1) != w * c5 * c5)
        throw error("lift violated the Pell identity");
    return {a5, c5};
}

bool divides_in_ring(const Cyclo& y, const Cyclo& x) {
    if (y.is_zero()) return x.is_zero();
    return (x * y.inverse()).is_integral();
}

// --- triangle cases ----------------------------------------------------------

std::string triangle_case_name(TriangleCase c) {
    switch (c) {
        case TriangleCase::W10: return "W10";
        case TriangleCase::S10: return "S10";
        case TriangleCase::E30U10: return "E30U10";
        case TriangleCase::Z10: return "Z10";
        case TriangleCase::Q20: return "Q20";
    }
    throw error("unknown case");
}

TriangleCase parse_triangle_case(const std::string& name) {
    std::string n;
    for (char c : name)
        if (c != '_' && c != ',') n.push_back(c);
    if (n == "W10" || n == "W1.0") return TriangleCase::W10;
    if (n == "S10") return TriangleCase::S10;
    if (n == "E30" || n == "U10" || n == "E30U10") return TriangleCase::E30U10;
    if (n == "Z10") return TriangleCase::Z10;
    if (n == "Q20") return TriangleCase::Q20;
    throw error("unknown triangle case: " + name);
}

FuchsianGroup triangle_group(TriangleCase c) {
    switch (c) {
        case TriangleCase::W10: {
            long m = 12;
            Cyclo p1 = Cyclo::p1(m);
            return {m, rat_c(m, 2) * p1 * (p1 + rat_c(m, 2))};
        }
        case TriangleCase::S10: {
            long m = 10;
            Cyclo p1 = Cyclo::p1(m);
            return {m, rat_c(m, 2) * p1 * p1 * p1};
        }
        case TriangleCase::E30U10: {
            long m = 18;
            Cyclo p1 = Cyclo::p1(m);
            return {m, p1 * (p1 + rat_c(m, 2))};
        }
        case TriangleCase::Z10: {
            long m = 14;
            Cyclo p5 = Cyclo::zeta_power(m, 5) + Cyclo::zeta_power(m, -5);
            return {m, (-p5).inverse()};
        }
        case TriangleCase::Q20: {
            long m = 12;
            Cyclo p1 = Cyclo::p1(m);
            return {m, (p1 + Cyclo::rational(m, 1)).inverse()};
        }
    }
    throw error("unknown case");
}

Mat2 generator_a1(TriangleCase c) {
    long m = triangle_group(c).m;
    return {m, Cyclo::zeta_power(m, 1), Cyclo(m), Cyclo(m), Cyclo::rational(m, 1)};
}

Mat2 generator_a2(TriangleCase c) {
    switch (c) {
        case TriangleCase::W10: {
            long m = 12;
            Cyclo p1 = Cyclo::p1(m), two = rat_c(m, 2);
            return {m, p1 + two, -(two * p1 * (p1 + two)), Cyclo::rational(m, 1), -(p1 + two)};
        }
        case TriangleCase::S10: {
            long m = 10;
            Cyclo p1 = Cyclo::p1(m), z = Cyclo::zeta_power(m, 1), one = Cyclo::rational(m, 1);
            Cyclo a = (z + one) * p1;
            return {m, a, -(rat_c(m, 2) * p1 * p1 * p1 * z), one, -a};
        }
        case TriangleCase::E30U10: {
            long m = 18;
            Cyclo p1 = Cyclo::p1(m), one = Cyclo::rational(m, 1), two = rat_c(m, 2);
            return {m, p1 + one, -(p1 * (p1 + two)), one, -(p1 + one)};
        }
        case TriangleCase::Z10: {
            long m = 14;
            Cyclo p1 = Cyclo::p1(m);
            Cyclo p5 = Cyclo::zeta_power(m, 5) + Cyclo::zeta_power(m, -5);
            Cyclo z3 = Cyclo::zeta_power(m, 3), one = Cyclo::rational(m, 1);
            Cyclo s = p1 * (one - z3);
            return {m, s, -(s * (-p5).inverse()), s, -s};
        }
        case TriangleCase::Q20: {
            long m = 12;
            Cyclo p1 = Cyclo::p1(m), z = Cyclo::zeta_power(m, 1), one = Cyclo::rational(m, 1);
            return {m, z + one, -z, p1 + one, -(z + one)};
        }
    }
    throw error("unknown case");
}

std::array<long, 3> triangle_type(TriangleCase c) {
    switch (c) {
        case TriangleCase::W10: return {2, 12, 12};
        case TriangleCase::S10: return {2, 10, 10};
        case TriangleCase::E30U10: return {2, 3, 18};
        case TriangleCase::Z10: return {2, 3, 14};
        case TriangleCase::Q20: return {2, 3, 12};
    }
    throw error("unknown case");
}

// --- elliptic data ------------------------------------------------------------

namespace {

// certify tr^2 * rho = det * (1 + rho)^2 with rho = zeta_N^k, in the
// compositum Q(zeta_lcm(m,N)).
bool certify_ratio(const Cyclo& tr, const Cyclo& dt, long N, long k) {
    long m = tr.modulus();
    long l = m / gcd_long(m, N) * N;
    if (euler_phi(l) > 64) return false;
    Cyclo trl = tr.lift_to_modulus(l), dtl = dt.lift_to_modulus(l);
    Cyclo rho = Cyclo::zeta_power(l, (l / N) * k);
    Cyclo one = Cyclo::rational(l, 1);
    return trl * trl * rho == dtl * (one + rho) * (one + rho);
}

}  // namespace

EllipticData elliptic_data(const FuchsianGroup& g, const Mat2& A, int digits) {
    using C = std::complex<double>;
    long m = A.m;
    Cyclo tr = A.trace(), dt = A.det();
    C trv = embed_complex(tr, 1, digits);
    C dtv = embed_complex(dt, 1, digits);
    C disc = std::sqrt(trv * trv - 4.0 * dtv);
    C l1 = (trv + disc) / 2.0, l2 = (trv - disc) / 2.0;
    if (std::abs(l1) < 1e-12 || std::abs(std::abs(l2 / l1) - 1.0) > 1e-9)
        throw error("matrix is not elliptic");
    // fixed points z with A(z) = z; eigenvector (z, 1) for each eigenvalue
    C av = embed_complex(A.a, 1, digits), bv = embed_complex(A.b, 1, digits);
    C cv = embed_complex(A.c, 1, digits), dv = embed_complex(A.d, 1, digits);
    auto zfor = [&](C lam) -> C {
        if (std::abs(cv) > 1e-12) return (lam - dv) / cv;
        if (std::abs(lam - av) > 1e-12) return bv / (lam - av);
        return C(1e300, 0);  // eigenvector (1, 0): the fixed point at infinity
    };
    C z1 = zfor(l1), z2 = zfor(l2);
    if (std::abs(z1) > std::abs(z2)) {
        std::swap(l1, l2);
        std::swap(z1, z2);
    }
    // the chosen fixed point lies inside the invariant circle |z|^2 = w
    double wv = embed_complex(g.w, 1, digits).real();
    if (!(std::norm(z1) < wv + 1e-9))
        throw error("fixed point ordering left the invariant disc");
    C rho = l2 / l1;
    double turns = std::arg(rho) / (2 * kPi);
    // snap to k/N, N <= 12 m, smallest N first; certify exactly
    EllipticData out;
    out.fixed_point = z1;
    bool done = false;
    if (tr.is_zero()) {
        out.angle_turns = Rat(1, 2);
        out.order = 2;
        done = true;
    }
    for (long N = 1; N <= 12 * m && !done; ++N) {
        long k = std::lround(turns * N);
        if (std::abs(turns - static_cast<double>(k) / N) > 1e-8) continue;
        long kk = ((k % N) + N) % N;
        long gg = gcd_long(kk, N);
        long Nr = (kk == 0) ? 1 : N / gg;
        long kr = (kk == 0) ? 0 : kk / gg;
        if (!certify_ratio(tr, dt, Nr, kr)) continue;
        out.order = Nr;
        // keep the signed angle in (-1/2, 1/2]
        Rat t(kr, Nr);
        if (t > Rat(1, 2)) t -= 1;
        out.angle_turns = t;
        done = true;
    }
    if (!done) throw error("could not certify the rotation angle as a root of unity");
    return out;
}

// --- minimality audit -------------------------------------------------------

MinimalityAudit minimality_audit(TriangleCase tc) {
    FuchsianGroup g = triangle_group(tc);
    Mat2 a2m = generator_a2(tc);
    long m = g.m;
    Cyclo a2abs = a2m.a * a2m.a.conj();  // |a_2|^2 as an exact element
    RealEmbeddings re = real_embeddings(m);
    long n = static_cast<long>(re.basis[0].size());
    long ne = static_cast<long>(re.reps.size());
    // coordinate bounds: |x| <= sum_j |Vinv_ij| * bound_j
    std::vector<double> bound(ne, 1.0);
    bound[0] = embed_real_value(a2abs, 1);
    // invert the basis matrix numerically
    std::vector<std::vector<double>> vinv(n, std::vector<double>(n));
    {
        std::vector<std::vector<double>> w(n, std::vector<double>(2 * n, 0.0));
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < n; ++j) w[i][j] = re.basis[i][j];
            w[i][n + i] = 1.0;
        }
        for (long col = 0; col < n; ++col) {
            long piv = col;
            for (long r = col + 1; r < n; ++r)
                if (std::abs(w[r][col]) > std::abs(w[piv][col])) piv = r;
            std::swap(w[col], w[piv]);
            for (long r = 0; r < n; ++r) {
                if (r == col) continue;
                double f = w[r][col] / w[col][col];
                for (long j = 0; j < 2 * n; ++j) w[r][j] -= f * w[col][j];
            }
        }
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) vinv[i][j] = w[i][n + j] / w[i][i];
    }
    std::vector<long> cb(n, 0);
    for (long i = 0; i < n; ++i) {
        double s = 0;
        for (long j = 0; j < n; ++j) s += std::abs(vinv[i][j]) * bound[j];
        cb[i] = static_cast<long>(std::floor(s)) + 1;
    }
    MinimalityAudit audit;
    audit.norm_w = field_norm(g.w);
    Cyclo one = Cyclo::rational(m, 1);
    // enumerate the box
    std::vector<long> x(n, 0);
    std::function<void(long)> walk = [&](long pos) {
        if (pos == n) {
            std::vector<Rat> coords(n);
            for (long i = 0; i < n; ++i) coords[i] = Rat(x[i]);
            Cyclo f = real_from_p1_coords(m, coords);
            // strict box membership, exact at the boundaries
            Cyclo d_low = f - one;
            if (d_low.is_zero() || sign_at_embedding(d_low, 1) <= 0) return;
            Cyclo d_high = a2abs - f;
            if (d_high.is_zero() || sign_at_embedding(d_high, 1) <= 0) return;
            for (long j = 1; j < ne; ++j) {
                if (f.is_zero() || sign_at_embedding(f, re.reps[j]) <= 0) return;
                Cyclo dj = one - f;
                if (dj.is_zero() || sign_at_embedding(dj, re.reps[j]) <= 0) return;
            }
            audit.candidates.push_back(f);
            audit.norms_f_minus_one.push_back(field_norm(f - one));
            return;
        }
        for (long v = -cb[pos]; v <= cb[pos]; ++v) {
            x[pos] = v;
            walk(pos + 1);
        }
        x[pos] = 0;
    };
    walk(0);
    audit.all_excluded = true;
    for (const auto& nf : audit.norms_f_minus_one) {
        Rat r = nf / audit.norm_w;
        bool excluded = !(r.get_den() == 1 && r >= 0);
        if (!excluded) audit.all_excluded = false;
    }
    // margin of the contraction inequality used by the word reduction
    double a2inv2 = 1.0 / embed_real_value(a2abs, 1);
    double s = std::sin(kPi / static_cast<double>(m));
    double t = 1.0 - std::sqrt(1.0 - a2inv2);
    audit.contraction_margin = a2inv2 - (s * s + t * t);
    return audit;
}

// --- word reduction ---------------------------------------------------------------

Mat2 evaluate_word(TriangleCase c, const GeneratorWord& w) {
    Mat2 a1 = generator_a1(c), a2 = generator_a2(c);
    long m = a1.m;
    Mat2 a1inv = {m, Cyclo::zeta_power(m, -1), Cyclo(m), Cyclo(m), Cyclo::rational(m, 1)};
    Mat2 acc = Mat2::identity(m);
    for (const auto& st : w.steps) {
        if (st.a1_exp >= 0)
            for (long i = 0; i < st.a1_exp; ++i) acc = acc * a1;
        else
            for (long i = 0; i < -st.a1_exp; ++i) acc = acc * a1inv;
        if (st.then_a2) acc = acc * a2;
    }
    return acc.scaled(w.scalar);
}

namespace {

// find (sign, k) with x = sign * zeta^k exactly; x must be a unit root
std::pair<int, long> unit_root_exponent(const Cyclo& x) {
    long m = x.modulus();
    for (long k = 0; k < m; ++k) {
        Cyclo z = Cyclo::zeta_power(m, k);
        if (x == z) return {1, k};
        if (x == -z) return {-1, k};
    }
    throw error("value is not a unit root");
}

}  // namespace

ReductionResult reduce_word(TriangleCase tc, const Mat2& A) {
    FuchsianGroup g = triangle_group(tc);
    if (!gamma_membership(g, A)) throw error("matrix is not in Gamma");
    long m = g.m;
    Mat2 a1 = generator_a1(tc), a2 = generator_a2(tc);
    Cyclo mu_c = (a2 * a2).a;  // A2^2 = mu * id
    if (!((a2 * a2).b.is_zero() && (a2 * a2).c.is_zero() && (a2 * a2).d == mu_c))
        throw error("A2 is not an involution up to scalar");
    Mat2 w = A;
    std::vector<long> ks;
    ReductionResult res;
    int guard = 0;
    while (!w.c.is_zero()) {
        if (++guard > 200) throw error("reduction exceeded 200 steps");
        std::complex<double> c3a2 = embed_complex(w.c * a2.a, 1, 40);
        std::complex<double> d3c2 = embed_complex(w.d * a2.c, 1, 40);
        double target = std::arg(c3a2) - std::arg(-d3c2);
        long k0 = std::lround(target * m / (2 * kPi));
        long best_k = 0;
        double best = 1e9;
        for (long dk = -2; dk <= 2; ++dk) {
            long k = k0 + dk;
            double diff = std::abs(std::remainder(target - 2 * kPi * k / m, 2 * kPi));
            if (diff < best) {
                best = diff;
                best_k = k;
            }
        }
        if (best > kPi / m + 1e-6) throw error("no angle-condition k found");
        long k = ((best_k % m) + m) % m;
        // w <- w * A1^{-k} A2 A1^k
        Mat2 conj_gen = {m, a2.a, a2.b * Cyclo::zeta_power(m, -k), a2.c * Cyclo::zeta_power(m, k),
                         a2.d};
        Mat2 next = w * conj_gen;
        Cyclo dec = next.c * next.c.conj() - w.c * w.c.conj();
        if (dec.is_zero() || sign_at_embedding(dec, 1) >= 0)
            throw error("|c| failed to decrease strictly");
        w = next;
        ks.push_back(k);
        res.c_norms.push_back(next.c * next.c.conj());
    }
    res.steps = static_cast<long>(ks.size());
    // w is diagonal now: w = d' * A1^l with zeta^l = a' / d'
    if (!w.b.is_zero()) throw error("reduction did not reach a diagonal matrix");
    Cyclo dprime = w.d;
    Cyclo ratio = w.a * dprime.inverse();
    auto [sgn, l] = unit_root_exponent(ratio);
    if (sgn < 0) {
        if (m % 2 != 0) throw error("cannot absorb -1 for odd modulus");
        l = (l + m / 2) % m;
    }
    // A = scalar * A1^{l - k_s} A2 A1^{k_s - k_{s-1}} A2 ... A2 A1^{k_1}
    GeneratorWord word;
    Cyclo scalar = dprime;
    Cyclo mu_inv = mu_c.inverse();
    for (size_t i = 0; i < ks.size(); ++i) scalar *= mu_inv;
    long prev = l;
    for (size_t i = ks.size(); i-- > 0;) {
        WordStep st;
        st.a1_exp = prev - ks[i];
        st.then_a2 = true;
        word.steps.push_back(st);
        prev = ks[i];
    }
    word.steps.push_back({prev, false});
    word.scalar = scalar;
    res.word = word;
    // round-trip guarantee
    Mat2 back = evaluate_word(tc, word);
    if (!(back == A)) throw error("word evaluation does not reproduce the input");
    return res;
}

// --- Pell -> G_Z -------------------------------------------------------------------

Cyclo gz_w0(const HermData& hd) {
    Cyclo w = w_of_xi(hd, 1);
    IntPoly b5 = b5_poly(hd.spec);
    long m = hd.m;
    Cyclo b5z(m), b5zb(m);
    {
        Cyclo z = Cyclo::zeta_power(m, 1), zb = Cyclo::zeta_power(m, -1);
        Cyclo accz(m), acczb(m);
        for (int i = b5.degree(); i >= 0; --i) {
            accz = accz * z + Cyclo::rational(m, Rat(b5.coeff(i)));
            acczb = acczb * zb + Cyclo::rational(m, Rat(b5.coeff(i)));
        }
        b5z = accz;
        b5zb = acczb;
    }
    Cyclo w0 = w * b5z * b5zb;
    if (!w0.is_real()) throw error("w0 must be conjugation fixed");
    if (!w0.is_integral()) throw error("w0 must lie in Z[zeta]");
    return w0;
}

GzResult gz_from_pell(const HermData& hd, const PellSolution& sol) {
    long m = hd.m;
    const SeifertLattice& lat = hd.lat;
    Cyclo w = w_of_xi(hd, 1);
    Cyclo w0 = gz_w0(hd);
    const Cyclo& a = sol.a;
    const Cyclo& f = sol.c;
    Cyclo one = Cyclo::rational(m, 1);
    if (a * a - one != w0 * f * f) throw error("input does not solve the Pell equation for w0");
    if (!divides_in_ring(w0, a - one))
        throw divisibility_error("w0 does not divide a - 1 in Z[zeta]");
    IntPoly b5 = b5_poly(hd.spec), b6 = b6_poly(hd.spec);
    Cyclo z = Cyclo::zeta_power(m, 1), zb = Cyclo::zeta_power(m, -1);
    auto eval_at = [&](const IntPoly& p, const Cyclo& x) {
        Cyclo acc(m);
        for (int i = p.degree(); i >= 0; --i)
            acc = acc * x + Cyclo::rational(m, Rat(p.coeff(i)));
        return acc;
    };
    Cyclo b5z = eval_at(b5, z), b5zb = eval_at(b5, zb), b6z = eval_at(b6, z);
    Cyclo q11c = (a - one) * b5z.inverse();
    Cyclo q12c = f * w * b5zb * b6z.inverse();
    Cyclo q21c = f;
    Cyclo q22c = (a - one) * b6z.inverse();
    for (const Cyclo* qq : {&q11c, &q12c, &q21c, &q22c})
        if (!qq->is_integral())
            throw divisibility_error("q_ij coefficient left Z[zeta]");
    auto to_poly = [&](const Cyclo& x) {
        std::vector<Int> c(x.coords().size());
        for (size_t i = 0; i < x.coords().size(); ++i) c[i] = x.coords()[i].get_num();
        return IntPoly(std::move(c));
    };
    IntPoly q11 = to_poly(q11c), q12 = to_poly(q12c), q21 = to_poly(q21c), q22 = to_poly(q22c);
    IntPoly p11 = IntPoly::constant(1) + b5 * q11;
    IntPoly p12 = b5 * q12;
    IntPoly p21 = b6 * q21;
    IntPoly p22 = IntPoly::constant(1) + b6 * q22;
    // images of the block generators
    auto apply_poly_vec = [&](const IntPoly& p, const std::vector<Int>& v) {
        std::vector<Int> acc(lat.rank, Int(0));
        std::vector<Int> cur = v;
        for (int i = 0; i <= p.degree(); ++i) {
            if (i > 0) cur = lat.M * cur;
            if (p.coeff(i) != 0)
                for (long r = 0; r < lat.rank; ++r) acc[r] += p.coeff(i) * cur[r];
        }
        return acc;
    };
    const std::vector<Int>& beta1 = hd.b1.beta;
    const std::vector<Int>& beta2 = hd.b2.beta;
    auto add_vec = [&](std::vector<Int> a1v, const std::vector<Int>& b1v) {
        for (long r = 0; r < lat.rank; ++r) a1v[r] += b1v[r];
        return a1v;
    };
    std::vector<Int> g_beta1 = add_vec(apply_poly_vec(p11, beta1), apply_poly_vec(p21, beta2));
    std::vector<Int> g_beta2 = add_vec(apply_poly_vec(p12, beta1), apply_poly_vec(p22, beta2));
    // assemble g on the stacked block basis; g commutes with M on the blocks
    std::vector<std::vector<Int>> basis_rows, image_rows;
    std::vector<Int> cur = beta1, img = g_beta1;
    for (long t = 0; t < hd.b1.rank(); ++t) {
        if (t > 0) {
            cur = lat.M * cur;
            img = lat.M * img;
        }
        basis_rows.push_back(cur);
        image_rows.push_back(img);
    }
    cur = beta2;
    img = g_beta2;
    for (long t = 0; t < hd.b2.rank(); ++t) {
        if (t > 0) {
            cur = lat.M * cur;
            img = lat.M * img;
        }
        basis_rows.push_back(cur);
        image_rows.push_back(img);
    }
    if (hd.spec.series == Series::Z1) {
        // third block: g is the identity there
        OrlikBlock b3 = make_orlik_block(lat, hd.spec.betas[2]);
        for (long t = 0; t < b3.rank(); ++t) {
            std::vector<Int> row(lat.rank);
            for (long c2 = 0; c2 < lat.rank; ++c2) row[c2] = b3.basis.at(t, c2);
            basis_rows.push_back(row);
            image_rows.push_back(row);
        }
    }
    long mu = lat.rank;
    if (static_cast<long>(basis_rows.size()) != mu) throw error("block basis is not full rank");
    IntMat B(mu, mu), Im(mu, mu);
    for (long i = 0; i < mu; ++i)
        for (long j = 0; j < mu; ++j) {
            B.at(i, j) = basis_rows[i][j];
            Im.at(i, j) = image_rows[i][j];
        }
    // G * B^T = Im^T
    auto binv = rational_inverse(B.transposed());
    if (!binv) throw error("stacked block basis is singular");
    IntMat num = Im.transposed() * binv->num;
    IntMat G(mu, mu);
    for (long i = 0; i < mu; ++i)
        for (long j = 0; j < mu; ++j) {
            if (num.at(i, j) % binv->den != 0)
                throw error("constructed automorphism is not integral on the lattice");
            G.at(i, j) = num.at(i, j) / binv->den;
        }
    // postconditions
    if (!is_form_automorphism(lat, G)) throw error("constructed g does not preserve L");
    if (G * lat.M != lat.M * G) throw error("constructed g does not commute with M");
    // identity on (B1)_{b5} and (B2)_{b6} (and on B3)
    auto check_fixed = [&](const std::vector<Int>& gen, long count) {
        std::vector<Int> v = gen;
        for (long t = 0; t < count; ++t) {
            if (t > 0) v = lat.M * v;
            if (G * v != v) throw error("constructed g moves a vector it must fix");
        }
    };
    if (b5.degree() > 0) check_fixed(apply_poly_vec(cyclotomic_poly(m), beta1), b5.degree());
    if (b6.degree() > 0) check_fixed(apply_poly_vec(cyclotomic_poly(m), beta2), b6.degree());
    GzResult out;
    out.g = G;
    out.q = {{q11, q12}, {q21, q22}};
    return out;
}

}  // namespace mlk
