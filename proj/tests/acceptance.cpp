// Acceptance suite: runs every criterion at its stated tolerance (exact
// arithmetic means zero tolerance) and prints one pass/fail line each.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "mlk/catalog_io.hpp"
#include "mlk/verify.hpp"

using namespace mlk;

namespace {

int g_failed = 0;

void line(int criterion, bool pass, const std::string& what) {
    std::printf("criterion %2d: %s — %s\n", criterion, pass ? "PASS" : "FAIL", what.c_str());
    if (!pass) ++g_failed;
}

const std::vector<Series> kAllSeries = {Series::Wsharp, Series::Ssharp, Series::U1, Series::E3,
                                        Series::Z1,     Series::Q2,     Series::W1, Series::S1};

struct Instance {
    FamilySpec spec;
    SeifertLattice lat;
};

std::vector<Instance> g_instances;  // all of criterion 1's instances

// ---------------------------------------------------------------------------

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
        for (Series s : kAllSeries)
            for (long p = 1; p <= 24; ++p) {
                FamilySpec spec = family_spec(s, p);
                SeifertLattice lat = family_lattice(spec);
                if (char_poly(lat.M) != spec.char_poly_expected() || lat.rank != spec.mu) {
                    ok = false;
                    detail = spec.id + " char poly or rank off";
                }
                g_instances.push_back({std::move(spec), std::move(lat)});
            }
        for (const auto& q : quadrangle_catalog()) {
            SeifertLattice lat = family_lattice(q);
            if (char_poly(lat.M) != q.char_poly_expected() || lat.rank != q.mu) {
                ok = false;
                detail = q.id + " char poly or rank off";
            }
            g_instances.push_back({q, std::move(lat)});
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < 60.0;
    std::ostringstream os;
    os << "char polys and ranks of 8 series x p=1..24 plus 6 quadrangle families ("
       << g_instances.size() << " lattices, " << secs << " s)";
    if (!detail.empty()) os << ": " << detail;
    line(1, ok && in_time, os.str());
}

void criterion2() {
    bool ok = true;
    std::string detail;
    try {
        std::vector<FamilySpec> specs;
        for (Series s : kAllSeries)
            for (long p : {1L, 2L}) specs.push_back(family_spec(s, p));
        for (const auto& q : quadrangle_catalog()) specs.push_back(q);
        for (const auto& spec : specs) {
            SeifertLattice lat = lattice_from_stokes(stokes_matrix(spec));
            auto action = monodromy_action_list(spec);
            for (long i = 0; i < spec.mu; ++i)
                for (long j = 0; j < spec.mu; ++j)
                    if (lat.M.at(j, i) != action[i][j]) {
                        ok = false;
                        detail = spec.id + " e_" + std::to_string(i + 1);
                    }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    line(2, ok, "monodromy action lists reproduced line by line at p in {1,2} and p = 0" +
                    (detail.empty() ? "" : ": " + detail));
}

void criterion3() {
    bool ok = true;
    std::string detail;
    try {
        for (const auto& inst : g_instances) {
            std::vector<IntPoly> expected;
            for (size_t j = 0; j < inst.spec.b.size(); ++j)
                expected.push_back(inst.spec.block_poly(j));
            Report rep =
                verify_decomposition(inst.lat, inst.spec.betas, expected, Int(inst.spec.r_I));
            if (!rep.all_pass()) {
                ok = false;
                detail = inst.spec.id;
            }
        }
        // eigenlattice splitting for the m | p subseries, r in {1, 2}
        for (Series s : kAllSeries)
            for (long r : {1L, 2L}) {
                FamilySpec spec = [&] {
                    long m = family_spec(s, 1).m;
                    return family_spec(s, m * r);
                }();
                Report rep = verify_family_report(spec);
                bool found = false;
                for (const auto& c : rep.checks)
                    if (c.id == "eigensplit_phi_m") {
                        found = true;
                        if (!c.pass) {
                            ok = false;
                            detail = spec.id + " splitting";
                        }
                    }
                if (!found) {
                    ok = false;
                    detail = spec.id + " splitting check missing";
                }
            }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    line(3, ok, "Orlik decompositions (direct sum, primitivity, index, orthogonality) and "
                "Phi_m eigenlattice splitting" +
                    (detail.empty() ? "" : ": " + detail));
}

std::vector<Int> apply_poly(const SeifertLattice& lat, const IntPoly& p,
                            const std::vector<Int>& v) {
    std::vector<Int> acc(lat.rank, Int(0));
    std::vector<Int> cur = v;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i > 0) cur = lat.M * cur;
        if (p.coeff(i) != 0)
            for (long r = 0; r < lat.rank; ++r) acc[r] += p.coeff(i) * cur[r];
    }
    return acc;
}

void criterion4() {
    bool ok = true;
    std::string detail;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.empty()) detail = what;
        }
    };
    try {
        // reference values of L(gamma_1, gamma_1) per series (p-independent; take p = 1, 2)
        std::map<Series, long> g1sq = {{Series::Ssharp, 5},
                                       {Series::E3, 6},
                                       {Series::Z1, 21},
                                       {Series::W1, 6},
                                       {Series::S1, 10}};
        for (auto [s, val] : g1sq)
            for (long p : {1L, 2L}) {
                FamilySpec spec = family_spec(s, p);
                SeifertLattice lat = family_lattice(spec);
                IntPoly cof = spec.block_poly(0).div_exact(cyclotomic_poly(2));
                std::vector<Int> g1 = apply_poly(lat, cof, spec.betas[0]);
                expect(lat.seifert(g1, g1) == val, spec.id + " L(g1,g1)");
                if (s == Series::Z1) {
                    const std::vector<Int>& g3 = spec.betas[2];
                    expect(lat.seifert(g3, g3) == 3, spec.id + " L(g3,g3)");
                    expect(lat.seifert(g1, g3) == 7 && lat.seifert(g3, g1) == 7,
                           spec.id + " L(g1,g3)");
                }
            }
        // reference values of L(gamma_2, gamma_2) on the Phi_2 | b_2 subseries
        auto gamma2_sq = [&](Series s, long p) {
            FamilySpec spec = family_spec(s, p);
            SeifertLattice lat = family_lattice(spec);
            IntPoly cof = spec.block_poly(1).div_exact(cyclotomic_poly(2));
            std::vector<Int> g2 = apply_poly(lat, cof, spec.betas[1]);
            return lat.seifert(g2, g2);
        };
        for (long q : {1L, 2L, 3L})
            expect(gamma2_sq(Series::Ssharp, 2 * q) == 5 + q, "S# gamma2 at q=" + std::to_string(q));
        for (long p : {2L, 4L}) {
            expect(gamma2_sq(Series::E3, p) == 18 + 2 * p, "E3 gamma2");
            expect(gamma2_sq(Series::Z1, p) == 14 + 2 * p, "Z1 gamma2");
            expect(gamma2_sq(Series::S1, p) == 10 + 2 * p, "S gamma2");
        }
        for (long p : {1L, 3L}) expect(gamma2_sq(Series::W1, p) == 12 + 2 * p, "W gamma2");
        // Gram matrices of the even/odd subseries at q in {1, 2}
        for (long q : {1L, 2L}) {
            auto gram2 = [&](Series s, long p, bool tilde, long zcase) {
                FamilySpec spec = family_spec(s, p);
                SeifertLattice lat = family_lattice(spec);
                IntPoly c1 = spec.block_poly(0).div_exact(cyclotomic_poly(2));
                IntPoly c2 = spec.block_poly(1).div_exact(cyclotomic_poly(2));
                std::vector<Int> g1 = apply_poly(lat, c1, spec.betas[0]);
                std::vector<Int> g2 = apply_poly(lat, c2, spec.betas[1]);
                std::vector<std::vector<Int>> basis;
                if (zcase) {
                    std::vector<Int> g3 = spec.betas[2];
                    // basis gamma_1 - 2 gamma_3, (gamma_1 + gamma_2 - 3 gamma_3)/2, gamma_3
                    std::vector<Int> b1(lat.rank), b2(lat.rank);
                    for (long i = 0; i < lat.rank; ++i) {
                        b1[i] = g1[i] - 2 * g3[i];
                        Int num = g1[i] + g2[i] - 3 * g3[i];
                        if (num % 2 != 0) return false;
                        b2[i] = num / 2;
                    }
                    basis = {b1, b2, g3};
                    IntMat want(3, 3);
                    long vals[3][3] = {{5, 2, 1}, {2, 5 + q, -1}, {1, -1, 3}};
                    for (int i = 0; i < 3; ++i)
                        for (int j = 0; j < 3; ++j) want.at(i, j) = vals[i][j];
                    for (int i = 0; i < 3; ++i)
                        for (int j = 0; j < 3; ++j)
                            if (lat.seifert(basis[i], basis[j]) != want.at(i, j)) return false;
                    return true;
                }
                std::vector<Int> second(lat.rank);
                if (tilde) {
                    for (long i = 0; i < lat.rank; ++i) {
                        Int num = g1[i] + g2[i];
                        if (num % 2 != 0) return false;
                        second[i] = num / 2;
                    }
                } else {
                    second = g2;
                }
                basis = {g1, second};
                std::array<std::array<Int, 2>, 2> want;
                if (s == Series::Ssharp) want = {{{Int(5), Int(0)}, {Int(0), Int(5 + q)}}};
                if (s == Series::E3) want = {{{Int(6), Int(3)}, {Int(3), Int(6 + q)}}};
                if (s == Series::W1) want = {{{Int(6), Int(3)}, {Int(3), Int(4 + q)}}};
                if (s == Series::S1) want = {{{Int(10), Int(5)}, {Int(5), Int(5 + q)}}};
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        if (lat.seifert(basis[i], basis[j]) != want[i][j]) return false;
                return true;
            };
            expect(gram2(Series::Ssharp, 2 * q, false, 0), "S# Gram q=" + std::to_string(q));
            expect(gram2(Series::E3, 2 * q, true, 0), "E3 Gram");
            expect(gram2(Series::Z1, 2 * q, true, 1), "Z1 Gram");
            expect(gram2(Series::W1, 2 * q - 1, true, 0), "W Gram");
            expect(gram2(Series::S1, 2 * q, true, 0), "S Gram");
        }
        // Q2: L(gamma_1, gamma_1) = 3 for all p; L(gamma_2, gamma_2) = 3 + 2s at p = 4s
        for (long p : {1L, 2L, 3L, 4L, 8L}) {
            FamilySpec spec = family_spec(Series::Q2, p);
            SeifertLattice lat = family_lattice(spec);
            IntPoly cof = spec.block_poly(0).div_exact(cyclotomic_poly(4));
            std::vector<Int> g1 = apply_poly(lat, cof, spec.betas[0]);
            expect(lat.seifert(g1, g1) == 3, "Q2 L(g1,g1) p=" + std::to_string(p));
            if (p % 4 == 0) {
                IntPoly cof2 = spec.block_poly(1).div_exact(cyclotomic_poly(4));
                std::vector<Int> g2 = apply_poly(lat, cof2, spec.betas[1]);
                expect(lat.seifert(g2, g2) == 3 + 2 * (p / 4), "Q2 L(g2,g2)");
            }
        }
        // W_{1,6s-3}: the two 3x3 Seifert matrices on the delta bases
        for (long ss : {1L, 2L}) {
            long p = 6 * ss - 3;
            FamilySpec spec = family_spec(Series::W1, p);
            SeifertLattice lat = family_lattice(spec);
            IntPoly ph62 = cyclotomic_poly(6) * cyclotomic_poly(2);
            IntPoly c1 = spec.block_poly(0).div_exact(ph62);
            IntPoly c2 = spec.block_poly(1).div_exact(ph62);
            std::vector<Int> d1 = apply_poly(lat, c1, spec.betas[0]);
            std::vector<Int> d2 = apply_poly(lat, c2, spec.betas[1]);
            std::vector<std::vector<Int>> b1{d1, lat.M * d1, lat.M * (lat.M * d1)};
            std::vector<std::vector<Int>> b2{d2, lat.M * d2, lat.M * (lat.M * d2)};
            long w1[3][3] = {{2, 2, 2}, {-2, 2, 2}, {-2, -2, 2}};
            long c22 = 1 + 2 * ss;
            long w2[3][3] = {{c22, 0, c22}, {-c22, c22, 0}, {0, -c22, c22}};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    expect(lat.seifert(b1[i], b1[j]) == w1[i][j], "W delta1 matrix");
                    expect(lat.seifert(b2[i], b2[j]) == w2[i][j], "W delta2 matrix");
                }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    line(4, ok,
         "gamma-vector golden values: L-norms, Gram matrices, and the Q2 and W special cases" +
             (detail.empty() ? "" : ": " + detail));
}

void criterion5() {
    bool ok = true;
    std::string detail;
    try {
        for (Series s : kAllSeries)
            for (long r : {1L, 2L}) {
                Report rep = herm_table_report(s, r);
                if (!rep.all_pass()) {
                    ok = false;
                    for (const auto& c : rep.checks)
                        if (!c.pass && detail.empty())
                            detail = series_name(s) + " r=" + std::to_string(r) + " " + c.id;
                }
            }
        // quadrangle layer: w matches the closed form at r = 0
        for (Series s : {Series::Wsharp, Series::Ssharp, Series::U1, Series::E3, Series::Z1,
                         Series::Q2}) {
            Report rep = herm_table_report(s, 0);
            if (!rep.all_pass()) {
                ok = false;
                if (detail.empty()) detail = series_name(s) + " r=0";
            }
        }
        // reduced-parameter identities and sign patterns of the six quadrangle w values
        {
            auto c12 = [](long v) { return Cyclo::rational(12, v); };
            HermData w10 = herm_data(Series::Wsharp, 0);
            Cyclo w = w_of_xi(w10, 1);
            Cyclo p1 = Cyclo::p1(12);
            if (!(w == c12(6) * ((c12(2) - p1) * p1).inverse() &&
                  w == c12(2) * p1 * (p1 + c12(2))))
                ok = false, detail = "reduced w W10";
        }
        {
            HermData s10 = herm_data(Series::Ssharp, 0);
            Cyclo w = w_of_xi(s10, 1);
            Cyclo p1 = Cyclo::p1(10);
            Cyclo p3 = Cyclo::zeta_power(10, 3) + Cyclo::zeta_power(10, -3);
            Cyclo m3 = -p3, one = Cyclo::rational(10, 1);
            if (!(w == Cyclo::rational(10, -2) * (m3 * (m3 - one)).inverse() &&
                  w == Cyclo::rational(10, 2) * p1 * p1 * p1))
                ok = false, detail = "reduced w S10";
        }
        {
            HermData u10 = herm_data(Series::U1, 0);
            Cyclo w = w_of_xi(u10, 1).lift_to_modulus(18);
            Cyclo p1 = Cyclo::p1(18), one = Cyclo::rational(18, 1), two = Cyclo::rational(18, 2);
            Cyclo p7 = Cyclo::zeta_power(18, 7) + Cyclo::zeta_power(18, -7);
            if (!(w == Cyclo::rational(18, -3) * ((two + p7) * (one - p1)).inverse() &&
                  w == p1 * (p1 + two)))
                ok = false, detail = "reduced w U10";
        }
        {
            HermData e30 = herm_data(Series::E3, 0);
            Cyclo w = w_of_xi(e30, 1);
            Cyclo p1 = Cyclo::p1(18), one = Cyclo::rational(18, 1), two = Cyclo::rational(18, 2);
            if (!(w == Cyclo::rational(18, 3) * (two - p1) *
                           ((p1 + two) * (p1 - one)).inverse() &&
                  w == (two - p1) * (two - p1) * p1 * (p1 + two)))
                ok = false, detail = "reduced w E30";
        }
        {
            HermData z10 = herm_data(Series::Z1, 0);
            Cyclo w = w_of_xi(z10, 1);
            Cyclo p5 = Cyclo::zeta_power(14, 5) + Cyclo::zeta_power(14, -5);
            Cyclo p1 = Cyclo::p1(14), one = Cyclo::rational(14, 1);
            if (!(w == (-p5).inverse() && w == p1 - one)) ok = false, detail = "reduced w Z10";
        }
        {
            HermData q20 = herm_data(Series::Q2, 0);
            Cyclo w = w_of_xi(q20, 1);
            Cyclo p1 = Cyclo::p1(12), one = Cyclo::rational(12, 1), two = Cyclo::rational(12, 2);
            if (!(w == (two - p1) * (p1 + one).inverse())) ok = false, detail = "reduced w Q20";
        }
        for (TriangleCase c : {TriangleCase::W10, TriangleCase::S10, TriangleCase::E30U10,
                               TriangleCase::Z10, TriangleCase::Q20}) {
            FuchsianGroup g = triangle_group(c);
            if (!w_sign_pattern_ok(g.m, g.w)) ok = false, detail = "quadrangle w sign pattern";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    line(5, ok,
         "hermitian layer: closed forms exact in Q(zeta), sign patterns, units, quadrangle w values" +
             (detail.empty() ? "" : ": " + detail));
}

void criterion6() {
    bool ok = true;
    std::string detail;
    try {
        for (TriangleCase c : {TriangleCase::W10, TriangleCase::S10, TriangleCase::E30U10,
                               TriangleCase::Z10, TriangleCase::Q20}) {
            Report rep = triangle_report(c, 100, 20240801UL);
            if (!rep.all_pass()) {
                ok = false;
                for (const auto& ch : rep.checks)
                    if (!ch.pass && detail.empty())
                        detail = triangle_case_name(c) + " " + ch.id;
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    line(6, ok,
         "triangle groups: elliptic data, minimality candidate audits, 100 seeded word reductions "
         "per case" +
             (detail.empty() ? "" : ": " + detail));
}

void criterion7() {
    bool ok = true;
    std::string detail;
    try {
        // seed solutions at height 50
        {
            FuchsianGroup g = triangle_group(TriangleCase::W10);
            auto sols = pell_solve(g.m, g.w, 50);
            Cyclo p1 = Cyclo::p1(12), one = Cyclo::rational(12, 1);
            bool found = false;
            for (const auto& s : sols)
                if (s.a == p1 + Cyclo::rational(12, 2) && s.c == one) found = true;
            if (!found) ok = false, detail = "W10 seed not found";
        }
        {
            FuchsianGroup g = triangle_group(TriangleCase::S10);
            auto sols = pell_solve(g.m, g.w, 50);
            Cyclo p1 = Cyclo::p1(10);
            Cyclo wa = Cyclo::rational(10, 4) * p1 + Cyclo::rational(10, 3);
            Cyclo wc = Cyclo::rational(10, 2) * p1;
            bool found = false;
            for (const auto& s : sols)
                if (s.a == wa && s.c == wc) found = true;
            if (!found) ok = false, detail = "S10 seed not found";
        }
        for (Series s : {Series::Wsharp, Series::Ssharp, Series::E3}) {
            Report rep = gz_report(s, 1, 50);
            if (!rep.all_pass()) {
                ok = false;
                for (const auto& c : rep.checks)
                    if (!c.pass && detail.empty()) detail = series_name(s) + " " + c.id;
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    line(7, ok,
         "Pell seeds at height 50; lifts divisible; three distinct non-monodromy automorphisms "
         "for W#_{1,12}, S#_{1,10}, E_{3,18}" +
             (detail.empty() ? "" : ": " + detail));
}

void criterion8() {
    bool ok = true;
    std::string detail;
    try {
        for (const auto& inst : g_instances) {
            Spectrum sp = spectrum_from_charpoly(inst.spec);
            size_t mu = sp.size();
            bool extremes;
            if (inst.spec.p == 0)
                extremes = sp[0] == Rat(-1, inst.spec.m) && sp[1] == Rat(1, inst.spec.m) &&
                           sp[mu - 2] == 1 - Rat(1, inst.spec.m) &&
                           sp[mu - 1] == 1 + Rat(1, inst.spec.m);
            else
                extremes = sp[0] == Rat(-1, inst.spec.m) && sp[1] == Rat(1, inst.spec.m2) &&
                           sp[mu - 2] == 1 - Rat(1, inst.spec.m2) &&
                           sp[mu - 1] == 1 + Rat(1, inst.spec.m);
            if (!spectrum_ok(sp) || !extremes || static_cast<long>(mu) != inst.spec.mu) {
                ok = false;
                if (detail.empty()) detail = inst.spec.id;
            }
        }
        for (const auto& q : quadrangle_catalog())
            if (spectrum_from_charpoly(q) != spectrum_from_weights(*q.weights)) {
                ok = false;
                if (detail.empty()) detail = q.id + " oracle disagreement";
            }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    line(8, ok,
         "spectra: extremes (-1/m, 1/m2, 1-1/m2, 1+1/m), symmetry, weights-vs-charpoly "
         "equivalence" +
             (detail.empty() ? "" : ": " + detail));
}

void criterion9() {
    bool ok = true;
    std::string detail;
    try {
        for (const auto& inst : g_instances)
            for (const auto& bj : inst.spec.b) {
                std::set<long> orders(bj.begin(), bj.end());
                if (!order_chain_hypothesis(orders).has_value()) {
                    ok = false;
                    if (detail.empty()) detail = inst.spec.id + " Ord set";
                }
            }
        std::mt19937_64 rng(20240801UL);
        std::uniform_int_distribution<long> idx(1, 30), len(1, 5);
        for (int t = 0; t < 100; ++t) {
            std::multiset<long> f;
            long n = len(rng);
            for (long i = 0; i < n; ++i) f.insert(idx(rng));
            Int v = product_of_cyclotomics(f)(Int(1));
            Parity want = (v % 2 == 0) ? Parity::Even : Parity::Odd;
            if (phi_product_parity(f) != want) {
                ok = false;
                if (detail.empty()) detail = "parity mismatch";
            }
        }
        // decompose_automorphism roundtrips on gz outputs are asserted in
        // gz_report (criterion 7); re-run one case here explicitly
        Report rep = gz_report(Series::Ssharp, 1, 50);
        bool rt = false;
        for (const auto& c : rep.checks)
            if (c.id == "decomposition_roundtrip" && c.pass) rt = true;
        if (!rt) {
            ok = false;
            if (detail.empty()) detail = "gz roundtrip";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    line(9, ok,
         "structural lemmas: order-chain hypothesis on all block Ord sets, parity oracle, "
         "automorphism decomposition roundtrip" +
             (detail.empty() ? "" : ": " + detail));
}

void criterion10() {
    bool ok = true;
    std::string detail;
    try {
        // S (x) [1] = S on catalog Stokes matrices
        for (Series s : {Series::Wsharp, Series::Q2}) {
            StokesMatrix st = stokes_matrix(family_spec(s, 1));
            if (!(st.tensor(StokesMatrix(1)).matrix() == st.matrix() &&
                  StokesMatrix(1).tensor(st).matrix() == st.matrix())) {
                ok = false;
                detail = "tensor unit";
            }
        }
        // suspension: L fixed, eigenvalues negated (angle shift by 1/2)
        for (Series s : {Series::Ssharp, Series::E3}) {
            FamilySpec spec = family_spec(s, 1);
            SeifertLattice lat = family_lattice(spec);
            SeifertLattice su = suspend(lat);
            if (!(su.L == lat.L)) ok = false, detail = "suspension L";
            auto f1 = factor_into_cyclotomics(char_poly(lat.M));
            auto f2 = factor_into_cyclotomics(char_poly(su.M));
            if (!f1 || !f2) {
                ok = false;
                detail = "suspension factorization";
            } else {
                std::multiset<Rat> a1, a2;
                for (long n : *f1)
                    for (long k = 0; k < n; ++k)
                        if (n == 1 ? k == 0 : gcd_long(k, n) == 1) {
                            Rat ang = Rat(k, n) + Rat(1, 2);
                            if (ang >= 1) ang -= 1;
                            ang.canonicalize();
                            a1.insert(ang);
                        }
                for (long n : *f2)
                    for (long k = 0; k < n; ++k)
                        if (n == 1 ? k == 0 : gcd_long(k, n) == 1) a2.insert(Rat(k, n));
                if (a1 != a2) ok = false, detail = "suspension eigenvalues";
            }
            SeifertLattice back = suspend(su);
            if (!(back.M == lat.M && back.I == lat.I)) ok = false, detail = "double suspension";
        }
        // A2 (x) A2 via the brute-force pairwise product oracle; the fixed
        // surface convention puts the tensor lattice one suspension away
        {
            StokesMatrix a2(2);
            a2.at(0, 1) = -1;
            SeifertLattice lat = suspend(lattice_from_stokes(a2.tensor(a2)));
            auto f = factor_into_cyclotomics(char_poly(lat.M));
            std::multiset<Rat> got;
            if (f)
                for (long n : *f)
                    for (long k = 0; k < n; ++k)
                        if (n == 1 ? k == 0 : gcd_long(k, n) == 1) got.insert(Rat(k, n));
            std::multiset<Rat> want;
            for (long a = 1; a <= 2; ++a)
                for (long b = 1; b <= 2; ++b) {
                    Rat sum = Rat(a, 3) + Rat(b, 3);
                    if (sum >= 1) sum -= 1;
                    sum.canonicalize();
                    want.insert(sum);
                }
            if (got != want) ok = false, detail = "A2 tensor products";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    line(10, ok,
         "Thom-Sebastiani tensor unit, suspension invariance and eigenvalue negation, pairwise "
         "product oracle" +
             (detail.empty() ? "" : ": " + detail));
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (g_failed) {
        std::printf("%d criterion(s) failed\n", g_failed);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
