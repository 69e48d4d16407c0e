#include "mlk/verify.hpp"

#include <random>
#include <sstream>

namespace mlk {

std::string rat_str(const Rat& r) { return r.get_str(); }

std::string spectrum_str(const Spectrum& sp) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < sp.size(); ++i) os << (i ? "," : "") << sp[i].get_str();
    os << "]";
    return os.str();
}

std::string cyclo_str(const Cyclo& x) { return x.str(); }

long monodromy_order(const FamilySpec& spec) {
    long l = 1;
    for (const auto& bj : spec.b)
        for (long n : bj) l = l / gcd_long(l, n) * n;
    return l;
}

bool is_plus_minus_power(const SeifertLattice& lat, long order, const IntMat& g) {
    IntMat p = IntMat::identity(lat.rank);
    for (long k = 0; k < order; ++k) {
        if (g == p || g == -p) return true;
        p = lat.M * p;
    }
    return false;
}

Report verify_family_report(const FamilySpec& spec) {
    Report rep;
    rep.command = "verify-family " + spec.id;
    SeifertLattice lat;
    try {
        lat = family_lattice(spec);
    } catch (const std::exception& e) {
        rep.add("construction", false, "lattice consistent with the action list", e.what());
        return rep;
    }
    rep.add("construction", true, "lattice consistent with the action list", "ok",
            "Stokes -> (L, M, I), cross-checked against the action list");
    rep.add("mu", lat.rank == spec.mu, std::to_string(spec.mu), std::to_string(lat.rank));
    rep.add("char_poly", char_poly(lat.M) == spec.char_poly_expected(),
            spec.char_poly_expected().str(), char_poly(lat.M).str(),
            "product of the block polynomials");
    {
        long l = 1;  // order of the monodromy on B_2
        for (long n : spec.b[1]) l = l / gcd_long(l, n) * n;
        rep.add("m2", l == spec.m2, std::to_string(spec.m2), std::to_string(l),
                "order of the monodromy on B_2");
    }
    std::vector<IntPoly> expected_b;
    for (size_t j = 0; j < spec.b.size(); ++j) expected_b.push_back(spec.block_poly(j));
    Report orlik = verify_decomposition(lat, spec.betas, expected_b, Int(spec.r_I));
    rep.absorb(orlik, "orlik/");
    if (spec.p % spec.m == 0) {
        // Phi_m eigenlattice splitting
        try {
            const IntPoly& phim = cyclotomic_poly(spec.m);
            IntMat full = eigen_sublattice(lat, phim);
            auto block_eigen = [&](const std::vector<Int>& beta, const IntPoly& bj) {
                IntPoly cof = bj.div_exact(phim);
                std::vector<Int> gen(lat.rank, Int(0));
                std::vector<Int> cur = beta;
                for (int i = 0; i <= cof.degree(); ++i) {
                    if (i > 0) cur = lat.M * cur;
                    if (cof.coeff(i) != 0)
                        for (long r = 0; r < lat.rank; ++r) gen[r] += cof.coeff(i) * cur[r];
                }
                long d = phim.degree();
                IntMat basis(d, lat.rank);
                cur = gen;
                for (long t = 0; t < d; ++t) {
                    if (t > 0) cur = lat.M * cur;
                    for (long c = 0; c < lat.rank; ++c) basis.at(t, c) = cur[c];
                }
                return basis;
            };
            IntMat b1e = block_eigen(spec.betas[0], expected_b[0]);
            IntMat b2e = block_eigen(spec.betas[1], expected_b[1]);
            IntMat sum(b1e.rows() + b2e.rows(), lat.rank);
            for (long i = 0; i < b1e.rows(); ++i)
                for (long j = 0; j < lat.rank; ++j) sum.at(i, j) = b1e.at(i, j);
            for (long i = 0; i < b2e.rows(); ++i)
                for (long j = 0; j < lat.rank; ++j) sum.at(b1e.rows() + i, j) = b2e.at(i, j);
            bool ranks = (sum.rows() == full.rows());
            Int idx = ranks ? lattice_index(full, sum) : Int(0);
            rep.add("eigensplit_phi_m", ranks && idx == 1, "index 1 in Ml_{Phi_m}",
                    "index " + idx.get_str(),
                    "Ml_{Phi_m} = (B_1)_{Phi_m} + (B_2)_{Phi_m} as a direct sum");
        } catch (const std::exception& e) {
            rep.add("eigensplit_phi_m", false, "index 1 in Ml_{Phi_m}", e.what());
        }
    }
    return rep;
}

Report herm_table_report(Series s, long r) {
    Report rep;
    HermData hd = herm_data(s, r);
    long m = hd.m;
    rep.command = "herm-table " + hd.spec.id;
    for (long k = 1; k < m; ++k) {
        if (gcd_long(k, m) != 1) continue;
        std::string xi = "xi=zeta^" + std::to_string(k);
        EigenVector v1 = hd.v1(k), v2 = hd.v2(k);
        HermValue h11 = herm_pair(hd.lat, v1, v1);
        HermValue h22 = herm_pair(hd.lat, v2, v2);
        Cyclo h11c = h11_closed_form(s, k);
        Cyclo h22c = h22_closed_form(s, r, k);
        rep.add("h11_exact/" + xi, h11.u == h11c, cyclo_str(h11c), cyclo_str(h11.u),
                "exact value of h_xi(v1, v1)");
        rep.add("h22_exact/" + xi, h22.u == h22c, cyclo_str(h22c), cyclo_str(h22.u),
                "exact value of h_xi(v2, v2)");
        bool at_zeta = (k == 1 || k == m - 1);
        int s11 = herm_sign(h11);
        int s22 = herm_sign(h22);
        rep.add("h11_sign/" + xi, s11 == (at_zeta ? -1 : 1), at_zeta ? "-1" : "+1",
                std::to_string(s11), "definiteness pattern of h on the v1 line");
        rep.add("h22_sign/" + xi, s22 == 1, "+1", std::to_string(s22),
                "h_xi(v2, v2) > 0 for every primitive xi");
        Cyclo w = w_of_xi(hd, k);
        Cyclo wc = w_closed_form(s, r, k);
        rep.add("w_exact/" + xi, w == wc, cyclo_str(wc), cyclo_str(w),
                "w(xi) matches the closed form");
        int wsign = sign_at_embedding(w, 1);
        rep.add("w_sign/" + xi, wsign == (at_zeta ? 1 : -1), at_zeta ? "+1" : "-1",
                std::to_string(wsign), "w > 0 exactly at zeta and its conjugate");
        // L(v1, beta1) is a unit of Z[zeta]
        Cyclo lv(m);
        for (long i = 0; i < hd.lat.rank; ++i) {
            if (v1.coords[i].is_zero()) continue;
            for (long j = 0; j < hd.lat.rank; ++j) {
                if (hd.lat.L.at(i, j) == 0 || hd.b1.beta[j] == 0) continue;
                lv += v1.coords[i] * Cyclo::rational(m, Rat(hd.lat.L.at(i, j) * hd.b1.beta[j]));
            }
        }
        Rat nrm = field_norm_full(lv);
        rep.add("L_v1_beta1_unit/" + xi, nrm == 1 || nrm == -1, "+-1", rat_str(nrm),
                "L(v1, beta1) is a unit of Z[zeta]");
        // hermitian symmetry of the pairing h(v1, v2) vs h(v2, v1)
        HermValue h12 = herm_pair(hd.lat, v1, v2);
        HermValue h21 = herm_pair(hd.lat, v2, v1);
        // h(b,a) = conj(h(a,b)) given the sqrt(-xi) factor: u21 = -conj(u12) * xi^{-1}... check
        // via the definition instead: sqrt(-xi) u12 real conjugate symmetric means
        // u21 == conj(u12) * conj(sqrt)(...) ; easiest exact statement: both off-diagonal
        // values vanish by L-orthogonality of the blocks.
        rep.add("h12_zero/" + xi, h12.u.is_zero() && h21.u.is_zero(), "0",
                cyclo_str(h12.u) + " / " + cyclo_str(h21.u),
                "block orthogonality kills the mixed pairing");
    }
    return rep;
}

Report triangle_report(TriangleCase c, int nwords, unsigned long seed) {
    Report rep;
    rep.command = "triangle " + triangle_case_name(c);
    FuchsianGroup g = triangle_group(c);
    long m = g.m;
    Mat2 a1 = generator_a1(c), a2 = generator_a2(c);
    rep.add("w_sign_pattern", w_sign_pattern_ok(m, g.w), "w(zeta)>0, w(xi)<0 otherwise", "ok");
    rep.add("a1_member", gamma_membership(g, a1), "A1 in Gamma",
            gamma_membership(g, a1) ? "yes" : "no");
    rep.add("a2_member", gamma_membership(g, a2), "A2 in Gamma",
            gamma_membership(g, a2) ? "yes" : "no");
    // determinants per case
    Cyclo expected_det(m);
    switch (c) {
        case TriangleCase::W10: expected_det = Cyclo::rational(m, -1); break;
        case TriangleCase::S10: expected_det = -Cyclo::zeta_power(m, 1); break;
        case TriangleCase::E30U10: expected_det = Cyclo::rational(m, -1); break;
        case TriangleCase::Z10: expected_det = Cyclo::zeta_power(m, 3); break;
        case TriangleCase::Q20: expected_det = -Cyclo::zeta_power(m, 1); break;
    }
    rep.add("a2_det", a2.det() == expected_det, cyclo_str(expected_det), cyclo_str(a2.det()));
    // elliptic data
    EllipticData e1 = elliptic_data(g, a1);
    rep.add("a1_angle", e1.angle_turns == Rat(1, m) && e1.order == m,
            "1/" + std::to_string(m) + " of a turn, order " + std::to_string(m),
            e1.angle_turns.get_str() + ", order " + std::to_string(e1.order));
    EllipticData e2 = elliptic_data(g, a2);
    rep.add("a2_angle", e2.angle_turns == Rat(1, 2) && e2.order == 2 && a2.trace().is_zero(),
            "half turn, order 2, trace 0",
            e2.angle_turns.get_str() + ", order " + std::to_string(e2.order));
    Mat2 a12 = a1 * a2;
    EllipticData e3 = elliptic_data(g, a12);
    Rat exp_turns = (c == TriangleCase::W10)   ? Rat(-1, 12)
                    : (c == TriangleCase::S10) ? Rat(-1, 10)
                                               : Rat(-1, 3);
    rep.add("a1a2_angle", e3.angle_turns == exp_turns,
            exp_turns.get_str() + " of a turn", e3.angle_turns.get_str());
    // exact eigenvalue pair via trace/det identities
    {
        Cyclo tr = a12.trace(), dt = a12.det();
        Cyclo exp_tr(m), exp_dt(m);
        switch (c) {
            case TriangleCase::W10:
            case TriangleCase::S10:
                exp_tr = Cyclo::zeta_power(m, 4) + Cyclo::zeta_power(m, 3);
                exp_dt = Cyclo::zeta_power(m, 7);
                break;
            case TriangleCase::E30U10:
                exp_tr = Cyclo::zeta_power(m, 8) + Cyclo::zeta_power(m, 2);
                exp_dt = Cyclo::zeta_power(m, 10);
                break;
            case TriangleCase::Z10:
                // e^{+-2 pi i/6} zeta^2: trace zeta^2, det zeta^4
                exp_tr = Cyclo::zeta_power(m, 2);
                exp_dt = Cyclo::zeta_power(m, 4);
                break;
            case TriangleCase::Q20:
                exp_tr = Cyclo::zeta_power(m, 6) + Cyclo::zeta_power(m, 2);
                exp_dt = Cyclo::zeta_power(m, 8);
                break;
        }
        rep.add("a1a2_eigenvalues", tr == exp_tr && dt == exp_dt,
                "trace/det of the reference eigenvalue pair",
                tr == exp_tr && dt == exp_dt ? "match" : "differ");
    }
    auto type = triangle_type(c);
    std::multiset<long> got{e2.order, e3.order, e1.order};
    std::multiset<long> want{type[0], type[1], type[2]};
    {
        std::ostringstream w1, w2;
        for (long x : want) w1 << x << " ";
        for (long x : got) w2 << x << " ";
        rep.add("triangle_type", got == want, w1.str(), w2.str(),
                "elliptic orders generate the triangle type");
    }
    // minimality audit
    MinimalityAudit audit = minimality_audit(c);
    std::vector<std::vector<Rat>> expected_box;  // p1-coordinates of the reference candidates
    switch (c) {
        case TriangleCase::W10:
            expected_box = {{Rat(2), Rat(1)}, {Rat(4), Rat(2)}, {Rat(6), Rat(3)}};
            break;
        case TriangleCase::S10:
            expected_box = {{Rat(2), Rat(2)}, {Rat(2), Rat(3)}};
            break;
        default:
            break;
    }
    {
        std::vector<std::string> comp;
        for (const auto& f : audit.candidates) {
            auto pc = p1_coords(f);
            std::string s2;
            for (const auto& v : pc) s2 += v.get_str() + ",";
            comp.push_back(s2);
        }
        std::sort(comp.begin(), comp.end());
        bool all_present = true;
        for (const auto& e : expected_box) {
            Cyclo f = real_from_p1_coords(m, e);
            bool found = false;
            for (const auto& cand : audit.candidates)
                if (cand == f) found = true;
            all_present = all_present && found;
        }
        bool exact = (audit.candidates.size() == expected_box.size());
        // the S10 box carries one extra element 1 + p1 beyond the printed
        // list; it is excluded by the same norm argument (Norm(p1) = -1)
        bool s10_extra_ok = false;
        if (c == TriangleCase::S10 && audit.candidates.size() == 3) {
            Cyclo extra = real_from_p1_coords(m, {Rat(1), Rat(1)});
            int hits = 0;
            for (const auto& cand : audit.candidates)
                if (cand == extra) ++hits;
            s10_extra_ok = (hits == 1);
        }
        std::ostringstream actual;
        actual << audit.candidates.size() << " candidates";
        rep.add("minimality_candidates", all_present && (exact || s10_extra_ok),
                std::to_string(expected_box.size()) + " candidates (reference list)",
                actual.str(),
                c == TriangleCase::S10
                    ? "the box carries the reference candidates plus 1+p1, norm-excluded alike"
                    : "candidate box matches the reference list");
    }
    rep.add("minimality_all_excluded", audit.all_excluded,
            "Norm(f-1) not in Norm(w) * Z_{>=0}", audit.all_excluded ? "all excluded" : "gap",
            "norm condition excludes every candidate");
    rep.add("contraction_margin", audit.contraction_margin > 0, "> 0", std::to_string(audit.contraction_margin),
            "(sin pi/m)^2 + (1 - sqrt(1-|a2|^-2))^2 < |a2|^-2");
    // seeded random words
    std::mt19937_64 rng(seed);
    int reduced = 0;
    bool decreases = true;
    for (int t = 0; t < nwords; ++t) {
        GeneratorWord w;
        std::uniform_int_distribution<int> len(1, 12), letter(0, 2),
            a1exp(-static_cast<int>(m) + 1, static_cast<int>(m) - 1);
        int n = len(rng);
        for (int i = 0; i < n; ++i) {
            int l = letter(rng);
            if (l == 2) w.steps.push_back({0, true});
            else w.steps.push_back({l == 0 ? 1 : -1, false});
        }
        w.scalar = Cyclo::rational(m, 1);
        Mat2 a = evaluate_word(c, w);
        try {
            ReductionResult res = reduce_word(c, a);
            // strict decrease holds by construction inside reduce_word;
            // double-check the recorded |c|^2 trace
            for (size_t i = 1; i < res.c_norms.size(); ++i) {
                Cyclo diff = res.c_norms[i] - res.c_norms[i - 1];
                if (!diff.is_zero() && sign_at_embedding(diff, 1) >= 0) decreases = false;
            }
            ++reduced;
        } catch (const std::exception&) {
            decreases = false;
        }
    }
    rep.add("word_reduction", reduced == nwords && decreases,
            std::to_string(nwords) + " random words reduced",
            std::to_string(reduced) + " reduced",
            "every A2-step strictly decreases |c|");
    return rep;
}

Report pell_report(long m, const Cyclo& w, long height, std::vector<PellSolution>* out) {
    Report rep;
    rep.command = "pell m=" + std::to_string(m) + " height=" + std::to_string(height);
    std::vector<PellSolution> sols = pell_solve(m, w, height);
    Cyclo one = Cyclo::rational(m, 1);
    bool ident = true;
    for (const auto& s : sols)
        if (s.a * s.a - one != w * s.c * s.c) ident = false;
    rep.add("pell_identity", ident, "a^2 - 1 = w c^2 for every solution",
            ident ? "exact" : "violated");
    bool trivial = false, trivial_neg = false;
    for (const auto& s : sols) {
        if (s.c.is_zero() && s.a == one) trivial = true;
        if (s.c.is_zero() && s.a == -one) trivial_neg = true;
    }
    rep.add("contains_unit", trivial && trivial_neg, "(1,0) and (-1,0)",
            trivial && trivial_neg ? "present" : "missing");
    rep.add("count", true, "", std::to_string(sols.size()), "solutions at this height");
    if (out) *out = sols;
    return rep;
}

Report gz_report(Series s, long r, long height, std::vector<IntMat>* out_gs) {
    Report rep;
    HermData hd = herm_data(s, r);
    rep.command = "gz " + hd.spec.id;
    Cyclo w0 = gz_w0(hd);
    rep.add("w0_integral", w0.is_integral() && w0.is_real(), "w0 in Z[zeta] and real",
            cyclo_str(w0));
    std::vector<PellSolution> sols = pell_solve(hd.m, w0, height);
    PellSolution base{Cyclo(hd.m), Cyclo(hd.m)};
    bool have = false;
    for (const auto& sol : sols) {
        if (sol.c.is_zero()) continue;
        if (sign_at_embedding(sol.a, 1) <= 0) continue;
        if (!have) {
            base = sol;
            have = true;
        }
    }
    if (!have) {
        // fundamental solutions can sit far beyond any practical coordinate
        // box; sweep the sliver |a(xi)| <= 1 instead
        auto hunted = pell_seed_hunt(hd.m, w0, 100000000L, 1);
        if (!hunted.empty()) {
            base = hunted.front();
            have = true;
        }
    }
    rep.add("seed_solution", have, "a Pell solution with c != 0", have ? "found" : "none");
    if (!have) return rep;
    PellSolution l1 = pell_divisibility_lift(w0, base);
    PellSolution l2 = pell_divisibility_lift(w0, l1);
    PellSolution l3{l1.a, -l1.c};
    bool div_ok = divides_in_ring(w0, l1.a - Cyclo::rational(hd.m, 1)) &&
                  divides_in_ring(w0, l2.a - Cyclo::rational(hd.m, 1)) &&
                  divides_in_ring(w0, l3.a - Cyclo::rational(hd.m, 1));
    rep.add("lift_divisibility", div_ok, "w0 | a - 1 exactly", div_ok ? "holds" : "fails");
    std::vector<GzResult> gs;
    for (const auto& sol : {l1, l2, l3}) gs.push_back(gz_from_pell(hd, sol));
    long order = monodromy_order(hd.spec);
    bool distinct = !(gs[0].g == gs[1].g) && !(gs[0].g == gs[2].g) && !(gs[1].g == gs[2].g);
    rep.add("three_distinct", distinct, "3 pairwise distinct automorphisms",
            distinct ? "distinct" : "collision");
    bool all_auto = true, none_power = true, roundtrip = true;
    BlockDecomposition dec = block_decomposition(hd.lat, hd.spec.betas);
    for (const auto& gr : gs) {
        if (!is_form_automorphism(hd.lat, gr.g)) all_auto = false;
        if (is_plus_minus_power(hd.lat, order, gr.g)) none_power = false;
        AutomorphismDecomposition ad = decompose_automorphism(hd.lat, gr.g, dec);
        auto q = factor_off_identity(ad, dec, cyclotomic_poly(hd.m));
        if (!q) {
            roundtrip = false;
        } else {
            // the first 2x2 block of q must reproduce the construction's q_ij
            if ((*q)[0][0] != gr.q[0][0] || (*q)[0][1] != gr.q[0][1] ||
                (*q)[1][0] != gr.q[1][0] || (*q)[1][1] != gr.q[1][1])
                roundtrip = false;
        }
    }
    rep.add("form_automorphisms", all_auto, "each g preserves L", all_auto ? "yes" : "no");
    rep.add("outside_monodromy_powers", none_power, "each g outside {+-M^k}",
            none_power ? "yes" : "no");
    rep.add("decomposition_roundtrip", roundtrip, "q_ij recovered by the block decomposition",
            roundtrip ? "exact" : "mismatch");
    if (out_gs)
        for (const auto& gr : gs) out_gs->push_back(gr.g);
    return rep;
}

Report spectra_report(const FamilySpec& spec, const std::string& method, Spectrum* out) {
    Report rep;
    rep.command = "spectra " + spec.id + " method=" + method;
    Spectrum sc, sw;
    bool want_c = method == "charpoly" || method == "both";
    bool want_w = method == "weights" || method == "both";
    if (want_c) {
        sc = spectrum_from_charpoly(spec);
        rep.add("symmetry", spectrum_ok(sc), "alpha_i + alpha_{mu+1-i} = 1, range (-1,2)",
                spectrum_ok(sc) ? "holds" : "violated");
        bool extremes;
        size_t mu = sc.size();
        if (spec.p == 0) {
            extremes = sc[0] == Rat(-1, spec.m) && sc[1] == Rat(1, spec.m) &&
                       sc[mu - 2] == 1 - Rat(1, spec.m) && sc[mu - 1] == 1 + Rat(1, spec.m);
        } else {
            extremes = sc[0] == Rat(-1, spec.m) && sc[1] == Rat(1, spec.m2) &&
                       sc[mu - 2] == 1 - Rat(1, spec.m2) && sc[mu - 1] == 1 + Rat(1, spec.m);
        }
        rep.add("extremes", extremes,
                "(-1/m, 1/m2, 1-1/m2, 1+1/m)",
                "(" + sc[0].get_str() + ", " + sc[1].get_str() + ", " + sc[mu - 2].get_str() +
                    ", " + sc[mu - 1].get_str() + ")");
        if (out) *out = sc;
    }
    if (want_w) {
        if (!spec.weights) {
            rep.add("weights_available", false, "quadrangle family with weights", "none");
            return rep;
        }
        sw = spectrum_from_weights(*spec.weights);
        rep.add("weights_symmetry", spectrum_ok(sw), "symmetric", spectrum_ok(sw) ? "holds" : "violated");
        if (out && !want_c) *out = sw;
    }
    if (want_c && want_w)
        rep.add("methods_agree", sc == sw, spectrum_str(sc), spectrum_str(sw),
                "weights and charpoly spectra coincide");
    return rep;
}

}  // namespace mlk
