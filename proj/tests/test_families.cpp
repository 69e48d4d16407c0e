#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "mlk/catalog_io.hpp"
#include "mlk/spectra.hpp"
#include "mlk/verify.hpp"

using namespace mlk;

TEST_CASE("catalog invariants") {
    FamilySpec w1 = family_spec(Series::Wsharp, 7);
    CHECK(w1.mu == 22);
    CHECK(w1.m == 12);
    CHECK(w1.m2 == 19);
    CHECK(w1.r_I == 1);
    FamilySpec z = family_spec(Series::Z1, 3);
    REQUIRE(z.betas.size() == 3);
    // beta_3 = e_3 - e_4 - e_9
    std::vector<Int> b3(z.mu, Int(0));
    b3[2] = 1;
    b3[3] = -1;
    b3[8] = -1;
    CHECK(z.betas[2] == b3);
    FamilySpec q0 = family_spec(Series::Q2, 0);
    CHECK(q0.mu == 14);
    CHECK(q0.b[1] == std::multiset<long>{4, 12});
    CHECK(q0.triangle.has_value());
    FamilySpec u0 = family_spec(Series::U1, 0);
    CHECK(u0.mu == 14);
    // expected values are internally consistent: sum deg b_j = mu, m2 = m + rI p
    for (auto s : {Series::Wsharp, Series::Ssharp, Series::U1, Series::E3, Series::Z1,
                   Series::Q2, Series::W1, Series::S1}) {
        for (long p = 1; p <= 6; ++p) {
            FamilySpec f = family_spec(s, p);
            long deg = 0;
            for (const auto& b : f.b) deg += product_of_cyclotomics(b).degree();
            CHECK(deg == f.mu);
            CHECK(f.m2 == f.m + f.r_I * f.p);
        }
    }
    CHECK_THROWS_AS(family_spec(Series::W1, 0), error);
}

TEST_CASE("action lists reproduce the monodromy") {
    // both parities plus the quadrangle members
    for (auto s : {Series::Wsharp, Series::Ssharp, Series::U1, Series::E3, Series::Z1,
                   Series::Q2, Series::W1, Series::S1}) {
        for (long p : {1L, 2L}) {
            FamilySpec f = family_spec(s, p);
            CHECK_NOTHROW(family_lattice(f));
        }
    }
    for (const auto& q : quadrangle_catalog()) CHECK_NOTHROW(family_lattice(q));
    // explicit spot values
    {
        FamilySpec f = family_spec(Series::Ssharp, 2);
        SeifertLattice lat = family_lattice(f);
        // M(e_8) = -e_3 - e_8
        CHECK(lat.M.at(2, 7) == -1);
        CHECK(lat.M.at(7, 7) == -1);
        // M(e_9) = e_10
        CHECK(lat.M.at(9, 8) == 1);
    }
    {
        FamilySpec f = family_spec(Series::E3, 1);
        SeifertLattice lat = family_lattice(f);
        // M(e_9) = e_1 + e_2 + e_10
        CHECK(lat.M.at(0, 8) == 1);
        CHECK(lat.M.at(1, 8) == 1);
        CHECK(lat.M.at(9, 8) == 1);
    }
}

TEST_CASE("catalog JSON roundtrip") {
    std::vector<FamilySpec> entries = {family_spec(Series::E3, 2), family_spec(Series::Q2, 0)};
    std::string text = catalog_to_json(entries);
    auto parsed = catalog_from_json(text);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].id == entries[0].id);
    CHECK(parsed[0].edges == entries[0].edges);
    CHECK(parsed[0].betas == entries[0].betas);
    CHECK(parsed[1].weights.has_value());
    CHECK((*parsed[1].weights)[2] == Rat(5, 12));
    CHECK(catalog_find(parsed, Series::E3, 2) != nullptr);
    CHECK(catalog_find(parsed, Series::E3, 3) == nullptr);
    // the re-ingested entry builds and verifies
    CHECK_NOTHROW(family_lattice(parsed[0]));
}

TEST_CASE("spectrum from weights") {
    Spectrum sp = spectrum_from_weights({Rat(1, 3), Rat(1, 2), Rat(1, 2)});
    REQUIRE(sp.size() == 2);
    CHECK(sp[0] == Rat(1, 3));
    CHECK(sp[1] == Rat(2, 3));
    Spectrum w0 = spectrum_from_weights({Rat(1, 4), Rat(1, 6), Rat(1, 2)});
    CHECK(w0.front() == Rat(-1, 12));
    CHECK(spectrum_ok(w0));
    CHECK_THROWS_AS(spectrum_from_weights({Rat(1, 2), Rat(1, 2), Rat(2, 3)}), error);
}

TEST_CASE("spectrum from the characteristic polynomial") {
    Spectrum w11 = spectrum_from_charpoly(family_spec(Series::Wsharp, 1));
    CHECK(w11.front() == Rat(-1, 12));
    CHECK(w11[1] == Rat(1, 13));
    CHECK(spectrum_ok(w11));
    Spectrum z0 = spectrum_from_charpoly(family_spec(Series::Z1, 0));
    CHECK(z0.front() == Rat(-1, 14));
    CHECK(z0[1] == Rat(1, 14));
    // oracle equivalence on the quadrangle families
    for (const auto& q : quadrangle_catalog())
        CHECK(spectrum_from_charpoly(q) == spectrum_from_weights(*q.weights));
}

TEST_CASE("hypergeometric parameters") {
    auto w10 = hypergeom_params(12, 12, 6);
    CHECK(w10[0] == Rat(1, 2));
    CHECK(w10[1] == Rat(1, 3));
    CHECK(w10[2] == Rat(11, 12));
    auto q20 = hypergeom_params(6, 6, 6);
    CHECK(q20[0] == Rat(5, 12));
    CHECK(q20[1] == Rat(1, 4));
    CHECK(q20[2] == Rat(5, 6));
    // roundtrip
    for (const auto& q : quadrangle_catalog()) {
        auto [m0, m1, minf] = *q.triangle;
        auto [a, b, c] = hypergeom_params(m0, m1, minf);
        CHECK(1 - c == Rat(1, m0));
        CHECK(c - a - b == Rat(1, m1));
        CHECK(a - b == Rat(1, minf));
    }
    // table of all six families
    std::map<std::string, std::array<Rat, 3>> expect = {
        {"W1_0", {Rat(1, 2), Rat(1, 3), Rat(11, 12)}},
        {"S1_0", {Rat(1, 2), Rat(3, 10), Rat(9, 10)}},
        {"U1_0", {Rat(4, 9), Rat(1, 3), Rat(8, 9)}},
        {"E3_0", {Rat(4, 9), Rat(1, 3), Rat(8, 9)}},
        {"Z1_0", {Rat(3, 7), Rat(2, 7), Rat(6, 7)}},
        {"Q2_0", {Rat(5, 12), Rat(1, 4), Rat(5, 6)}},
    };
    for (const auto& q : quadrangle_catalog()) {
        auto got = hypergeom_params((*q.triangle)[0], (*q.triangle)[1], (*q.triangle)[2]);
        CHECK(got == expect.at(q.id));
    }
}

TEST_CASE("j invariant") {
    CHECK(j_invariant(Rat(-1)) == Rat(1));
    CHECK_THROWS_AS(j_invariant(Rat(0)), error);
    CHECK_THROWS_AS(j_invariant(Rat(1)), error);
    // exact zero at the sixth root of unity (root of t^2 - t + 1)
    CHECK(j_invariant(Cyclo::zeta_power(6, 1)).is_zero());
    // invariance under the G3 orbit of random rational points
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    int tested = 0;
    while (tested < 50) {
        Rat t(num(rng), den(rng));
        t.canonicalize();
        if (t == 0 || t == 1) continue;
        ++tested;
        Rat j = j_invariant(t);
        for (const MoebiusWord& g :
             {MoebiusWord{{1}}, MoebiusWord{{2}}, MoebiusWord{{1, 2}}, MoebiusWord{{2, 1}},
              MoebiusWord{{1, 2, 1}}}) {
            Rat tg = moebius_apply(g, t);
            if (tg == 0 || tg == 1) continue;
            CHECK(j_invariant(tg) == j);
        }
    }
}

TEST_CASE("kappa cocycle") {
    FamilySpec e30 = family_spec(Series::E3, 0);
    FamilySpec s10 = family_spec(Series::Ssharp, 0);
    FamilySpec u10 = family_spec(Series::U1, 0);
    FamilySpec q20 = family_spec(Series::Q2, 0);
    Rat t(3, 7);
    // generator values from the table
    CHECK(kappa(s10, MoebiusWord{{1}}, t) == Rat(-1));
    CHECK(kappa(family_spec(Series::Wsharp, 0), MoebiusWord{{1}}, t) == Rat(1));
    {
        Rat tt = Rat(4, 7) / Rat(3, 7);  // (1 - t)/t
        Rat want(1);
        for (int i = 0; i < 18; ++i) want *= tt;
        CHECK(kappa(e30, MoebiusWord{{1}}, t) == want);
    }
    {
        Rat want(1);
        for (int i = 0; i < 12; ++i) want /= t;
        CHECK(kappa(e30, MoebiusWord{{2}}, t) == want);
    }
    CHECK(kappa(u10, MoebiusWord{{2}}, t) == -Rat(343, 27) * Rat(1));  // -t^-3
    CHECK(kappa(q20, MoebiusWord{{2}}, t) == Rat(27, 343));
    CHECK(kappa(e30, MoebiusWord{{}}, t) == Rat(1));
    // the order-2 families reject s2 words
    CHECK_THROWS_AS(kappa(s10, MoebiusWord{{2}}, t), error);
    // cocycle well-definedness: S3 relations at random points
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<long> num(2, 30), den(1, 7);
    int tested = 0;
    while (tested < 20) {
        Rat x(num(rng), den(rng));
        x.canonicalize();
        if (x == 0 || x == 1) continue;
        ++tested;
        for (const auto& f : {e30, u10, q20}) {
            CHECK(kappa(f, MoebiusWord{{1, 1}}, x) == Rat(1));
            CHECK(kappa(f, MoebiusWord{{2, 2}}, x) == Rat(1));
            CHECK(kappa(f, MoebiusWord{{1, 2, 1, 2, 1, 2}}, x) == Rat(1));
            // same element, two factorizations: s1 s2 s1 = s2 s1 s2
            CHECK(moebius_apply(MoebiusWord{{1, 2, 1}}, x) ==
                  moebius_apply(MoebiusWord{{2, 1, 2}}, x));
            CHECK(kappa(f, MoebiusWord{{1, 2, 1}}, x) == kappa(f, MoebiusWord{{2, 1, 2}}, x));
        }
    }
}

TEST_CASE("family name parsing") {
    CHECK(parse_family("E3_1").id == "E3_1");
    CHECK(parse_family("Q2_0").id == "Q2_0");
    CHECK(parse_family("Z10").id == "Z1_0");
    CHECK(parse_family("W1_0").id == "W1_0");
    CHECK(parse_family("W1_0").series == Series::Wsharp);
    CHECK(parse_family("W_3").series == Series::W1);
    CHECK_THROWS_AS(parse_family("X9_1"), error);
}
