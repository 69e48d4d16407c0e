#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "mlk/families.hpp"
#include "mlk/lattice.hpp"

using namespace mlk;

namespace {

StokesMatrix a2_chain() {
    StokesMatrix s(2);
    s.at(0, 1) = -1;
    return s;
}

// roots of unity as exact angle fractions k/n for an eigenvalue multiset
std::multiset<Rat> eigenvalue_angles(const IntPoly& cp) {
    auto f = factor_into_cyclotomics(cp);
    REQUIRE(f.has_value());
    std::multiset<Rat> out;
    for (long n : *f)
        for (long k = 0; k < n; ++k)
            if (gcd_long(k, n) == 1 || (n == 1 && k == 0)) out.insert(Rat(k, n));
    return out;
}

}  // namespace

TEST_CASE("A1 lattice") {
    StokesMatrix s(1);
    SeifertLattice lat = lattice_from_stokes(s);
    CHECK(lat.L.at(0, 0) == 1);
    CHECK(lat.M.at(0, 0) == -1);
    CHECK(lat.I.at(0, 0) == -2);
}

TEST_CASE("A2 lattice") {
    SeifertLattice lat = lattice_from_stokes(a2_chain());
    CHECK(char_poly(lat.M) == cyclotomic_poly(3));
    CHECK(monodromy_from_reflections(a2_chain()) == lat.M);
}

TEST_CASE("non-quasiunipotent Stokes data is rejected") {
    // this matrix gives a monodromy whose char poly has a root off the unit
    // circle, so no product of cyclotomics can match it
    StokesMatrix s(2);
    s.at(0, 1) = -3;
    CHECK_THROWS_AS(lattice_from_stokes(s), error);
}

TEST_CASE("invariants on family instances") {
    for (auto s : {Series::Ssharp, Series::Q2}) {
        FamilySpec spec = family_spec(s, 2);
        SeifertLattice lat = family_lattice(spec);
        Int dl = det(lat.L);
        CHECK((dl == 1 || dl == -1));
        CHECK(lat.M.transposed() * lat.L == -lat.L.transposed());
        CHECK(lat.M.transposed() * lat.L * lat.M == lat.L);
        CHECK(lat.I == lat.I.transposed());
        for (long i = 0; i < lat.rank; ++i) CHECK(lat.I.at(i, i) == -2);
    }
}

TEST_CASE("reflection product equals the Seifert-relation monodromy") {
    // explicit small cases plus random Stokes matrices (rank <= 6)
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int t = 0; t < 100; ++t) {
        long n = 1 + static_cast<long>(rng() % 6);
        StokesMatrix s(n);
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j) s.at(i, j) = entry(rng);
        // algebraic route M = -S^{-1} S^T without the quasiunipotence checks
        auto inv = rational_inverse(s.matrix());
        REQUIRE(inv.has_value());
        REQUIRE((inv->den == 1 || inv->den == -1));
        IntMat sinv = inv->den == 1 ? inv->num : -inv->num;
        IntMat m_alg = -(sinv * s.matrix().transposed());
        CHECK(monodromy_from_reflections(s) == m_alg);
    }
    // W#_{1,1} (odd parity) action-list instance
    FamilySpec spec = family_spec(Series::Wsharp, 1);
    CHECK(monodromy_from_reflections(stokes_matrix(spec)) == family_lattice(spec).M);
}

TEST_CASE("eigen sublattices") {
    FamilySpec spec = family_spec(Series::Ssharp, 2);
    SeifertLattice lat = family_lattice(spec);
    // full characteristic polynomial gives the whole lattice
    IntMat full = eigen_sublattice(lat, char_poly(lat.M));
    CHECK(full.rows() == lat.rank);
    CHECK(saturation_index(full) == 1);
    // gamma_1 = Phi_10(M)(e_8) generates (B_1)_{Phi_2} = 2e1+e2-e4-e5-e6+e8
    std::vector<Int> beta = spec.betas[0];
    std::vector<Int> g1(lat.rank, Int(0));
    {
        const IntPoly& phi10 = cyclotomic_poly(10);
        std::vector<Int> cur = beta;
        for (int i = 0; i <= phi10.degree(); ++i) {
            if (i > 0) cur = lat.M * cur;
            if (phi10.coeff(i) != 0)
                for (long r = 0; r < lat.rank; ++r) g1[r] += phi10.coeff(i) * cur[r];
        }
    }
    std::vector<Int> expect(lat.rank, Int(0));
    expect[0] = 2;
    expect[1] = 1;
    expect[3] = -1;
    expect[4] = -1;
    expect[5] = -1;
    expect[7] = 1;
    CHECK(g1 == expect);
    CHECK(lat.M * g1 == std::vector<Int>{[&] {
              std::vector<Int> neg(lat.rank);
              for (long i = 0; i < lat.rank; ++i) neg[i] = -g1[i];
              return neg;
          }()});
    // W#_{1,12}: the Phi_12 eigenlattice has rank 8, is primitive,
    // monodromy invariant, and killed by Phi_12(M)
    FamilySpec w12 = family_spec(Series::Wsharp, 12);
    SeifertLattice lw = family_lattice(w12);
    IntMat sub = eigen_sublattice(lw, cyclotomic_poly(12));
    CHECK(sub.rows() == 8);
    CHECK(saturation_index(sub) == 1);
    IntMat killer = poly_at_matrix(cyclotomic_poly(12), lw.M);
    for (long i = 0; i < sub.rows(); ++i) {
        std::vector<Int> v(lw.rank);
        for (long j = 0; j < lw.rank; ++j) v[j] = sub.at(i, j);
        std::vector<Int> kv = killer * v;
        CHECK(std::all_of(kv.begin(), kv.end(), [](const Int& x) { return x == 0; }));
        std::vector<Int> mv = lw.M * v;
        auto c = coords_in_basis(sub, mv);
        REQUIRE(c.has_value());
        for (const auto& x : *c) CHECK(x.get_den() == 1);
    }
    CHECK_THROWS_AS(eigen_sublattice(lat, cyclotomic_poly(7)), error);
}

TEST_CASE("saturation index examples") {
    CHECK(saturation_index(IntMat::identity(2)) == 1);
    IntMat twice(2, 2);
    twice.at(0, 0) = 2;
    twice.at(1, 1) = 2;
    CHECK(saturation_index(twice) == 4);
    // B1 + B2 inside Ml for E_{3,1} has index 2
    FamilySpec e31 = family_spec(Series::E3, 1);
    SeifertLattice lat = family_lattice(e31);
    std::vector<std::vector<Int>> rows;
    for (const auto& beta : e31.betas) {
        std::vector<Int> cur = beta;
        for (int guard = 0; guard < lat.rank; ++guard) {
            rows.push_back(cur);
            cur = lat.M * cur;
            IntMat b(static_cast<long>(rows.size()), lat.rank);
            for (size_t i = 0; i < rows.size(); ++i)
                for (long j = 0; j < lat.rank; ++j) b.at(static_cast<long>(i), j) = rows[i][j];
            if (coords_in_basis(b, cur).has_value()) break;
        }
    }
    IntMat stacked(static_cast<long>(rows.size()), lat.rank);
    for (size_t i = 0; i < rows.size(); ++i)
        for (long j = 0; j < lat.rank; ++j) stacked.at(static_cast<long>(i), j) = rows[i][j];
    REQUIRE(stacked.rows() == lat.rank);
    CHECK(abs(det(stacked)) == 2);
}

TEST_CASE("form automorphisms") {
    FamilySpec spec = family_spec(Series::Wsharp, 1);
    SeifertLattice lat = family_lattice(spec);
    CHECK(is_form_automorphism(lat, lat.M));
    CHECK(is_form_automorphism(lat, -IntMat::identity(lat.rank)));
    // automorphisms commute with M and preserve I
    CHECK(lat.M.transposed() * lat.I * lat.M == lat.I);
    // an elementary transvection breaks L on the A2 lattice
    SeifertLattice a2 = lattice_from_stokes(a2_chain());
    IntMat t = IntMat::identity(2);
    t.at(0, 1) = 1;
    CHECK(!is_form_automorphism(a2, t));
}

TEST_CASE("Thom-Sebastiani Stokes tensor") {
    StokesMatrix one(1);
    StokesMatrix a2 = a2_chain();
    CHECK(a2.tensor(one).matrix() == a2.matrix());
    CHECK(one.tensor(a2).matrix() == a2.matrix());
    // A2 (x) A2: within the fixed surface convention, the tensor lattice is
    // a suspension-class representative, so one suspension aligns its
    // monodromy with the pairwise eigenvalue products
    StokesMatrix tt = a2.tensor(a2);
    SeifertLattice lat = suspend(lattice_from_stokes(tt));
    std::multiset<Rat> got = eigenvalue_angles(char_poly(lat.M));
    std::multiset<Rat> want;
    for (long a = 1; a <= 2; ++a)
        for (long b = 1; b <= 2; ++b) {
            Rat sum = Rat(a, 3) + Rat(b, 3);
            if (sum >= 1) sum -= 1;
            sum.canonicalize();
            want.insert(sum);
        }
    CHECK(got == want);
}

TEST_CASE("suspension") {
    SeifertLattice a2 = lattice_from_stokes(a2_chain());
    SeifertLattice s = suspend(a2);
    CHECK(s.L == a2.L);
    CHECK(s.M == -a2.M);
    // eigenvalues move from primitive cube roots to primitive sixth roots
    CHECK(char_poly(s.M) == cyclotomic_poly(6));
    SeifertLattice ss = suspend(s);
    CHECK(ss.M == a2.M);
    CHECK(ss.I == a2.I);
    // the A1 monodromy flips sign under one suspension
    SeifertLattice a1 = lattice_from_stokes(StokesMatrix(1));
    CHECK(a1.M.at(0, 0) == -1);
    CHECK(suspend(a1).M.at(0, 0) == 1);
}
