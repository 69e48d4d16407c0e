#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "mlk/linalg.hpp"

using namespace mlk;

namespace {

IntMat mat(long r, long c, std::initializer_list<long> vals) {
    IntMat m(r, c);
    auto it = vals.begin();
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) m.at(i, j) = *it++;
    return m;
}

}  // namespace

TEST_CASE("determinant and charpoly") {
    CHECK(det(mat(2, 2, {1, 2, 3, 4})) == -2);
    CHECK(det(IntMat::identity(5)) == 1);
    CHECK(char_poly(IntMat::identity(2)) == IntPoly({std::vector<Int>{1, -2, 1}}));
    IntMat a = mat(3, 3, {2, 1, 0, 0, 3, 1, 1, 0, 1});
    // det(tI - A) by cofactor expansion: t^3 - 6t^2 + 11t - 7
    CHECK(char_poly(a) == IntPoly({std::vector<Int>{-7, 11, -6, 1}}));
    CHECK(poly_at_matrix(char_poly(a), a).is_zero());  // Cayley-Hamilton
}

TEST_CASE("smith invariants and saturation") {
    CHECK(saturation_index(IntMat::identity(2)) == 1);
    CHECK(saturation_index(mat(2, 2, {2, 0, 0, 2})) == 4);
    CHECK(saturation_index(mat(1, 2, {2, 4})) == 2);
    CHECK(saturation_index(mat(2, 3, {1, 0, 0, 0, 3, 3})) == 3);
    auto inv = smith_invariants(mat(2, 2, {2, 4, 6, 8}));
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == 2);
    CHECK(inv[1] == 4);
    // random agreement: |det| = product of invariant factors
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int t = 0; t < 50; ++t) {
        IntMat m(4, 4);
        for (long i = 0; i < 4; ++i)
            for (long j = 0; j < 4; ++j) m.at(i, j) = d(rng);
        Int dd = abs(det(m));
        if (dd == 0) continue;
        Int prod(1);
        for (const auto& v : smith_invariants(m)) prod *= v;
        CHECK(prod == dd);
    }
}

TEST_CASE("kernel is saturated") {
    // kernel of [1 2 3] is rank 2 and primitive
    IntMat k = kernel_saturated(mat(1, 3, {1, 2, 3}));
    REQUIRE(k.rows() == 2);
    CHECK(saturation_index(k) == 1);
    for (long i = 0; i < 2; ++i)
        CHECK(k.at(i, 0) + 2 * k.at(i, 1) + 3 * k.at(i, 2) == 0);
    // scaled matrix has the same saturated kernel lattice
    IntMat k2 = kernel_saturated(mat(1, 3, {2, 4, 6}));
    CHECK(k2.rows() == 2);
    CHECK(lattice_index(k, k2) == 1);
}

TEST_CASE("lattice indices and membership") {
    IntMat zz = IntMat::identity(2);
    CHECK(lattice_index(zz, mat(2, 2, {2, 0, 0, 2})) == 4);
    CHECK(lattice_index(zz, mat(2, 2, {1, 1, 0, 1})) == 1);
    CHECK(lattice_contains(zz, mat(1, 2, {5, -3})));
    CHECK(!lattice_contains(mat(2, 2, {2, 0, 0, 2}), mat(1, 2, {1, 0})));
    auto c = coords_in_basis(mat(2, 3, {1, 0, 1, 0, 1, 1}), {Int(2), Int(3), Int(5)});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 2);
    CHECK((*c)[1] == 3);
    CHECK(!coords_in_basis(mat(1, 2, {1, 0}), {Int(0), Int(1)}).has_value());
}

TEST_CASE("rational inverse and kronecker") {
    IntMat a = mat(2, 2, {1, -1, 0, 1});
    auto inv = rational_inverse(a);
    REQUIRE(inv.has_value());
    IntMat prod = a * inv->num;
    CHECK(prod == mat(2, 2, {inv->den.get_si(), 0, 0, inv->den.get_si()}));
    CHECK(!rational_inverse(mat(2, 2, {1, 2, 2, 4})).has_value());
    IntMat kr = mat(2, 2, {1, 2, 0, 1}).kronecker(IntMat::identity(2));
    CHECK(kr.rows() == 4);
    CHECK(kr.at(0, 2) == 2);
    CHECK(kr.at(1, 3) == 2);
    CHECK(kr.at(0, 1) == 0);
}
