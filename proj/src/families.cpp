#include "mlk/families.hpp"

#include <algorithm>
#include <sstream>

namespace mlk {

namespace {

std::multiset<long> divisors_except_one(long n) {
    std::multiset<long> out;
    for (long d = 2; d <= n; ++d)
        if (n % d == 0) out.insert(d);
    return out;
}

// factor indices of t^k + 1 = prod { Phi_d : d | 2k, d does not divide k }
std::multiset<long> t_pow_plus_one_indices(long k) {
    std::multiset<long> out;
    for (long d = 1; d <= 2 * k; ++d)
        if ((2 * k) % d == 0 && k % d != 0) out.insert(d);
    return out;
}

using Edge = std::array<long, 3>;

void head_edges(std::vector<Edge>& e, bool sharp_style) {
    // common core on vertices 1..7; sharp_style adds the dotted 2-4 edge
    e.push_back({3, 7, -1});
    e.push_back({1, 2, -1});
    e.push_back({5, 6, -1});
    e.push_back({3, 6, -1});
    e.push_back({4, 6, -1});
    e.push_back({4, 7, -1});
    e.push_back({5, 7, -1});
    e.push_back({1, 6, -1});
    e.push_back({2, 5, 1});
    e.push_back({6, 7, 2});
    if (sharp_style) e.push_back({2, 4, 1});
}

void chain(std::vector<Edge>& e, long from, long to) {
    for (long j = from; j < to; ++j) e.push_back({j, j + 1, -1});
}

std::vector<Int> unit_vec(long mu, long i) {
    std::vector<Int> v(mu, Int(0));
    v[i - 1] = 1;
    return v;
}

}  // namespace

std::string series_name(Series s) {
    switch (s) {
        case Series::Wsharp: return "W#";
        case Series::Ssharp: return "S#";
        case Series::U1: return "U";
        case Series::E3: return "E3";
        case Series::Z1: return "Z1";
        case Series::Q2: return "Q2";
        case Series::W1: return "W";
        case Series::S1: return "S";
    }
    throw error("unknown series");
}

Series parse_series(const std::string& name) {
    std::string n;
    for (char c : name)
        if (c != '_' && c != ',' && c != ' ') n.push_back(c);
    if (n == "W#" || n == "Wsharp" || n == "W#1" || n == "Wsharp1") return Series::Wsharp;
    if (n == "S#" || n == "Ssharp" || n == "S#1" || n == "Ssharp1") return Series::Ssharp;
    if (n == "U" || n == "U1") return Series::U1;
    if (n == "E3" || n == "E31") return Series::E3;
    if (n == "Z1" || n == "Z") return Series::Z1;
    if (n == "Q2" || n == "Q") return Series::Q2;
    if (n == "W" || n == "W1") return Series::W1;
    if (n == "S" || n == "S1") return Series::S1;
    throw error("unknown series name: " + name);
}

IntPoly FamilySpec::char_poly_expected() const {
    IntPoly p = IntPoly::constant(1);
    for (const auto& idx : b) p = p * product_of_cyclotomics(idx);
    return p;
}

FamilySpec family_spec(Series s, long p) {
    if (p < 0) throw error("p must be >= 0");
    if (p == 0 && (s == Series::W1 || s == Series::S1))
        throw error("the p = 0 members of W_{1,p} and S_{1,p} live in the sharp series");
    FamilySpec f;
    f.series = s;
    f.p = p;
    long q2 = p / 2;            // floor: p = 2q (even) or p = 2q+1
    long qc = (p + 1) / 2;      // ceil, the q of "p = 2q or 2q-1"
    switch (s) {
        case Series::Wsharp: {
            f.mu = 15 + p;
            long r0 = (p % 2 == 0) ? 12 + q2 : 11 + qc;
            head_edges(f.edges, true);
            f.edges.push_back({4, 8, -1});
            chain(f.edges, 8, r0 - 1);
            f.edges.push_back({2, 8, -1});
            f.edges.push_back({5, r0, -1});
            f.edges.push_back({2, r0, -1});
            chain(f.edges, r0, f.mu);
            f.betas = {unit_vec(f.mu, 3), unit_vec(f.mu, 8)};
            f.b = {{12}, divisors_except_one(12 + p)};
            f.m = 12;
            f.r_I = 1;
            break;
        }
        case Series::Ssharp: {
            f.mu = 14 + p;
            long r0 = (p % 2 == 0) ? 12 + q2 : 11 + qc;
            head_edges(f.edges, true);
            f.edges.push_back({3, 8, -1});
            f.edges.push_back({4, 9, -1});
            chain(f.edges, 9, r0 - 1);
            f.edges.push_back({2, 9, -1});
            f.edges.push_back({5, r0, -1});
            f.edges.push_back({2, r0, -1});
            chain(f.edges, r0, f.mu);
            f.betas = {unit_vec(f.mu, 8), unit_vec(f.mu, 9)};
            f.b = {{10, 2}, divisors_except_one(10 + p)};
            f.m = 10;
            f.r_I = 1;
            break;
        }
        case Series::U1: {
            f.mu = 14 + p;
            long r0 = 12 + qc;
            head_edges(f.edges, true);
            f.edges.push_back({3, 8, -1});
            f.edges.push_back({8, 9, -1});
            f.edges.push_back({4, 10, -1});
            chain(f.edges, 10, 11 + qc);
            f.edges.push_back({2, 10, -1});
            f.edges.push_back({5, r0, -1});
            f.edges.push_back({2, r0, -1});
            chain(f.edges, r0, f.mu);
            f.betas = {unit_vec(f.mu, 8), unit_vec(f.mu, 10)};
            f.b = {{9}, divisors_except_one(9 + p)};
            f.m = 9;
            f.r_I = 1;
            break;
        }
        case Series::E3: {
            f.mu = 16 + p;
            head_edges(f.edges, false);
            f.edges.push_back({4, 8, -1});
            f.edges.push_back({5, 9, -1});
            f.edges.push_back({2, 10, -1});
            chain(f.edges, 9, f.mu);
            f.betas = {unit_vec(f.mu, 3), unit_vec(f.mu, 10)};
            f.b = {{18, 2}, t_pow_plus_one_indices(9 + p)};
            f.m = 18;
            f.r_I = 2;
            break;
        }
        case Series::Z1: {
            f.mu = 15 + p;
            head_edges(f.edges, false);
            f.edges.push_back({4, 8, -1});
            f.edges.push_back({8, 9, -1});
            f.edges.push_back({5, 10, -1});
            f.edges.push_back({2, 11, -1});
            chain(f.edges, 10, f.mu);
            std::vector<Int> beta3 = unit_vec(f.mu, 3);
            beta3[3] = -1;  // e3 - e4 - e9
            beta3[8] = -1;
            f.betas = {unit_vec(f.mu, 8), unit_vec(f.mu, 11), beta3};
            f.b = {{14, 2}, t_pow_plus_one_indices(7 + p), {2}};
            f.m = 14;
            f.r_I = 2;
            break;
        }
        case Series::Q2: {
            f.mu = 14 + p;
            head_edges(f.edges, false);
            f.edges.push_back({3, 8, -1});
            f.edges.push_back({4, 9, -1});
            f.edges.push_back({5, 10, -1});
            f.edges.push_back({2, 11, -1});
            chain(f.edges, 10, f.mu);
            f.betas = {unit_vec(f.mu, 8), unit_vec(f.mu, 11)};
            f.b = {{12, 4, 3}, t_pow_plus_one_indices(6 + p)};
            f.m = 12;
            f.r_I = 2;
            break;
        }
        case Series::W1: {
            f.mu = 15 + p;
            head_edges(f.edges, true);
            f.edges.push_back({4, 8, -1});
            chain(f.edges, 8, 11);
            f.edges.push_back({2, 8, -1});
            f.edges.push_back({5, 12, -1});
            chain(f.edges, 12, 15);
            f.edges.push_back({2, 12, -1});
            f.edges.push_back({2, 16, -1});
            chain(f.edges, 16, f.mu);
            std::vector<Int> beta1 = unit_vec(f.mu, 3);
            beta1[8] = 1;  // e3 + e9 + e11
            beta1[10] = 1;
            f.betas = {beta1, unit_vec(f.mu, 16)};
            f.b = {{12, 6, 3, 2}, t_pow_plus_one_indices(6 + p)};
            f.m = 12;
            f.r_I = 2;
            break;
        }
        case Series::S1: {
            f.mu = 14 + p;
            head_edges(f.edges, true);
            f.edges.push_back({3, 8, -1});
            f.edges.push_back({4, 9, -1});
            chain(f.edges, 9, 11);
            f.edges.push_back({2, 9, -1});
            f.edges.push_back({5, 12, -1});
            chain(f.edges, 12, 14);
            f.edges.push_back({2, 12, -1});
            f.edges.push_back({2, 15, -1});
            chain(f.edges, 15, f.mu);
            std::vector<Int> beta1(f.mu, Int(0));
            beta1[7] = -1;  // -e8 + e13
            beta1[12] = 1;
            f.betas = {beta1, unit_vec(f.mu, 15)};
            f.b = {{10, 5, 2}, t_pow_plus_one_indices(5 + p)};
            f.m = 10;
            f.r_I = 2;
            break;
        }
    }
    f.m2 = f.m + f.r_I * p;
    std::ostringstream id;
    id << series_name(s) << "_" << p;
    f.id = id.str();
    if (p == 0) {
        // quadrangle layer: weights and triangle types (m_1 = m_0)
        switch (s) {
            case Series::Wsharp:
                f.weights = {Rat(1, 4), Rat(1, 6), Rat(1, 2)};
                f.triangle = {12, 12, 6};
                f.id = "W1_0";
                break;
            case Series::Ssharp:
                f.weights = {Rat(3, 10), Rat(1, 5), Rat(2, 5)};
                f.triangle = {10, 10, 5};
                f.id = "S1_0";
                break;
            case Series::U1:
                f.weights = {Rat(1, 3), Rat(2, 9), Rat(1, 3)};
                f.triangle = {9, 9, 9};
                f.id = "U1_0";
                break;
            case Series::E3:
                f.weights = {Rat(1, 3), Rat(1, 9), Rat(1, 2)};
                f.triangle = {9, 9, 9};
                f.id = "E3_0";
                break;
            case Series::Z1:
                f.weights = {Rat(2, 7), Rat(1, 7), Rat(1, 2)};
                f.triangle = {7, 7, 7};
                f.id = "Z1_0";
                break;
            case Series::Q2:
                f.weights = {Rat(1, 3), Rat(1, 6), Rat(5, 12)};
                f.triangle = {6, 6, 6};
                f.id = "Q2_0";
                break;
            default:
                break;
        }
    }
    return f;
}

std::vector<FamilySpec> quadrangle_catalog() {
    return {family_spec(Series::Wsharp, 0), family_spec(Series::Ssharp, 0),
            family_spec(Series::U1, 0),     family_spec(Series::E3, 0),
            family_spec(Series::Z1, 0),     family_spec(Series::Q2, 0)};
}

namespace {

struct ImageBuilder {
    long mu;
    std::vector<std::vector<Int>> img;
    explicit ImageBuilder(long mu_) : mu(mu_), img(mu_, std::vector<Int>(mu_, Int(0))) {}
    // set image of e_i to sum of c_j * e_j given as pairs (j, c)
    void set(long i, std::initializer_list<std::pair<long, long>> terms) {
        for (auto [j, c] : terms) img[i - 1][j - 1] += c;
    }
    void add(long i, long j, long c) { img[i - 1][j - 1] += c; }
    void shift(long i) { set(i, {{i + 1, 1}}); }  // e_i -> e_{i+1}
};

}  // namespace

std::vector<std::vector<Int>> monodromy_action_list(const FamilySpec& f) {
    long p = f.p;
    long mu = f.mu;
    long q2 = p / 2;
    long qc = (p + 1) / 2;
    ImageBuilder b(mu);
    switch (f.series) {
        case Series::Wsharp: {
            long r0 = (p % 2 == 0) ? 12 + q2 : 11 + qc;
            long lend = r0 - 1;
            b.set(1, {{1, -1}, {2, -1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}});
            b.set(2, {{1, 1}, {2, 1}, {8, 1}, {r0, 1}});
            b.set(3, {{1, -1}, {3, -1}, {6, -1}, {7, 1}});
            b.set(4, {{2, 1}, {6, -1}, {7, 1}, {8, 1}});
            b.set(5, {{2, 1}, {6, -1}, {7, 1}, {r0, 1}});
            b.set(6, {{1, 1}, {2, -2}, {3, 1}, {4, 1}, {5, 1}, {6, 3}, {7, -2}});
            b.set(7, {{2, -2}, {3, 1}, {4, 1}, {5, 1}, {6, 2}, {7, -1}});
            for (long j = 8; j < lend; ++j) b.shift(j);
            b.add(lend, 4, -1);
            for (long j = 8; j <= lend; ++j) b.add(lend, j, -1);
            for (long j = r0; j < mu; ++j) b.shift(j);
            b.add(mu, 5, -1);
            for (long j = r0; j <= mu; ++j) b.add(mu, j, -1);
            break;
        }
        case Series::Ssharp: {
            long r0 = (p % 2 == 0) ? 12 + q2 : 11 + qc;
            long lend = r0 - 1;
            b.set(1, {{1, -1}, {2, -1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}});
            b.set(2, {{1, 1}, {2, 1}, {9, 1}, {r0, 1}});
            b.set(3, {{1, -1}, {6, -1}, {7, 1}, {8, 1}});
            b.set(4, {{2, 1}, {6, -1}, {7, 1}, {9, 1}});
            b.set(5, {{2, 1}, {6, -1}, {7, 1}, {r0, 1}});
            b.set(6, {{1, 1}, {2, -2}, {3, 1}, {4, 1}, {5, 1}, {6, 3}, {7, -2}});
            b.set(7, {{2, -2}, {3, 1}, {4, 1}, {5, 1}, {6, 2}, {7, -1}});
            b.set(8, {{3, -1}, {8, -1}});
            for (long j = 9; j < lend; ++j) b.shift(j);
            b.add(lend, 4, -1);
            for (long j = 9; j <= lend; ++j) b.add(lend, j, -1);
            for (long j = r0; j < mu; ++j) b.shift(j);
            b.add(mu, 5, -1);
            for (long j = r0; j <= mu; ++j) b.add(mu, j, -1);
            break;
        }
        case Series::U1: {
            long r0 = 12 + qc;
            long lend = 11 + qc;
            b.set(1, {{1, -1}, {2, -1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}});
            b.set(2, {{1, 1}, {2, 1}, {10, 1}, {r0, 1}});
            b.set(3, {{1, -1}, {6, -1}, {7, 1}, {8, 1}});
            b.set(4, {{2, 1}, {6, -1}, {7, 1}, {10, 1}});
            b.set(5, {{2, 1}, {6, -1}, {7, 1}, {r0, 1}});
            b.set(6, {{1, 1}, {2, -2}, {3, 1}, {4, 1}, {5, 1}, {6, 3}, {7, -2}});
            b.set(7, {{2, -2}, {3, 1}, {4, 1}, {5, 1}, {6, 2}, {7, -1}});
            b.set(8, {{9, 1}});
            b.set(9, {{3, -1}, {8, -1}, {9, -1}});
            for (long j = 10; j < lend; ++j) b.shift(j);
            b.add(lend, 4, -1);
            for (long j = 10; j <= lend; ++j) b.add(lend, j, -1);
            for (long j = r0; j < mu; ++j) b.shift(j);
            b.add(mu, 5, -1);
            for (long j = r0; j <= mu; ++j) b.add(mu, j, -1);
            break;
        }
        case Series::E3: {
            b.set(1, {{3, 1}, {4, 1}, {5, 1}, {6, 1}});
            b.set(2, {{9, 1}, {10, 1}});
            b.set(3, {{1, -1}, {3, -1}, {6, -1}, {7, 1}});
            b.set(4, {{1, -1}, {6, -1}, {7, 1}, {8, 1}});
            b.set(5, {{1, -1}, {6, -1}, {7, 1}, {9, 1}});
            b.set(6, {{1, 2}, {2, -1}, {3, 1}, {4, 1}, {5, 1}, {6, 3}, {7, -2}});
            b.set(7, {{1, 1}, {2, -1}, {3, 1}, {4, 1}, {5, 1}, {6, 2}, {7, -1}});
            b.set(8, {{4, -1}, {8, -1}});
            b.set(9, {{1, 1}, {2, 1}, {10, 1}});
            for (long j = 10; j < mu; ++j) b.shift(j);
            b.add(mu, 5, -1);
            for (long j = 9; j <= mu; ++j) b.add(mu, j, -1);
            break;
        }
        case Series::Z1: {
            b.set(1, {{3, 1}, {4, 1}, {5, 1}, {6, 1}});
            b.set(2, {{10, 1}, {11, 1}});
            b.set(3, {{1, -1}, {3, -1}, {6, -1}, {7, 1}});
            b.set(4, {{1, -1}, {6, -1}, {7, 1}, {8, 1}});
            b.set(5, {{1, -1}, {6, -1}, {7, 1}, {10, 1}});
            b.set(6, {{1, 2}, {2, -1}, {3, 1}, {4, 1}, {5, 1}, {6, 3}, {7, -2}});
            b.set(7, {{1, 1}, {2, -1}, {3, 1}, {4, 1}, {5, 1}, {6, 2}, {7, -1}});
            b.set(8, {{9, 1}});
            b.set(9, {{4, -1}, {8, -1}, {9, -1}});
            b.set(10, {{1, 1}, {2, 1}, {11, 1}});
            for (long j = 11; j < mu; ++j) b.shift(j);
            b.add(mu, 5, -1);
            for (long j = 10; j <= mu; ++j) b.add(mu, j, -1);
            break;
        }
        case Series::Q2: {
            b.set(1, {{3, 1}, {4, 1}, {5, 1}, {6, 1}});
            b.set(2, {{10, 1}, {11, 1}});
            b.set(3, {{1, -1}, {6, -1}, {7, 1}, {8, 1}});
            b.set(4, {{1, -1}, {6, -1}, {7, 1}, {9, 1}});
            b.set(5, {{1, -1}, {6, -1}, {7, 1}, {10, 1}});
            b.set(6, {{1, 2}, {2, -1}, {3, 1}, {4, 1}, {5, 1}, {6, 3}, {7, -2}});
            b.set(7, {{1, 1}, {2, -1}, {3, 1}, {4, 1}, {5, 1}, {6, 2}, {7, -1}});
            b.set(8, {{3, -1}, {8, -1}});
            b.set(9, {{4, -1}, {9, -1}});
            b.set(10, {{1, 1}, {2, 1}, {11, 1}});
            for (long j = 11; j < mu; ++j) b.shift(j);
            b.add(mu, 5, -1);
            for (long j = 10; j <= mu; ++j) b.add(mu, j, -1);
            break;
        }
        case Series::W1: {
            b.set(1, {{1, -1}, {2, -1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}});
            b.set(2, {{1, 2}, {2, 2}, {8, 1}, {12, 1}, {16, 1}});
            b.set(3, {{1, -1}, {3, -1}, {6, -1}, {7, 1}});
            b.set(4, {{2, 1}, {6, -1}, {7, 1}, {8, 1}});
            b.set(5, {{2, 1}, {6, -1}, {7, 1}, {12, 1}});
            b.set(6, {{1, 1}, {2, -2}, {3, 1}, {4, 1}, {5, 1}, {6, 3}, {7, -2}});
            b.set(7, {{2, -2}, {3, 1}, {4, 1}, {5, 1}, {6, 2}, {7, -1}});
            b.shift(8);
            b.shift(9);
            b.shift(10);
            b.set(11, {{4, -1}, {8, -1}, {9, -1}, {10, -1}, {11, -1}});
            b.shift(12);
            b.shift(13);
            b.shift(14);
            b.set(15, {{5, -1}, {12, -1}, {13, -1}, {14, -1}, {15, -1}});
            for (long j = 16; j < mu; ++j) b.shift(j);
            b.add(mu, 1, -1);
            b.add(mu, 2, -1);
            for (long j = 16; j <= mu; ++j) b.add(mu, j, -1);
            break;
        }
        case Series::S1: {
            b.set(1, {{1, -1}, {2, -1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}});
            b.set(2, {{1, 2}, {2, 2}, {9, 1}, {12, 1}, {15, 1}});
            b.set(3, {{1, -1}, {6, -1}, {7, 1}, {8, 1}});
            b.set(4, {{2, 1}, {6, -1}, {7, 1}, {9, 1}});
            b.set(5, {{2, 1}, {6, -1}, {7, 1}, {12, 1}});
            b.set(6, {{1, 1}, {2, -2}, {3, 1}, {4, 1}, {5, 1}, {6, 3}, {7, -2}});
            b.set(7, {{2, -2}, {3, 1}, {4, 1}, {5, 1}, {6, 2}, {7, -1}});
            b.set(8, {{3, -1}, {8, -1}});
            b.shift(9);
            b.shift(10);
            b.set(11, {{4, -1}, {9, -1}, {10, -1}, {11, -1}});
            b.shift(12);
            b.shift(13);
            b.set(14, {{5, -1}, {12, -1}, {13, -1}, {14, -1}});
            for (long j = 15; j < mu; ++j) b.shift(j);
            b.add(mu, 1, -1);
            b.add(mu, 2, -1);
            for (long j = 15; j <= mu; ++j) b.add(mu, j, -1);
            break;
        }
    }
    return b.img;
}

StokesMatrix stokes_matrix(const FamilySpec& f) {
    StokesMatrix s(f.mu);
    for (const auto& [i, j, v] : f.edges) {
        if (i >= j) throw error("edge list must have i < j");
        s.at(i - 1, j - 1) = v;
    }
    return s;
}

SeifertLattice family_lattice(const FamilySpec& f) {
    SeifertLattice lat = lattice_from_stokes(stokes_matrix(f));
    auto action = monodromy_action_list(f);
    for (long i = 0; i < f.mu; ++i)
        for (long j = 0; j < f.mu; ++j)
            if (lat.M.at(j, i) != action[i][j])
                throw catalog_mismatch_error("family " + f.id + ": image of basis vector e_" +
                                             std::to_string(i + 1) +
                                             " differs from the action list");
    if (monodromy_from_reflections(stokes_matrix(f)) != lat.M)
        throw catalog_mismatch_error("family " + f.id +
                                     ": reflection product disagrees with the Seifert relation");
    if (char_poly(lat.M) != f.char_poly_expected())
        throw catalog_mismatch_error("family " + f.id + ": unexpected characteristic polynomial");
    return lat;
}

FamilySpec parse_family(const std::string& name) {
    // accepted: "<series>_<p>", and compact quadrangle ids like "Z10", "Q20"
    static const std::map<std::string, std::pair<Series, long>> compact = {
        {"W10", {Series::Wsharp, 0}}, {"S10", {Series::Ssharp, 0}}, {"U10", {Series::U1, 0}},
        {"E30", {Series::E3, 0}},     {"Z10", {Series::Z1, 0}},     {"Q20", {Series::Q2, 0}},
    };
    auto it = compact.find(name);
    if (it != compact.end()) return family_spec(it->second.first, it->second.second);
    auto pos = name.rfind('_');
    if (pos == std::string::npos) throw error("family name needs the form SERIES_P: " + name);
    std::string head = name.substr(0, pos);
    long p = std::stol(name.substr(pos + 1));
    // "W1_0", "S1_0" etc. name the quadrangle members
    if (p == 0 && (head == "W1" || head == "W")) return family_spec(Series::Wsharp, 0);
    if (p == 0 && (head == "S1" || head == "S")) return family_spec(Series::Ssharp, 0);
    return family_spec(parse_series(head), p);
}

}  // namespace mlk
