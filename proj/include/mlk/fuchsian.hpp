#ifndef MLK_FUCHSIAN_HPP
#define MLK_FUCHSIAN_HPP

#include <complex>

#include "mlk/herm.hpp"

namespace mlk {

// 2x2 matrix over Q(zeta_m); entries a b / c d.
struct Mat2 {
    long m = 1;
    Cyclo a, b, c, d;

    static Mat2 identity(long m);
    Mat2 operator*(const Mat2& o) const;
    Cyclo det() const { return a * d - b * c; }
    Cyclo trace() const { return a + d; }
    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    bool integral() const { return a.is_integral() && b.is_integral() && c.is_integral() && d.is_integral(); }
    Mat2 scaled(const Cyclo& s) const { return {m, a * s, b * s, c * s, d * s}; }
};

// The group of Z[zeta]-matrices preserving the hermitian form diag(-1, w).
struct FuchsianGroup {
    long m = 1;
    Cyclo w;  // conjugation-fixed, w(zeta) > 0, w(xi) < 0 otherwise
};

// Check the sign pattern w(zeta) > 0, w(xi) < 0 for primitive xi off zeta.
bool w_sign_pattern_ok(long m, const Cyclo& w, int digits = 0);

// Exact membership test: A integral and A^t diag(-1,w) conj(A) = diag(-1,w).
bool gamma_membership(const FuchsianGroup& g, const Mat2& A);

struct Triple {
    Cyclo a, c, delta;
};

// Extract (a, c, delta = det A) from a member; throws if A is not in Gamma.
Triple triple_of(const FuchsianGroup& g, const Mat2& A);
// Rebuild A = [[a, w conj(c) delta], [c, conj(a) delta]].
Mat2 from_triple(const FuchsianGroup& g, const Triple& t);

// Real-subfield helpers: elements of Q(p1) as vectors over the p1-power
// basis 1, p1, ..., p1^{phi(m)/2 - 1}.
Cyclo real_from_p1_coords(long m, const std::vector<Rat>& coords);
std::vector<Rat> p1_coords(const Cyclo& x);

struct PellSolution {
    Cyclo a, c;  // conjugation-fixed elements with a^2 - 1 = w c^2
};

// All Pell solutions with integer p1-coordinates of magnitude <= height for
// both entries, by box enumeration pruned with the embedding bounds
// |a(zeta)| >= 1, |a(xi)| <= 1.  Throws on a w violating the sign pattern.
std::vector<PellSolution> pell_solve(long m, const Cyclo& w, long height);

// (a, c) -> (a^2 + w c^2, 2 a c): stays a solution and gains w | a - 1.
PellSolution pell_divisibility_lift(const Cyclo& w, const PellSolution& s);

// Seed hunt for solutions whose fundamental unit sits beyond the box
// reachable by pell_solve: sweeps the constant p1-coordinate up to x0_bound
// along the sliver |a(xi)| <= 1, constant work per step.  Returns the first
// solutions with c != 0 (up to `want` of them, a > 0 at the zeta embedding).
std::vector<PellSolution> pell_seed_hunt(long m, const Cyclo& w, long x0_bound, int want = 1);

// Divisibility in Z[zeta]: x / y integral.
bool divides_in_ring(const Cyclo& y, const Cyclo& x);

// The five triangle-group cases of the quadrangle families; E30 and U10
// share one case at m = 18.
enum class TriangleCase { W10, S10, E30U10, Z10, Q20 };
std::string triangle_case_name(TriangleCase c);
TriangleCase parse_triangle_case(const std::string& name);

FuchsianGroup triangle_group(TriangleCase c);
Mat2 generator_a1(TriangleCase c);  // diag(zeta, 1)
Mat2 generator_a2(TriangleCase c);
std::array<long, 3> triangle_type(TriangleCase c);

// Elliptic data: fixed point inside the circle |z|^2 = w, rotation angle as
// an exact rational multiple of 2 pi (certified root of unity), its order.
struct EllipticData {
    std::complex<double> fixed_point;
    Rat angle_turns;  // angle = 2 pi * angle_turns, in (-1/2, 1/2]
    long order = 0;
};
EllipticData elliptic_data(const FuchsianGroup& g, const Mat2& A, int digits = 0);

// Minimality audit: enumerate the candidate box for |a|^2 and
// exclude every candidate by the norm condition.
struct MinimalityAudit {
    std::vector<Cyclo> candidates;        // box members f
    std::vector<Rat> norms_f_minus_one;   // Norm(f - 1) per candidate
    Rat norm_w;
    bool all_excluded = false;
    double contraction_margin = 0.0;  // |a2|^-2 - ((sin pi/m)^2 + (1 - sqrt(1 - |a2|^-2))^2)
};
MinimalityAudit minimality_audit(TriangleCase c);

// Word over {A1, A1^-1, A2} with a residual unit-root scalar:
//   A = scalar * prod_i (A1^{a1_exp} * A2 if then_a2).
struct WordStep {
    long a1_exp = 0;
    bool then_a2 = false;
};
struct GeneratorWord {
    std::vector<WordStep> steps;
    Cyclo scalar;
};
Mat2 evaluate_word(TriangleCase c, const GeneratorWord& w);

// Reduce a member to a generator word by the |c|-shrinking right
// multiplications; reports the |c|^2 trace so callers can assert the strict
// decrease.
struct ReductionResult {
    GeneratorWord word;
    std::vector<Cyclo> c_norms;  // |c|^2 after each A2-step, strictly decreasing
    long steps = 0;
};
ReductionResult reduce_word(TriangleCase c, const Mat2& A);

// Replacing w by w * u * conj(u) for a unit u gives an isomorphic group;
// triples transform as (a, c, delta) -> (a, c * u^-1, delta).
FuchsianGroup rescaled_group(const FuchsianGroup& g, const Cyclo& u);
Mat2 rescale_member(const FuchsianGroup& g, const Cyclo& u, const Mat2& A);

// --- Pell -> lattice automorphisms (subseries with m | p) ------------------

struct GzResult {
    IntMat g;
    std::vector<std::vector<IntPoly>> q;  // the q_ij certificates
};

// Build the lattice automorphism from a Pell solution (a, f) for
// w0 = w(zeta) b5(zeta) b5(conj zeta) with w0 | a - 1; acts as the identity
// on the eigenspaces away from Phi_m and integrally on the whole lattice.
GzResult gz_from_pell(const HermData& hd, const PellSolution& s);

// w0 for the instance.
Cyclo gz_w0(const HermData& hd);

}  // namespace mlk

#endif
