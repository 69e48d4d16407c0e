#ifndef MLK_SPECTRA_HPP
#define MLK_SPECTRA_HPP

#include "mlk/cyclo.hpp"
#include "mlk/families.hpp"

namespace mlk {

// Sorted spectral numbers alpha_1 <= ... <= alpha_mu, symmetric about 1/2
// and contained in (-1, 2).
using Spectrum = std::vector<Rat>;

// Check the symmetry alpha_i + alpha_{mu+1-i} = 1 and the range.
bool spectrum_ok(const Spectrum& sp);

// Exponents from the quasihomogeneous generating series
// prod_j (t - t^{w_j}) / (t^{w_j} - 1) = sum_i t^{alpha_i + 1}.
Spectrum spectrum_from_weights(const std::array<Rat, 3>& weights);

// Exponents from the cyclotomic factorization of the characteristic
// polynomial: each eigenvalue copy gets its exponent in (0, 1), then one
// zeta-copy moves down to -1/m and one conj(zeta)-copy up to 1 + 1/m.
Spectrum spectrum_from_charpoly(const std::multiset<long>& indices, long m);
Spectrum spectrum_from_charpoly(const FamilySpec& spec);

// Hypergeometric parameters from (1-c, c-a-b, a-b) = (1/m0, 1/m1, 1/minf).
std::array<Rat, 3> hypergeom_params(long m0, long m1, long minf);

// j = (4/27) (t^2 - t + 1)^3 / (t^2 (1 - t)^2); poles at t in {0, 1}.
Rat j_invariant(const Rat& t1);
Cyclo j_invariant(const Cyclo& t1);

// The coordinate-change groups on t1: G3 = S3 generated by s1: t -> 1 - t
// and s2: t -> 1/t; G2 = {id, s1}.  Words apply right-to-left like function
// composition read left-to-right in application order: the FIRST letter
// acts first.
struct MoebiusWord {
    std::vector<int> letters;  // 1 = s1, 2 = s2
};
Rat moebius_apply(const MoebiusWord& g, const Rat& t1);

// The multiplier kappa(g, t1) extended from the generator table by the
// cocycle rule kappa(g2 g1, t1) = kappa(g1, t1) kappa(g2, g1(t1)).
// Families W1_0 and S1_0 only admit G2 words: a word containing s2 throws.
Rat kappa(const FamilySpec& quadrangle, const MoebiusWord& g, const Rat& t1);

}  // namespace mlk

#endif
