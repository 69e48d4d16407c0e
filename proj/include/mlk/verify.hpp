#ifndef MLK_VERIFY_HPP
#define MLK_VERIFY_HPP

#include "mlk/fuchsian.hpp"
#include "mlk/report.hpp"
#include "mlk/spectra.hpp"

namespace mlk {

// Decomposition suite for one family instance: construction, action list,
// characteristic polynomial, Orlik blocks (directness, primitivity, index,
// orthogonality) and, when m | p, the Phi_m eigenlattice splitting.
Report verify_family_report(const FamilySpec& spec);

// The hermitian layer of the subseries instance p = m r (r = 0 gives the
// quadrangle member): exact table values, sign patterns, w(xi).
Report herm_table_report(Series s, long r);

// Triangle-group pipeline for one case: generator membership, elliptic
// data, step-2 minimality audit, and seeded random word reductions.
Report triangle_report(TriangleCase c, int nwords, unsigned long seed);

// Pell solutions at the given height plus identity/sign checks.
Report pell_report(long m, const Cyclo& w, long height, std::vector<PellSolution>* out = nullptr);

// Pell-generated lattice automorphisms for the p = m r instance.
Report gz_report(Series s, long r, long height, std::vector<IntMat>* out_gs = nullptr);

// Spectral numbers via the requested method ("weights", "charpoly", "both").
Report spectra_report(const FamilySpec& spec, const std::string& method,
                      Spectrum* out = nullptr);

// Order of the monodromy (smallest N >= 1 with M^N = 1).
long monodromy_order(const FamilySpec& spec);

// Is g = +- M^k for some k?
bool is_plus_minus_power(const SeifertLattice& lat, long order, const IntMat& g);

std::string rat_str(const Rat& r);
std::string spectrum_str(const Spectrum& sp);
std::string cyclo_str(const Cyclo& x);

}  // namespace mlk

#endif
