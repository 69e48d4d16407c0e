#ifndef MLK_FAMILIES_HPP
#define MLK_FAMILIES_HPP

#include <array>
#include <map>
#include <optional>
#include <string>

#include "mlk/lattice.hpp"

namespace mlk {

enum class Series { Wsharp, Ssharp, U1, E3, Z1, Q2, W1, S1 };

std::string series_name(Series s);
// Accepts "W#", "Wsharp", "S#", "U", "E3", "Z1", "Q2", "W", "S", "W1", "S1", ...
Series parse_series(const std::string& name);

// One catalog entry, materialized at a concrete p.  p >= 1 walks along the
// series; p = 0 is the quadrangle member (defined for all series except
// W_{1,p} and S_{1,p}, whose p = 0 members are carried by the sharp series).
struct FamilySpec {
    Series series;
    long p = 0;
    std::string id;  // e.g. "W#_1,2" or "Q2_0"

    long mu = 0;
    // Stokes data: entries (i, j, s_ij) with 1-based i < j.
    std::vector<std::array<long, 3>> edges;
    // Orlik block generators beta_j in the distinguished basis.
    std::vector<std::vector<Int>> betas;
    // Expected block characteristic polynomials, as cyclotomic index multisets.
    std::vector<std::multiset<long>> b;
    long m = 0;    // order of the monodromy on B_1
    long m2 = 0;   // order on B_2: m + r_I * p
    long r_I = 0;  // index of the direct block sum in the lattice

    // quadrangle layer (p = 0 only)
    std::optional<std::array<Rat, 3>> weights;      // (w_x, w_y, w_z)
    std::optional<std::array<long, 3>> triangle;    // (m_0, m_1, m_inf)

    IntPoly block_poly(size_t j) const { return product_of_cyclotomics(b[j]); }
    IntPoly char_poly_expected() const;
};

// Build the catalog entry; p = 0 gives the quadrangle member.
FamilySpec family_spec(Series s, long p);

// All six quadrangle entries, in catalog order.
std::vector<FamilySpec> quadrangle_catalog();

// The monodromy action list: image of each basis vector e_1..e_mu as a
// column vector, straight from the per-series description (not from the
// Stokes matrix).  Serves as the authoritative cross-check.
std::vector<std::vector<Int>> monodromy_action_list(const FamilySpec& spec);

// Stokes matrix from the edge list.
StokesMatrix stokes_matrix(const FamilySpec& spec);

// Build the lattice from the Stokes matrix and verify:
//  - the monodromy reproduces the action list column by column,
//  - it equals the Picard-Lefschetz reflection product,
//  - char poly = prod b_j.
// Throws catalog_mismatch_error naming the first basis vector whose image
// differs.
SeifertLattice family_lattice(const FamilySpec& spec);

// Parse a family instance name like "E3_1", "W#_12", "Q2_0", "Z10".
FamilySpec parse_family(const std::string& name);

}  // namespace mlk

#endif
