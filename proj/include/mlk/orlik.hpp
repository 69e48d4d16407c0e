#ifndef MLK_ORLIK_HPP
#define MLK_ORLIK_HPP

#include <optional>

#include "mlk/lattice.hpp"
#include "mlk/report.hpp"

namespace mlk {

// Cyclic monodromy-invariant primitive sublattice generated by beta:
// basis rows are beta, M beta, ..., M^{d-1} beta.
struct OrlikBlock {
    std::vector<Int> beta;
    IntMat basis;
    IntPoly block_poly;  // char poly of M restricted to the block

    long rank() const { return basis.rows(); }
};

// Compute the cyclic span of beta, its minimal polynomial and primitivity.
// Throws non_primitive_error (carrying the saturation index) if the span is
// not primitive in the parent lattice.
OrlikBlock make_orlik_block(const SeifertLattice& lat, const std::vector<Int>& beta);

struct BlockDecomposition {
    std::vector<OrlikBlock> blocks;
    Int r_I;         // index of the direct sum in the parent
    IntMat stacked;  // all block bases stacked, mu x mu
};

// Assemble blocks from generators; verifies the sum is direct and of full
// rank mu, and computes r_I.
BlockDecomposition block_decomposition(const SeifertLattice& lat,
                                       const std::vector<std::vector<Int>>& generators);

// The verification suite behind the decomposition claims: block char polys,
// directness, index, and two-sided L-orthogonality of the B_2 block against
// the rest.  Violations become failed checks in the report, not exceptions.
Report verify_decomposition(const SeifertLattice& lat,
                            const std::vector<std::vector<Int>>& generators,
                            const std::vector<IntPoly>& expected_b, Int expected_r_I);

// Witness for the eigenvalue-order hypothesis on a single Orlik block:
// sequences (m_i), (j(i)), (p_i), (k_i) and the window [i1, i2] of 2-steps.
struct OrderChainWitness {
    std::vector<long> m;
    std::vector<long> j;  // j[i] for i >= 1 (0-based; j[0] unused)
    std::vector<long> p;
    std::vector<long> k;
    long i1 = 0, i2 = 0;  // 1-based window: p_i = 2 exactly for i1 < i <= i2
};

// Exhaustive search for the hypothesis witness; nullopt when none exists.
std::optional<OrderChainWitness> order_chain_hypothesis(const std::set<long>& orders);

// g expressed over the blocks: g(beta_j) = sum_i p_ij(M)(beta_i), with
// deg p_ij < rank of block i.  Throws if g does not preserve the direct sum.
struct AutomorphismDecomposition {
    std::vector<std::vector<IntPoly>> p;  // p[i][j]
};
AutomorphismDecomposition decompose_automorphism(const SeifertLattice& lat, const IntMat& g,
                                                 const BlockDecomposition& decomp);

// When g is the identity off the p0-eigenspaces, p_ij = delta_ij +
// (block_poly_i / p0) * q_ij; extract the q_ij or report failure.
std::optional<std::vector<std::vector<IntPoly>>> factor_off_identity(
    const AutomorphismDecomposition& dec, const BlockDecomposition& decomp, const IntPoly& p0);

// Parity of p(1) for p = prod Phi_{m_i}: odd iff no m_i is a power of two
// (including 1 = 2^0).
enum class Parity { Even, Odd };
Parity phi_product_parity(const std::multiset<long>& factors);

}  // namespace mlk

#endif
