#include "mlk/orlik.hpp"

#include <map>

namespace mlk {

OrlikBlock make_orlik_block(const SeifertLattice& lat, const std::vector<Int>& beta) {
    if (std::all_of(beta.begin(), beta.end(), [](const Int& x) { return x == 0; }))
        throw error("Orlik block generator must be nonzero");
    long mu = lat.rank;
    std::vector<std::vector<Int>> rows{beta};
    std::vector<Int> cur = beta;
    // iterate until M^d beta depends on the earlier iterates
    std::optional<std::vector<Rat>> dep;
    while (true) {
        cur = lat.M * cur;
        IntMat basis(static_cast<long>(rows.size()), mu);
        for (size_t i = 0; i < rows.size(); ++i)
            for (long j = 0; j < mu; ++j) basis.at(static_cast<long>(i), j) = rows[i][j];
        dep = coords_in_basis(basis, cur);
        if (dep) break;
        rows.push_back(cur);
        if (static_cast<long>(rows.size()) > mu) throw error("cyclic span exceeded ambient rank");
    }
    long d = static_cast<long>(rows.size());
    OrlikBlock block;
    block.beta = beta;
    block.basis = IntMat(d, mu);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < mu; ++j) block.basis.at(i, j) = rows[i][j];
    // minimal polynomial of beta: t^d - sum dep_i t^i; integral because the
    // block is monodromy invariant and the iterates form a Z-basis
    std::vector<Int> pc(d + 1, Int(0));
    pc[d] = 1;
    for (long i = 0; i < d; ++i) {
        if ((*dep)[i].get_den() != 1)
            throw error("cyclic span is not closed under the monodromy over Z");
        pc[i] = -(*dep)[i].get_num();
    }
    block.block_poly = IntPoly(std::move(pc));
    Int sat = saturation_index(block.basis);
    if (sat != 1) throw non_primitive_error("cyclic span is not primitive", sat);
    // a cyclic monodromy module of a finite-order M has squarefree minimal
    // polynomial: a product of distinct-index cyclotomics
    auto fac = factor_into_cyclotomics(block.block_poly);
    if (!fac) throw error("block polynomial is not a product of cyclotomics");
    std::set<long> distinct(fac->begin(), fac->end());
    if (distinct.size() != fac->size())
        throw error("block polynomial has a repeated cyclotomic factor");
    return block;
}

BlockDecomposition block_decomposition(const SeifertLattice& lat,
                                       const std::vector<std::vector<Int>>& generators) {
    BlockDecomposition dec;
    long total = 0;
    for (const auto& g : generators) {
        dec.blocks.push_back(make_orlik_block(lat, g));
        total += dec.blocks.back().rank();
    }
    if (total != lat.rank) throw error("blocks do not add up to the ambient rank");
    dec.stacked = IntMat(lat.rank, lat.rank);
    long row = 0;
    for (const auto& b : dec.blocks)
        for (long i = 0; i < b.rank(); ++i, ++row)
            for (long j = 0; j < lat.rank; ++j) dec.stacked.at(row, j) = b.basis.at(i, j);
    Int d = det(dec.stacked);
    if (d == 0) throw error("block sum is not direct");
    dec.r_I = abs(d);
    return dec;
}

Report verify_decomposition(const SeifertLattice& lat,
                            const std::vector<std::vector<Int>>& generators,
                            const std::vector<IntPoly>& expected_b, Int expected_r_I) {
    Report rep;
    BlockDecomposition dec;
    try {
        dec = block_decomposition(lat, generators);
    } catch (const std::exception& e) {
        rep.add("decomposition", false, "direct sum of primitive Orlik blocks", e.what());
        return rep;
    }
    for (size_t j = 0; j < dec.blocks.size(); ++j) {
        bool ok = j < expected_b.size() && dec.blocks[j].block_poly == expected_b[j];
        rep.add("block_poly_b" + std::to_string(j + 1), ok,
                j < expected_b.size() ? expected_b[j].str() : "?",
                dec.blocks[j].block_poly.str(), "characteristic polynomial on the block");
    }
    long total = 0;
    for (const auto& b : dec.blocks) total += b.rank();
    rep.add("direct_sum", total == lat.rank && dec.r_I != 0,
            "rank " + std::to_string(lat.rank), "rank " + std::to_string(total),
            "sum of blocks is direct and of full rank");
    rep.add("index_r_I", dec.r_I == expected_r_I, expected_r_I.get_str(), dec.r_I.get_str(),
            "index of the block sum in the lattice");
    // L-orthogonality: B2 against B~1 = everything else (B1, and B3 when present)
    const OrlikBlock& b2 = dec.blocks[1];
    bool orth = true;
    for (size_t j = 0; j < dec.blocks.size(); ++j) {
        if (j == 1) continue;
        const OrlikBlock& bo = dec.blocks[j];
        for (long i = 0; i < bo.rank(); ++i)
            for (long k = 0; k < b2.rank(); ++k) {
                std::vector<Int> x(lat.rank), y(lat.rank);
                for (long c = 0; c < lat.rank; ++c) {
                    x[c] = bo.basis.at(i, c);
                    y[c] = b2.basis.at(k, c);
                }
                if (lat.seifert(x, y) != 0 || lat.seifert(y, x) != 0) orth = false;
            }
    }
    rep.add("L_orthogonality", orth, "L(B~1,B2) = 0 = L(B2,B~1)", orth ? "0" : "nonzero",
            "two-sided Seifert orthogonality");
    return rep;
}

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// all (p, k) with m_prev / p^k = m_next and p prime, k >= 1
std::vector<std::pair<long, long>> prime_power_quotients(long prev, long next) {
    std::vector<std::pair<long, long>> out;
    if (next <= 0 || prev % next != 0) return out;
    long q = prev / next;
    if (q < 2) return out;
    for (long p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        long k = 0, v = q;
        while (v % p == 0) {
            v /= p;
            ++k;
        }
        if (v == 1 && k >= 1) {
            out.push_back({p, k});
            break;  // q is a power of exactly one prime
        }
    }
    return out;
}

struct ChainSearch {
    std::vector<long> elems;  // sorted decreasing: larger first candidates
    long n;
    OrderChainWitness wit;
    std::vector<bool> used;
    long i1, i2;

    bool dfs(long pos) {
        if (pos == n) return true;
        bool in_two_window = (pos + 1 > i1 && pos + 1 <= i2);  // 1-based position pos+1
        for (long e = 0; e < n; ++e) {
            if (used[e]) continue;
            long m = elems[e];
            if (pos == 0) {  // first element is unconstrained
                used[e] = true;
                wit.m[0] = m;
                if (dfs(1)) return true;
                used[e] = false;
                continue;
            }
            if (in_two_window) {
                // chained: previous element divided by a power of two
                auto pw = prime_power_quotients(wit.m[pos - 1], m);
                for (auto [p, k] : pw) {
                    if (p != 2) continue;
                    used[e] = true;
                    wit.m[pos] = m;
                    wit.j[pos] = pos - 1;
                    wit.p[pos] = 2;
                    wit.k[pos] = k;
                    if (dfs(pos + 1)) return true;
                    used[e] = false;
                }
            } else {
                // odd prime power of any earlier element
                for (long j = 0; j < pos; ++j) {
                    auto pw = prime_power_quotients(wit.m[j], m);
                    for (auto [p, k] : pw) {
                        if (p < 3) continue;
                        used[e] = true;
                        wit.m[pos] = m;
                        wit.j[pos] = j;
                        wit.p[pos] = p;
                        wit.k[pos] = k;
                        if (dfs(pos + 1)) return true;
                        used[e] = false;
                    }
                }
            }
        }
        return false;
    }
};

}  // namespace

std::optional<OrderChainWitness> order_chain_hypothesis(const std::set<long>& orders) {
    if (orders.empty()) throw error("order set must be nonempty");
    long n = static_cast<long>(orders.size());
    ChainSearch s;
    s.elems.assign(orders.begin(), orders.end());
    std::sort(s.elems.begin(), s.elems.end(), std::greater<>());
    s.n = n;
    s.wit.m.assign(n, 0);
    s.wit.j.assign(n, 0);
    s.wit.p.assign(n, 0);
    s.wit.k.assign(n, 0);
    s.used.assign(n, false);
    // the window [i1+1, i2] of 2-steps is contiguous; try all placements
    for (long i1 = 1; i1 <= n; ++i1)
        for (long i2 = i1; i2 <= n; ++i2) {
            s.i1 = i1;
            s.i2 = i2;
            std::fill(s.used.begin(), s.used.end(), false);
            if (s.dfs(0)) {
                s.wit.i1 = i1;
                s.wit.i2 = i2;
                return s.wit;
            }
        }
    return std::nullopt;
}

AutomorphismDecomposition decompose_automorphism(const SeifertLattice& lat, const IntMat& g,
                                                 const BlockDecomposition& decomp) {
    if (g * lat.M != lat.M * g) throw error("automorphism does not commute with the monodromy");
    size_t k = decomp.blocks.size();
    AutomorphismDecomposition out;
    out.p.assign(k, std::vector<IntPoly>(k));
    for (size_t j = 0; j < k; ++j) {
        std::vector<Int> img = g * decomp.blocks[j].beta;
        auto coords = coords_in_basis(decomp.stacked, img);
        if (!coords) throw error("image leaves the block sum's span");
        long off = 0;
        for (size_t i = 0; i < k; ++i) {
            long d = decomp.blocks[i].rank();
            std::vector<Int> pc(d, Int(0));
            for (long c = 0; c < d; ++c) {
                const Rat& v = (*coords)[off + c];
                if (v.get_den() != 1)
                    throw error("automorphism does not preserve the direct sum of blocks");
                pc[c] = v.get_num();
            }
            out.p[i][j] = IntPoly(std::move(pc));
            off += d;
        }
    }
    return out;
}

std::optional<std::vector<std::vector<IntPoly>>> factor_off_identity(
    const AutomorphismDecomposition& dec, const BlockDecomposition& decomp, const IntPoly& p0) {
    size_t k = decomp.blocks.size();
    std::vector<std::vector<IntPoly>> q(k, std::vector<IntPoly>(k));
    for (size_t i = 0; i < k; ++i) {
        auto [cofactor, p0rem] = decomp.blocks[i].block_poly.divmod(p0);
        if (!p0rem.is_zero()) return std::nullopt;
        for (size_t j = 0; j < k; ++j) {
            IntPoly delta = (i == j) ? IntPoly::constant(1) : IntPoly();
            auto [quot, rem] = (dec.p[i][j] - delta).divmod(cofactor);
            if (!rem.is_zero()) return std::nullopt;
            if (quot.degree() >= p0.degree()) return std::nullopt;
            q[i][j] = quot;
        }
    }
    return q;
}

Parity phi_product_parity(const std::multiset<long>& factors) {
    for (long m : factors) {
        long v = m;
        while (v % 2 == 0) v /= 2;
        if (v == 1) return Parity::Even;  // m is a power of two (1 included)
    }
    return Parity::Odd;
}

}  // namespace mlk
