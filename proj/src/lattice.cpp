#include "mlk/lattice.hpp"

namespace mlk {

StokesMatrix::StokesMatrix(IntMat s) : s_(std::move(s)) {
    if (s_.rows() != s_.cols()) throw error("Stokes matrix must be square");
    for (long i = 0; i < s_.rows(); ++i) {
        if (s_.at(i, i) != 1) throw error("Stokes matrix needs unit diagonal");
        for (long j = 0; j < i; ++j)
            if (s_.at(i, j) != 0) throw error("Stokes matrix must be upper triangular");
    }
}

Int& StokesMatrix::at(long i, long j) {
    if (i > j) throw error("lower triangle of a Stokes matrix is fixed");
    return s_.at(i, j);
}

StokesMatrix StokesMatrix::tensor(const StokesMatrix& o) const {
    return StokesMatrix(s_.kronecker(o.matrix()));
}

Int SeifertLattice::seifert(const std::vector<Int>& a, const std::vector<Int>& b) const {
    Int v(0);
    for (long i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < rank; ++j)
            if (b[j] != 0) v += a[i] * L.at(i, j) * b[j];
    }
    return v;
}

void SeifertLattice::validate() const {
    Int dl = det(L);
    if (dl != 1 && dl != -1) throw error("Seifert form is not unimodular");
    // L(M a, b) = -L(b, a):  M^T L = -L^T
    if (M.transposed() * L != -L.transposed()) throw error("monodromy relation violated");
    if (M.transposed() * L * M != L) throw error("L is not monodromy invariant");
    IntMat ic = (M - IntMat::identity(rank)).transposed() * L;
    if (ic != I) throw error("intersection form mismatch");
    if (I != I.transposed()) throw error("intersection form not symmetric");
    for (long i = 0; i < rank; ++i)
        if (I.at(i, i) != -2) throw error("I(e_i, e_i) != -2");
    if (!factor_into_cyclotomics(char_poly(M)))
        throw error("characteristic polynomial is not a product of cyclotomics");
}

SeifertLattice lattice_from_stokes(const StokesMatrix& s) {
    long n = s.rank();
    SeifertLattice lat;
    lat.rank = n;
    lat.L = s.matrix().transposed();
    // L(M a, b) = -L(b, a) gives M = -S^{-1} S^T over Q; the result is
    // integral because S is unimodular.
    auto inv = rational_inverse(s.matrix());
    if (!inv) throw error("Stokes matrix not invertible");
    if (inv->den != 1 && inv->den != -1) throw error("Stokes inverse not integral");
    IntMat sinv = inv->den == 1 ? inv->num : -inv->num;
    lat.M = -(sinv * s.matrix().transposed());
    lat.I = (lat.M - IntMat::identity(n)).transposed() * lat.L;
    lat.validate();
    return lat;
}

IntMat monodromy_from_reflections(const StokesMatrix& s) {
    long n = s.rank();
    IntMat i_form = -(s.matrix() + s.matrix().transposed());
    IntMat m = IntMat::identity(n);
    // apply s_{e_mu} first, then down to s_{e_1}
    for (long d = n - 1; d >= 0; --d) {
        // reflection matrix R: R e_j = e_j + I(e_d, e_j) e_d
        IntMat r = IntMat::identity(n);
        for (long j = 0; j < n; ++j) r.at(d, j) += i_form.at(d, j);
        m = r * m;
    }
    return m;
}

IntMat eigen_sublattice(const SeifertLattice& lat, const IntPoly& p) {
    IntPoly cp = char_poly(lat.M);
    auto [q, r] = cp.divmod(p);
    if (!r.is_zero()) throw error("polynomial does not divide the characteristic polynomial");
    (void)q;
    auto pf = factor_into_cyclotomics(p);
    if (!pf) throw error("eigen_sublattice needs a product of cyclotomics");
    auto cf = factor_into_cyclotomics(cp);
    if (!cf) throw error("characteristic polynomial is not a product of cyclotomics");
    // The sublattice spans the full eigenspaces of every root of p, so its
    // rank counts each eigenvalue with its multiplicity in char_poly.
    long expected = 0;
    std::set<long> distinct(pf->begin(), pf->end());
    for (long n : distinct) expected += static_cast<long>(cf->count(n)) * euler_phi(n);
    IntMat pm = poly_at_matrix(p, lat.M);
    IntMat basis = kernel_saturated(pm);
    if (basis.rows() != expected)
        throw error("eigen-sublattice rank mismatch: got " + std::to_string(basis.rows()) +
                    ", expected " + std::to_string(expected));
    return basis;
}

bool is_form_automorphism(const SeifertLattice& lat, const IntMat& g) {
    if (g.rows() != lat.rank || g.cols() != lat.rank) return false;
    if (!is_unimodular(g)) return false;
    return g.transposed() * lat.L * g == lat.L;
}

SeifertLattice suspend(const SeifertLattice& lat) {
    SeifertLattice out;
    out.rank = lat.rank;
    out.L = lat.L;
    out.M = -lat.M;
    out.I = (out.M - IntMat::identity(out.rank)).transposed() * out.L;
    return out;
}

}  // namespace mlk
