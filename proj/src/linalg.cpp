#include "mlk/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace mlk {

IntMat IntMat::identity(long n) {
    IntMat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (c_ != o.r_) throw error("matrix product shape mismatch");
    IntMat r(r_, o.c_);
    for (long i = 0; i < r_; ++i)
        for (long k = 0; k < c_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (long j = 0; j < o.c_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

IntMat IntMat::operator+(const IntMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw error("matrix sum shape mismatch");
    IntMat r(*this);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

IntMat IntMat::operator-(const IntMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw error("matrix difference shape mismatch");
    IntMat r(*this);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

IntMat IntMat::operator-() const {
    IntMat r(*this);
    for (auto& x : r.a_) x = -x;
    return r;
}

std::vector<Int> IntMat::operator*(const std::vector<Int>& v) const {
    if (static_cast<long>(v.size()) != c_) throw error("matrix-vector shape mismatch");
    std::vector<Int> r(r_, Int(0));
    for (long i = 0; i < r_; ++i)
        for (long j = 0; j < c_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

IntMat IntMat::transposed() const {
    IntMat r(c_, r_);
    for (long i = 0; i < r_; ++i)
        for (long j = 0; j < c_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool IntMat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

IntMat IntMat::kronecker(const IntMat& o) const {
    IntMat r(r_ * o.r_, c_ * o.c_);
    for (long i = 0; i < r_; ++i)
        for (long j = 0; j < c_; ++j) {
            if (at(i, j) == 0) continue;
            for (long k = 0; k < o.r_; ++k)
                for (long l = 0; l < o.c_; ++l)
                    r.at(i * o.r_ + k, j * o.c_ + l) = at(i, j) * o.at(k, l);
        }
    return r;
}

std::string IntMat::str() const {
    std::ostringstream os;
    for (long i = 0; i < r_; ++i) {
        os << (i ? "\n[" : "[");
        for (long j = 0; j < c_; ++j) os << (j ? " " : "") << at(i, j).get_str();
        os << "]";
    }
    return os.str();
}

Int det(const IntMat& m) {
    if (m.rows() != m.cols()) throw error("det of non-square matrix");
    long n = m.rows();
    if (n == 0) return Int(1);
    IntMat a(m);
    Int prev(1);
    int sign = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            long piv = -1;
            for (long i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Int(0);
            for (long j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) {
                Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = v;
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

IntPoly char_poly(const IntMat& m) {
    if (m.rows() != m.cols()) throw error("char_poly of non-square matrix");
    long n = m.rows();
    std::vector<Int> coeffs(n + 1, Int(0));
    coeffs[n] = 1;
    IntMat nk = m;
    for (long k = 1; k <= n; ++k) {
        Int tr(0);
        for (long i = 0; i < n; ++i) tr += nk.at(i, i);
        Int ck = -tr;
        mpz_divexact_ui(ck.get_mpz_t(), ck.get_mpz_t(), static_cast<unsigned long>(k));
        coeffs[n - k] = ck;
        if (k < n) {
            for (long i = 0; i < n; ++i) nk.at(i, i) += ck;
            nk = m * nk;
        }
    }
    return IntPoly(std::move(coeffs));
}

IntMat poly_at_matrix(const IntPoly& p, const IntMat& m) {
    if (m.rows() != m.cols()) throw error("poly_at_matrix needs a square matrix");
    long n = m.rows();
    IntMat acc(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        for (long d = 0; d < n; ++d) acc.at(d, d) += p.coeff(i);
    }
    return acc;
}

bool is_unimodular(const IntMat& g) {
    if (g.rows() != g.cols()) return false;
    Int d = det(g);
    return d == 1 || d == -1;
}

std::optional<RatInverse> rational_inverse(const IntMat& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    long n = a.rows();
    // Gauss-Jordan over Q, then clear denominators.
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(2 * n, Rat(0)));
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) w[i][j] = Rat(a.at(i, j));
        w[i][n + i] = 1;
    }
    for (long k = 0; k < n; ++k) {
        long piv = -1;
        for (long i = k; i < n; ++i)
            if (w[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(w[k], w[piv]);
        Rat inv = 1 / w[k][k];
        for (long j = k; j < 2 * n; ++j) {
            w[k][j] *= inv;
            w[k][j].canonicalize();
        }
        for (long i = 0; i < n; ++i) {
            if (i == k || w[i][k] == 0) continue;
            Rat f = w[i][k];
            for (long j = k; j < 2 * n; ++j) {
                w[i][j] -= f * w[k][j];
                w[i][j].canonicalize();
            }
        }
    }
    Int den(1);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Int d = w[i][n + j].get_den();
            den = den / gcd(den, d) * d;
        }
    RatInverse out{IntMat(n, n), den};
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Rat v = w[i][n + j] * Rat(den);
            v.canonicalize();
            out.num.at(i, j) = v.get_num();
        }
    return out;
}

std::optional<std::vector<Rat>> solve_left(const IntMat& a, const std::vector<Rat>& b) {
    // x A = b  <=>  A^T x^T = b^T
    long n = a.rows();
    if (static_cast<long>(b.size()) != a.cols()) throw error("solve_left shape mismatch");
    std::vector<std::vector<Rat>> w(a.cols(), std::vector<Rat>(n + 1, Rat(0)));
    for (long i = 0; i < a.cols(); ++i) {
        for (long j = 0; j < n; ++j) w[i][j] = Rat(a.at(j, i));
        w[i][n] = b[i];
    }
    long rank = 0;
    std::vector<long> pivot_col;
    for (long col = 0; col < n && rank < static_cast<long>(w.size()); ++col) {
        long piv = -1;
        for (long i = rank; i < static_cast<long>(w.size()); ++i)
            if (w[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(w[rank], w[piv]);
        Rat inv = 1 / w[rank][col];
        for (long j = col; j <= n; ++j) {
            w[rank][j] *= inv;
            w[rank][j].canonicalize();
        }
        for (long i = 0; i < static_cast<long>(w.size()); ++i) {
            if (i == rank || w[i][col] == 0) continue;
            Rat f = w[i][col];
            for (long j = col; j <= n; ++j) {
                w[i][j] -= f * w[rank][j];
                w[i][j].canonicalize();
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (long i = rank; i < static_cast<long>(w.size()); ++i)
        if (w[i][n] != 0) return std::nullopt;  // inconsistent
    std::vector<Rat> x(n, Rat(0));
    for (long i = 0; i < rank; ++i) x[pivot_col[i]] = w[i][n];
    return x;
}

namespace {

int cmpabs_int(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Column-reduce [A over I]: returns the unimodular V with A*V column-style
// Hermite-reduced; zero columns of A*V mark kernel vectors (columns of V).
void column_hermite(IntMat& a, IntMat& v) {
    long rows = a.rows(), cols = a.cols();
    v = IntMat::identity(cols);
    long col = 0;
    for (long row = 0; row < rows && col < cols; ++row) {
        // gcd sweep on row entries from `col` on
        while (true) {
            long nz = -1;
            for (long j = col; j < cols; ++j)
                if (a.at(row, j) != 0) {
                    nz = j;
                    break;
                }
            if (nz < 0) break;
            // move minimal absolute nonzero to `col`
            long best = nz;
            for (long j = nz + 1; j < cols; ++j)
                if (a.at(row, j) != 0 && cmpabs_int(a.at(row, j), a.at(row, best)) < 0)
                    best = j;
            if (best != col)
                for (long i = 0; i < rows; ++i) std::swap(a.at(i, col), a.at(i, best));
            if (best != col)
                for (long i = 0; i < cols; ++i) std::swap(v.at(i, col), v.at(i, best));
            bool reduced = true;
            for (long j = col + 1; j < cols; ++j) {
                if (a.at(row, j) == 0) continue;
                Int q = a.at(row, j) / a.at(row, col);  // truncated division is fine here
                if (q != 0) {
                    for (long i = 0; i < rows; ++i) a.at(i, j) -= q * a.at(i, col);
                    for (long i = 0; i < cols; ++i) v.at(i, j) -= q * v.at(i, col);
                }
                if (a.at(row, j) != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (a.at(row, col) != 0) ++col;
    }
}

}  // namespace

IntMat kernel_saturated(const IntMat& a) {
    IntMat work = a, v;
    column_hermite(work, v);
    std::vector<long> zero_cols;
    for (long j = 0; j < work.cols(); ++j) {
        bool zero = true;
        for (long i = 0; i < work.rows(); ++i)
            if (work.at(i, j) != 0) {
                zero = false;
                break;
            }
        if (zero) zero_cols.push_back(j);
    }
    IntMat out(static_cast<long>(zero_cols.size()), a.cols());
    for (size_t r = 0; r < zero_cols.size(); ++r)
        for (long i = 0; i < a.cols(); ++i) out.at(static_cast<long>(r), i) = v.at(i, zero_cols[r]);
    return out;
}

std::vector<Int> smith_invariants(IntMat a) {
    long rows = a.rows(), cols = a.cols();
    std::vector<Int> inv;
    long top = 0;
    while (top < rows && top < cols) {
        // find a nonzero pivot
        long pi = -1, pj = -1;
        for (long i = top; i < rows && pi < 0; ++i)
            for (long j = top; j < cols; ++j)
                if (a.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        // smallest absolute value pivot to limit growth
        for (long i = top; i < rows; ++i)
            for (long j = top; j < cols; ++j)
                if (a.at(i, j) != 0 && cmpabs_int(a.at(i, j), a.at(pi, pj)) < 0) {
                    pi = i;
                    pj = j;
                }
        for (long j = 0; j < cols; ++j) std::swap(a.at(top, j), a.at(pi, j));
        for (long i = 0; i < rows; ++i) std::swap(a.at(i, top), a.at(i, pj));
        bool again = true;
        while (again) {
            again = false;
            for (long i = top + 1; i < rows; ++i) {
                if (a.at(i, top) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, top).get_mpz_t(), a.at(top, top).get_mpz_t());
                for (long j = 0; j < cols; ++j) a.at(i, j) -= q * a.at(top, j);
                if (a.at(i, top) != 0) {
                    for (long j = 0; j < cols; ++j) std::swap(a.at(top, j), a.at(i, j));
                    again = true;
                }
            }
            for (long j = top + 1; j < cols; ++j) {
                if (a.at(top, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(top, j).get_mpz_t(), a.at(top, top).get_mpz_t());
                for (long i = 0; i < rows; ++i) a.at(i, j) -= q * a.at(i, top);
                if (a.at(top, j) != 0) {
                    for (long i = 0; i < rows; ++i) std::swap(a.at(i, top), a.at(i, j));
                    again = true;
                }
            }
        }
        // divisibility fix-up: pivot must divide everything below-right
        bool clean = false;
        while (!clean) {
            clean = true;
            for (long i = top + 1; i < rows && clean; ++i)
                for (long j = top + 1; j < cols && clean; ++j) {
                    if (a.at(i, j) % a.at(top, top) != 0) {
                        for (long jj = 0; jj < cols; ++jj) a.at(top, jj) += a.at(i, jj);
                        // re-clear the row/column
                        bool again2 = true;
                        while (again2) {
                            again2 = false;
                            for (long ii = top + 1; ii < rows; ++ii) {
                                if (a.at(ii, top) == 0) continue;
                                Int q;
                                mpz_fdiv_q(q.get_mpz_t(), a.at(ii, top).get_mpz_t(),
                                           a.at(top, top).get_mpz_t());
                                for (long jj = 0; jj < cols; ++jj)
                                    a.at(ii, jj) -= q * a.at(top, jj);
                                if (a.at(ii, top) != 0) {
                                    for (long jj = 0; jj < cols; ++jj)
                                        std::swap(a.at(top, jj), a.at(ii, jj));
                                    again2 = true;
                                }
                            }
                            for (long jj = top + 1; jj < cols; ++jj) {
                                if (a.at(top, jj) == 0) continue;
                                Int q;
                                mpz_fdiv_q(q.get_mpz_t(), a.at(top, jj).get_mpz_t(),
                                           a.at(top, top).get_mpz_t());
                                for (long ii = 0; ii < rows; ++ii)
                                    a.at(ii, jj) -= q * a.at(ii, top);
                                if (a.at(top, jj) != 0) {
                                    for (long ii = 0; ii < rows; ++ii)
                                        std::swap(a.at(ii, top), a.at(ii, jj));
                                    again2 = true;
                                }
                            }
                        }
                        clean = false;
                    }
                }
        }
        inv.push_back(abs(a.at(top, top)));
        ++top;
    }
    return inv;
}

Int saturation_index(const IntMat& basis) {
    auto inv = smith_invariants(basis);
    if (static_cast<long>(inv.size()) < basis.rows())
        throw error("saturation_index requires independent rows");
    Int idx(1);
    for (const auto& d : inv) idx *= d;
    return idx;
}

std::optional<std::vector<Rat>> coords_in_basis(const IntMat& basis, const std::vector<Int>& v) {
    std::vector<Rat> b(v.size());
    for (size_t i = 0; i < v.size(); ++i) b[i] = Rat(v[i]);
    return solve_left(basis, b);
}

bool lattice_contains(const IntMat& basis, const IntMat& sub) {
    for (long i = 0; i < sub.rows(); ++i) {
        std::vector<Int> v(sub.cols());
        for (long j = 0; j < sub.cols(); ++j) v[j] = sub.at(i, j);
        auto c = coords_in_basis(basis, v);
        if (!c) return false;
        for (const auto& x : *c)
            if (x.get_den() != 1) return false;
    }
    return true;
}

Int lattice_index(const IntMat& super, const IntMat& sub) {
    if (super.rows() != sub.rows()) throw error("lattice_index requires equal ranks");
    long r = super.rows();
    std::vector<std::vector<Rat>> coords;
    for (long i = 0; i < r; ++i) {
        std::vector<Int> v(sub.cols());
        for (long j = 0; j < sub.cols(); ++j) v[j] = sub.at(i, j);
        auto c = coords_in_basis(super, v);
        if (!c) throw error("lattice_index: sub not contained in super's span");
        coords.push_back(*c);
    }
    // determinant of the rational coordinate matrix; must be a nonzero integer
    // up to sign for genuine containment of equal rank.
    Int den(1);
    for (auto& row : coords)
        for (auto& x : row) {
            Int d = x.get_den();
            den = den / gcd(den, d) * d;
        }
    IntMat m(r, r);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j) {
            Rat v = coords[i][j] * Rat(den);
            v.canonicalize();
            m.at(i, j) = v.get_num();
        }
    Int d = abs(det(m));
    Int denpow(1);
    for (long i = 0; i < r; ++i) denpow *= den;
    if (d % denpow != 0) throw error("lattice_index: sub not an integer sublattice of super");
    return d / denpow;
}

}  // namespace mlk
