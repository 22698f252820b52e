#include "hypertoric/exact_linalg.hpp"

#include <algorithm>
#include <cassert>

namespace hypertoric {

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(i, k), m(j, k));
}
void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < m.rows(); ++k) std::swap(m(k, i), m(k, j));
}
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    if (f == 0) return;
    for (std::size_t k = 0; k < m.cols(); ++k) m(dst, k) += f * m(src, k);
}
void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    if (f == 0) return;
    for (std::size_t k = 0; k < m.rows(); ++k) m(k, dst) += f * m(k, src);
}
void negate_row(IntMatrix& m, std::size_t i) {
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = -m(i, k);
}

} // namespace

SmithDecomposition smith_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    SmithDecomposition d{m, IntMatrix::identity(r), IntMatrix::identity(c)};
    IntMatrix& S = d.S;
    IntMatrix& U = d.U;
    IntMatrix& V = d.V;
    const std::size_t nmin = std::min(r, c);

    for (std::size_t t = 0; t < nmin; ++t) {
        for (;;) {
            // locate the nonzero entry of minimal absolute value in S[t:,t:]
            std::size_t pi = t, pj = t;
            Int best = 0;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j) {
                    if (S(i, j) == 0) continue;
                    Int a = abs(S(i, j));
                    if (best == 0 || a < best) { best = a; pi = i; pj = j; }
                }
            if (best == 0) break;   // remaining block is zero
            swap_rows(S, t, pi); swap_rows(U, t, pi);
            swap_cols(S, t, pj); swap_cols(V, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i)
                if (S(i, t) != 0) {
                    Int q = S(i, t) / S(t, t);
                    add_row(S, i, t, -q); add_row(U, i, t, -q);
                    if (S(i, t) != 0) clean = false;
                }
            for (std::size_t j = t + 1; j < c; ++j)
                if (S(t, j) != 0) {
                    Int q = S(t, j) / S(t, t);
                    add_col(S, j, t, -q); add_col(V, j, t, -q);
                    if (S(t, j) != 0) clean = false;
                }
            if (!clean) continue;

            // pivot divides the rest of the block, or pull a bad row in
            bool divides = true;
            std::size_t bi = 0;
            for (std::size_t i = t + 1; i < r && divides; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (S(i, j) % S(t, t) != 0) { divides = false; bi = i; break; }
            if (divides) break;
            add_row(S, t, bi, 1); add_row(U, t, bi, 1);
        }
        if (S(t, t) < 0) { negate_row(S, t); negate_row(U, t); }
    }
    return d;
}

std::size_t rank_rational(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t r = a.rows(), c = a.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < c && rank < r; ++col) {
        std::size_t piv = rank;
        while (piv < r && a(piv, col) == 0) ++piv;
        if (piv == r) continue;
        swap_rows(a, rank, piv);
        for (std::size_t i = rank + 1; i < r; ++i) {
            if (a(i, col) == 0) continue;
            Int g = gcd(a(rank, col), a(i, col));
            Int f1 = a(rank, col) / g, f2 = a(i, col) / g;
            for (std::size_t j = col; j < c; ++j)
                a(i, j) = f1 * a(i, j) - f2 * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw error(errc::dimension_mismatch, "det of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    // Bareiss
    IntMatrix a = m;
    Int prev = 1;
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && a(s, k) == 0) ++s;
            if (s == n) return 0;
            swap_rows(a, k, s);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sgn > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

IntMatrix hermite_row_form(const IntMatrix& m) {
    IntMatrix h = m;
    const std::size_t rows = h.rows(), cols = h.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        // gcd-eliminate below position (r, col)
        for (;;) {
            std::size_t piv = rows;
            Int best = 0;
            for (std::size_t i = r; i < rows; ++i)
                if (h(i, col) != 0) {
                    Int a = abs(h(i, col));
                    if (best == 0 || a < best) { best = a; piv = i; }
                }
            if (piv == rows) break;
            swap_rows(h, r, piv);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i)
                if (h(i, col) != 0) {
                    Int q = h(i, col) / h(r, col);
                    add_row(h, i, r, -q);
                    if (h(i, col) != 0) done = false;
                }
            if (done) break;
        }
        if (r < rows && h(r, col) != 0) {
            if (h(r, col) < 0) negate_row(h, r);
            // reduce entries above the pivot into [0, pivot)
            for (std::size_t i = 0; i < r; ++i) {
                Int q = h(i, col) / h(r, col);
                if (h(i, col) - q * h(r, col) < 0) q -= 1;
                add_row(h, i, r, -q);
            }
            ++r;
        }
    }
    // drop zero rows
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < rows; ++i) {
        bool z = true;
        for (std::size_t j = 0; j < cols; ++j)
            if (h(i, j) != 0) { z = false; break; }
        if (!z) keep.push_back(i);
    }
    return h.select_rows(keep);
}

bool is_surjective_over_Z(const IntMatrix& a) {
    if (a.rows() == 0) return true;
    if (a.cols() < a.rows()) return false;
    auto f = smith_form(a).invariant_factors();
    if (f.size() != a.rows()) return false;
    for (const Int& x : f)
        if (x != 1) return false;
    return true;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    if (!is_surjective_over_Z(a))
        throw error(errc::not_surjective, "kernel_basis requires a surjective map");
    auto d = smith_form(a);
    std::vector<std::size_t> idx;
    for (std::size_t j = a.rows(); j < a.cols(); ++j) idx.push_back(j);
    return d.V.select_cols(idx);
}

IntMatrix kernel_lattice(const IntMatrix& a) {
    auto d = smith_form(a);
    std::size_t r = d.invariant_factors().size();
    std::vector<std::size_t> idx;
    for (std::size_t j = r; j < a.cols(); ++j) idx.push_back(j);
    return d.V.select_cols(idx);
}

IntMatrix cokernel_matrix(const IntMatrix& b) {
    const std::size_t n = b.rows(), k = b.cols();
    if (k > n) throw error(errc::invalid_input, "more columns than rows");
    auto d = smith_form(b);
    auto f = d.invariant_factors();
    if (f.size() != k) throw error(errc::invalid_input, "columns are dependent");
    for (const Int& x : f)
        if (x != 1) throw error(errc::cokernel_not_free, "cokernel has torsion");
    // U*b*V = [I_k; 0]  =>  bottom n-k rows of U annihilate b and are onto.
    std::vector<std::size_t> idx;
    for (std::size_t i = k; i < n; ++i) idx.push_back(i);
    return d.U.select_rows(idx);
}

IntMatrix integral_complement(const IntMatrix& lattice_basis) {
    const std::size_t n = lattice_basis.rows(), k = lattice_basis.cols();
    auto d = smith_form(lattice_basis);
    auto f = d.invariant_factors();
    if (f.size() != k) throw error(errc::invalid_input, "columns are dependent");
    for (const Int& x : f)
        if (x != 1) throw error(errc::invalid_input, "lattice not saturated");
    // U*K*V = [I;0]; K*V = first k columns of U^-1, complement = last n-k.
    // Compute U^-1 by solving with the recorded row operations: invert via
    // adjugate-free route: U is unimodular, invert by Smith on U itself.
    auto du = smith_form(d.U);
    // du.U * U * du.V = I  =>  U^-1 = du.V * du.U.
    IntMatrix uinv = du.V * du.U;
    std::vector<std::size_t> idx;
    for (std::size_t j = k; j < n; ++j) idx.push_back(j);
    return uinv.select_cols(idx);
}

namespace {

// Enumerate k-subsets of [0,n) in lexicographic order, invoking fn on each;
// fn returning false aborts the walk.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (!fn(idx)) return;
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) break;
            if (i == 0) return;
        }
        if (idx[i] == i + n - k) return;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

bool is_unimodular(const IntMatrix& a, std::size_t minor_guard) {
    const std::size_t d = a.rows(), n = a.cols();
    if (rank_rational(a) != d) throw error(errc::rank_deficient, "matrix does not have full row rank");
    if (n > minor_guard)
        throw error(errc::size_guard, "minor enumeration refused above guard size");
    if (d == 0) return true;
    bool ok = true;
    for_each_subset(n, d, [&](const std::vector<std::size_t>& idx) {
        Int m = det(a.select_cols(idx));
        if (m < -1 || m > 1) { ok = false; return false; }
        return true;
    });
    return ok;
}

bool is_totally_unimodular(const IntMatrix& c, std::size_t minor_guard) {
    const std::size_t r = c.rows(), n = c.cols();
    if (std::max(r, n) > minor_guard)
        throw error(errc::size_guard, "minor enumeration refused above guard size");
    bool ok = true;
    for (std::size_t k = 1; k <= std::min(r, n) && ok; ++k) {
        for_each_subset(r, k, [&](const std::vector<std::size_t>& ri) {
            IntMatrix sub = c.select_rows(ri);
            for_each_subset(n, k, [&](const std::vector<std::size_t>& ci) {
                Int m = det(sub.select_cols(ci));
                if (m < -1 || m > 1) { ok = false; return false; }
                return true;
            });
            return ok;
        });
    }
    return ok;
}

std::optional<IntVec> solve_integral(const IntMatrix& b, const IntVec& v) {
    if (v.size() != b.rows()) throw error(errc::dimension_mismatch, "vector length");
    // Fraction-free elimination on [b | v].
    const std::size_t n = b.rows(), k = b.cols();
    IntMatrix a(n, k + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) a(i, j) = b(i, j);
        a(i, k) = v[i];
    }
    std::vector<std::size_t> pivot_row;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) return std::nullopt;  // dependent columns not expected
        swap_rows(a, rank, piv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || a(i, col) == 0) continue;
            Int g = gcd(a(rank, col), a(i, col));
            Int f1 = a(rank, col) / g, f2 = a(i, col) / g;
            for (std::size_t j = 0; j <= k; ++j)
                a(i, j) = f1 * a(i, j) - f2 * a(rank, j);
        }
        pivot_row.push_back(rank);
        ++rank;
    }
    if (rank != k) return std::nullopt;
    // consistency: zero rows of the b-part must have zero rhs
    for (std::size_t i = rank; i < n; ++i)
        if (a(i, k) != 0) return std::nullopt;
    IntVec x(k);
    for (std::size_t j = 0; j < k; ++j) {
        // row j: a(j,j') nonzero only at its own pivot column after full
        // elimination; pivot columns were processed in order.
        Int num = a(j, k), den = a(j, j);
        if (num % den != 0) return std::nullopt;
        x[j] = num / den;
    }
    return x;
}

bool lattice_contains(const IntMatrix& b, const IntVec& v) {
    bool zero = true;
    for (const Int& x : v)
        if (x != 0) { zero = false; break; }
    if (zero) return true;
    if (b.cols() == 0) return false;
    return solve_integral(b, v).has_value();
}

bool lattices_equal(const IntMatrix& b1, const IntMatrix& b2) {
    if (b1.rows() != b2.rows()) return false;
    return hermite_row_form(b1.transpose()) == hermite_row_form(b2.transpose());
}

IntMatrix lawrence_lift(const IntMatrix& b) {
    const std::size_t n = b.rows(), k = b.cols();
    IntMatrix l(2 * n, k + n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) l(i, j) = b(i, j);
        l(i, k + i) = 1;
        l(n + i, k + i) = 1;
    }
    return l;
}

RationalSubspace RationalSubspace::span_of_rows(const IntMatrix& generators) {
    RationalSubspace s(generators.cols());
    for (std::size_t i = 0; i < generators.rows(); ++i) {
        IntVec v = s.reduce(generators.row(i));
        bool nz = false;
        for (const Int& x : v)
            if (x != 0) { nz = true; break; }
        if (nz) s.extend(v);
    }
    return s;
}

IntMatrix RationalSubspace::basis_matrix() const {
    IntMatrix m(basis_.size(), ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i) m.set_row(i, basis_[i]);
    return m;
}

IntVec RationalSubspace::reduce(IntVec v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (v[p] == 0) continue;
        const Int& piv = basis_[i][p];
        Int g = gcd(piv, v[p]);
        Int f1 = piv / g, f2 = v[p] / g;
        for (std::size_t j = 0; j < ambient_; ++j)
            v[j] = f1 * v[j] - f2 * basis_[i][j];
    }
    normalize_primitive(v);
    return v;
}

bool RationalSubspace::contains(const IntVec& v) const {
    IntVec r = reduce(v);
    for (const Int& x : r)
        if (x != 0) return false;
    return true;
}

bool RationalSubspace::contains_subspace(const RationalSubspace& other) const {
    for (const auto& row : other.basis_)
        if (!contains(row)) return false;
    return true;
}

void RationalSubspace::extend(const IntVec& vin) {
    IntVec v = reduce(vin);
    std::size_t p = 0;
    while (p < ambient_ && v[p] == 0) ++p;
    assert(p < ambient_ && "extend called with a contained vector");
    // clear column p from existing rows
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        IntVec& r = basis_[i];
        if (r[p] == 0) continue;
        Int g = gcd(v[p], r[p]);
        Int f1 = v[p] / g, f2 = r[p] / g;
        for (std::size_t j = 0; j < ambient_; ++j) r[j] = f1 * r[j] - f2 * v[j];
        normalize_primitive(r);
    }
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    basis_.insert(basis_.begin() + at, v);
    pivots_.insert(pivots_.begin() + at, p);
}

} // namespace hypertoric
