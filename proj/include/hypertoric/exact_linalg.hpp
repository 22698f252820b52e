#pragma once
#include "hypertoric/int_matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hypertoric {

// U * M * V = S with S diagonal, successive divisibility on the diagonal,
// det(U), det(V) = +-1.
struct SmithDecomposition {
    IntMatrix S, U, V;
    IntVec invariant_factors() const {
        IntVec f;
        std::size_t k = std::min(S.rows(), S.cols());
        for (std::size_t i = 0; i < k; ++i)
            if (S(i, i) != 0) f.push_back(S(i, i));
        return f;
    }
};

SmithDecomposition smith_form(const IntMatrix& m);

// Rank over the rationals (fraction-free elimination).
std::size_t rank_rational(const IntMatrix& m);

// Determinant of a square matrix (Bareiss).
Int det(const IntMatrix& m);

// Canonical row-style Hermite normal form of the row lattice: pivots
// positive, zero below each pivot, entries above a pivot reduced into
// [0, pivot). Unique per row lattice, so it doubles as a lattice key.
IntMatrix hermite_row_form(const IntMatrix& m);

// True iff the map Z^cols -> Z^rows is onto, i.e. all invariant factors are 1.
bool is_surjective_over_Z(const IntMatrix& a);

// Saturated integer kernel: columns generate ker(a) as a direct summand of
// Z^n. Requires is_surjective_over_Z(a); throws NotSurjective otherwise.
IntMatrix kernel_basis(const IntMatrix& a);

// Saturated kernel without the surjectivity requirement (kernel of any map
// is saturated; this variant is used for subspace work).
IntMatrix kernel_lattice(const IntMatrix& a);

// For b with independent columns and free cokernel, a surjection
// a: Z^rows -> Z^(rows-cols) with a*b = 0 and exact sequence. Throws
// CokernelNotFree when the cokernel has torsion.
IntMatrix cokernel_matrix(const IntMatrix& b);

// Integral complement: columns c such that [kernel_lattice(rows) | c] is
// unimodular. Input is a saturated lattice basis (independent columns).
IntMatrix integral_complement(const IntMatrix& lattice_basis);

// All maximal minors lie in {-1,0,1}. Requires full row rank
// (RankDeficient otherwise); refuses cols > minor_guard (SizeGuard).
bool is_unimodular(const IntMatrix& a, std::size_t minor_guard = 24);

// Every square minor of every size lies in {-1,0,1}.
bool is_totally_unimodular(const IntMatrix& c, std::size_t minor_guard = 24);

// Membership of v in the column lattice of b (independent columns).
bool lattice_contains(const IntMatrix& b, const IntVec& v);

// Column lattices coincide (canonical Hermite forms agree).
bool lattices_equal(const IntMatrix& b1, const IntMatrix& b2);

// The 2n x (2n-d) block matrix [[B, I],[0, I]].
IntMatrix lawrence_lift(const IntMatrix& b);

// A linear subspace of Q^n in canonical form: reduced-echelon basis with
// cleared denominators, each row primitive, pivot columns ascending, first
// nonzero entry of each row positive. Two subspaces are equal iff the
// stored bases are identical.
class RationalSubspace {
public:
    explicit RationalSubspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    static RationalSubspace span_of_rows(const IntMatrix& generators);
    static RationalSubspace span_of_cols(const IntMatrix& generators) {
        return span_of_rows(generators.transpose());
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<IntVec>& basis_rows() const { return basis_; }
    IntMatrix basis_matrix() const;

    bool contains(const IntVec& v) const;
    bool contains_subspace(const RationalSubspace& other) const;

    // Reduce v against the basis (fraction-free); the result is zero iff
    // v lies in the subspace.
    IntVec reduce(IntVec v) const;

    // Insert a vector not in the subspace, keeping the canonical form.
    void extend(const IntVec& v);

    bool operator==(const RationalSubspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const RationalSubspace& o) const { return !(*this == o); }

private:
    std::size_t ambient_;
    std::vector<IntVec> basis_;    // canonical rows
    std::vector<std::size_t> pivots_;
};

// Exact rational solve b * x = v; returns x (rational as pair num/den per
// coordinate is avoided: returns x in lowest terms iff it is integral,
// std::nullopt when no rational solution or a non-integral one exists).
std::optional<IntVec> solve_integral(const IntMatrix& b, const IntVec& v);

} // namespace hypertoric
