#pragma once
#include "hypertoric/exact_linalg.hpp"
#include "hypertoric/graph.hpp"

#include <optional>
#include <vector>

namespace hypertoric {

// One parallel class of the reduced Gale configuration: a primitive
// sign-normalized covector together with its multiplicity.
struct ReducedClass {
    IntVec direction;
    std::size_t multiplicity = 0;
    std::vector<std::size_t> members;  // row indices into the reduced b
};

// Validated pair (A, B): A surjective over Z and unimodular, A*B = 0 with B
// a saturated kernel basis, zero rows of B already dropped. All derived
// invariants are computed against the reduced pair.
struct HypertoricDatum {
    IntMatrix a;                        // d x n, reduced
    IntMatrix b;                        // n x (n-d), reduced (no zero rows)
    std::vector<std::size_t> dropped_rows;  // indices in the input indexing
    std::vector<ReducedClass> reduced;  // sorted lexicographically
    std::size_t n = 0;                  // columns of a after reduction
    std::size_t d = 0;                  // rows of a after reduction

    std::size_t gale_dim() const { return n - d; }  // columns of b
};

HypertoricDatum from_matrix_a(const IntMatrix& a);
HypertoricDatum from_matrix_b(const IntMatrix& b);
HypertoricDatum from_graph(const Graph& g);

// Signed incidence matrix in the basis v0-v1, ..., v0-vd (edge u->v with
// u < v maps to e_v - e_u, the v0 coordinate dropped).
IntMatrix graph_incidence(const Graph& g);

// 2(n - d); invariant under reduction.
std::size_t dimension(const HypertoricDatum& datum);

struct NamikawaWeyl {
    std::vector<std::size_t> multiplicities;  // sorted descending
    Int order;                                // product of factorials
};

NamikawaWeyl namikawa_weyl(const HypertoricDatum& datum);

struct FlatStratum {
    std::vector<std::size_t> indices;  // F, subset of [n] (reduced indexing)
    int rank = 0;                      // codim of the common intersection
    std::size_t stratum_dim = 0;       // 2(n - d - rank)
    HypertoricDatum slice;
};

// All flats of the multi-arrangement of the rows of b, each with its slice
// datum built from the induced exact sequence.
std::vector<FlatStratum> flats(const HypertoricDatum& datum);

struct Codim2Slice {
    std::vector<std::size_t> indices;   // the parallel class F_k
    std::size_t multiplicity = 0;       // l_k >= 2
    std::size_t surface_type = 0;       // slice is the A_(l_k - 1) singularity
};

std::vector<Codim2Slice> codim2_slices(const HypertoricDatum& datum);

// Tests whether the degree-two part of the image lattice generates it; on
// success returns the multiset {l_k} of block sizes minus one (positive
// entries only), which identifies the variety as a product of minimal
// nilpotent orbit closures. Throws VerificationFailed when the lattice
// test passes but the block reconstruction does not match.
std::optional<std::vector<std::size_t>> degree_two_test(const HypertoricDatum& datum);

// alpha avoids every hyperplane of the arrangement of the columns of a.
bool is_generic(const IntVec& alpha, const HypertoricDatum& datum);

} // namespace hypertoric
