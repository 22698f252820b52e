#pragma once
#include "hypertoric/exact_linalg.hpp"
#include "hypertoric/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace hypertoric {

// Ground-set bijection [n] -> [n]; perm[i] is the image of element i.
struct GroundBijection {
    std::vector<int> perm;
};

// Represented matroid on ground set [n] with the bases stored explicitly
// as bitmasks (ground sizes here stay small; the binding cost is
// isomorphism search, not storage).
class Matroid {
public:
    Matroid(int n, int rank, std::vector<std::uint32_t> bases);

    int ground_size() const { return n_; }
    int rank() const { return rank_; }
    const std::vector<std::uint32_t>& bases() const { return bases_; }
    bool is_basis(std::uint32_t mask) const;

    // Rank of an arbitrary subset: max |B  S| over bases.
    int rank_of(std::uint32_t subset) const;

    bool is_loop(int e) const { return loop_mask_ & (1u << e); }
    std::uint32_t loop_mask() const { return loop_mask_; }

    // Bases-through-element counts, the cheap per-element invariant.
    const std::vector<int>& element_degrees() const { return degrees_; }

    const std::optional<IntMatrix>& representation() const { return rep_; }
    void set_representation(IntMatrix a) { rep_ = std::move(a); }

    // Checks the exchange axiom on every pair of bases (test support).
    bool satisfies_basis_exchange() const;

private:
    int n_, rank_;
    std::vector<std::uint32_t> bases_;   // sorted ascending
    std::uint32_t loop_mask_ = 0;
    std::vector<int> degrees_;
    std::optional<IntMatrix> rep_;
};

// Vector matroid of the columns of a over Q.
Matroid from_matrix(const IntMatrix& a);

Matroid dual(const Matroid& m);

struct ParallelClasses {
    std::vector<std::vector<int>> classes;  // non-loop elements, grouped
    std::vector<int> loops;
};

ParallelClasses parallel_classes(const Matroid& m);

// Finest partition of the ground set such that every circuit stays inside
// one block; loops are singleton blocks.
std::vector<std::vector<int>> connected_components(const Matroid& m);

// First isomorphism found by the fixed search order (elements in index
// order, candidate images ascending), or nullopt. Throws
// GroundSizeMismatch when the ground sizes differ.
std::optional<GroundBijection> is_isomorphic(const Matroid& m1, const Matroid& m2);

// Walk every isomorphism in the fixed search order; the callback returns
// false to stop early. Returns true when at least one was found.
bool for_each_isomorphism(const Matroid& m1, const Matroid& m2,
                          const std::function<bool(const GroundBijection&)>& fn);

// Matroid of the signed incidence matrix of a multigraph under a fixed
// orientation (the matroid does not depend on the orientation).
Matroid graph_matroid(const Graph& g);

// All circuits (minimal dependent sets); test oracle, exponential in n.
std::vector<std::uint32_t> circuits_brute_force(const Matroid& m);

// Circuit-size distribution (sorted), used for invariant pruning.
std::vector<int> circuit_size_profile(const Matroid& m);

} // namespace hypertoric
