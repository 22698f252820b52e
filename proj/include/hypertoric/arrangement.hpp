#pragma once
#include "hypertoric/exact_linalg.hpp"
#include "hypertoric/poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hypertoric {

struct HypertoricDatum;

// Central rational hyperplane arrangement: deduplicated primitive normal
// covectors, sign-normalized (first nonzero positive) and sorted.
struct Arrangement {
    std::size_t ambient_dim = 0;
    std::vector<IntVec> normals;

    Arrangement() = default;
    explicit Arrangement(std::size_t dim) : ambient_dim(dim) {}

    // Canonicalizes and inserts; zero covectors are rejected.
    void add_normal(IntVec v);
    void finalize();  // sort + dedupe
    std::size_t size() const { return normals.size(); }
};

// H_A: all codimension-one subspaces spanned by subsets of the columns.
// Requires full row rank.
Arrangement from_columns(const IntMatrix& a);

// The triple-sum-plus-differences arrangement in R^(l1+l2+l3):
// x_i + y_j + z_k = 0 together with all in-group difference hyperplanes.
Arrangement edelman_reiner_arrangement(int l1, int l2, int l3);

struct IntersectionPoset {
    struct Flat {
        RationalSubspace space;            // the flat as a subspace of R^d
        std::vector<std::uint64_t> hset;   // hyperplanes containing the flat
        int rank = 0;                      // codimension
        int dim = 0;
        long long mobius = 0;
        bool contains_hyperplane(std::size_t i) const {
            return (hset[i >> 6] >> (i & 63)) & 1u;
        }
    };
    std::size_t ambient_dim = 0;
    std::vector<Flat> flats;  // sorted by (rank, canonical basis)

    // order: x <= y iff x contains y as a subspace
    bool leq(std::size_t x, std::size_t y) const;
};

IntersectionPoset intersection_poset(const Arrangement& arr);

enum class ChiMethod { Poset, DeletionRestriction, FiniteField };

struct ChiOptions {
    ChiMethod method = ChiMethod::Poset;
    std::uint64_t finite_field_prime = 0;      // 0 = auto above the bound
    std::uint64_t enumeration_budget = 100000000;  // finite-field points
    std::size_t flat_cap = 2000000;            // poset fallback threshold
};

// Characteristic polynomial; all methods agree, cross-checked in tests.
Poly char_poly(const Arrangement& arr, const ChiOptions& opts = {});

struct FiniteFieldCount {
    Int count;
    bool small_prime_warning = false;  // p at or below the subdeterminant bound
};

// |F_p^d minus the union of the reduced hyperplanes| by direct enumeration.
FiniteFieldCount char_poly_finite_field(const Arrangement& arr, std::uint64_t p,
                                        std::uint64_t budget = 100000000);

// Hadamard-style bound on the absolute subdeterminants of the normal
// matrix; primes above it make the finite-field count authoritative.
Int subdeterminant_bound(const Arrangement& arr);

// Number of chambers, (-1)^d chi(-1).
Int chamber_count(const Arrangement& arr, const ChiOptions& opts = {});

// Sign vector of alpha against every hyperplane; nullopt when alpha lies
// on a wall.
std::optional<std::vector<int>> chamber_of(const IntVec& alpha, const Arrangement& arr);

struct ErClosedForm {
    Poly chi;
    Int chambers;
};

// Closed-form characteristic polynomial and chamber count for the
// triple-sum arrangement with l3 in {1, 2}; used purely as an oracle.
ErClosedForm er_closed_form(int l1, int l2, int l3);

// r(H_A) / |W_B| with exact division enforced (NotDivisible signals a bug).
Int crepant_resolution_count(const HypertoricDatum& datum, const ChiOptions& opts = {});

namespace detail {

// Streamed scan of the intersection lattice. Flats are reported level by
// level in a deterministic order with their Mobius values; heavy callers
// (char_poly) use this without materializing subspace objects.
struct FlatScan {
    std::vector<IntMatrix> normal_bases;       // canonical row basis per flat
    std::vector<std::vector<std::uint64_t>> hsets;
    std::vector<int> ranks;
    std::vector<long long> mobius;
    std::size_t ambient_dim = 0;
    std::size_t n_hyperplanes = 0;
};

FlatScan scan_flats(std::size_t dim, const std::vector<IntVec>& normals, std::size_t flat_cap);

} // namespace detail

} // namespace hypertoric
