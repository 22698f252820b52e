#pragma once
#include "hypertoric/datum.hpp"
#include "hypertoric/matroid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypertoric {

// Canonical isomorphism-class label.
struct ClassLabel {
    enum class Kind { SurfaceProduct, OminTriple, Catalog6, Other };
    Kind kind = Kind::Other;
    std::vector<std::size_t> multiplicities;  // canonical order for the class
    int catalog_index = 0;                    // 3..7 for Catalog6
    // permutation-invariant matroid fingerprint for Other
    std::vector<long long> fingerprint;

    bool operator==(const ClassLabel& o) const {
        return kind == o.kind && multiplicities == o.multiplicities &&
               catalog_index == o.catalog_index && fingerprint == o.fingerprint;
    }
    std::string to_string() const;
};

struct EquivalenceWitness {
    IntMatrix p;  // d x d, det +-1
    IntMatrix d;  // n x n signed permutation
};

// The reduced simplification matrices of the rank-2 and rank-3 catalogs
// (indices 1..7); entry i-1 holds the catalog matrix with i as in the
// classification of 4- and 6-dimensional varieties.
const std::vector<IntMatrix>& catalog_matrices();
const std::vector<Graph>& catalog_graphs();

// Conical symplectic isomorphism of Y(a,0) and Y(a',0), decided through
// the vector matroids of the reduced pairs.
struct IsoResult {
    bool isomorphic = false;
    std::optional<GroundBijection> witness;  // on the reduced ground sets
};

IsoResult isomorphic(const IntMatrix& a, const IntMatrix& a2);

// Best-effort search for (p, d) with a2 = p * a * d; budget counts sign
// assignments tried across matroid-isomorphism candidates.
std::optional<EquivalenceWitness> equivalence_witness(const IntMatrix& a, const IntMatrix& a2,
                                                      std::size_t budget = 1000000);

ClassLabel classify4(const IntMatrix& a);
ClassLabel classify6(const IntMatrix& a);
// Total: dispatches on the reduced dimension, Other elsewhere.
ClassLabel classify(const IntMatrix& a);

bool quiver_iso(const Graph& g1, const Graph& g2);

} // namespace hypertoric
