#pragma once
#include "hypertoric/datum.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hypertoric {

// A monomial generator of the invariant ring: either a quadric z_i w_i or
// f_beta = prod z_i^(beta_i > 0) * prod w_i^(-beta_i < 0) with beta in the
// image lattice of b.
struct RingGenerator {
    std::vector<std::size_t> z_exponents;
    std::vector<std::size_t> w_exponents;

    std::size_t degree() const {
        std::size_t d = 0;
        for (std::size_t e : z_exponents) d += e;
        for (std::size_t e : w_exponents) d += e;
        return d;
    }
    bool is_quadric() const;                       // z_i w_i form
    std::optional<std::size_t> quadric_index() const;
    IntVec beta() const;                           // z - w exponent vector
    std::string label() const;                     // e.g. "z1*w2"

    bool operator==(const RingGenerator& o) const {
        return z_exponents == o.z_exponents && w_exponents == o.w_exponents;
    }
    bool operator<(const RingGenerator& o) const;
};

struct RingGenerators {
    std::vector<RingGenerator> generators;  // sorted by (degree, exponents)
    bool bound_too_small = false;   // no f_beta fit under the degree bound
    bool boundary_warning = false;  // an irreducible sits exactly at the bound
    std::size_t degree_bound = 0;
};

std::size_t default_degree_bound(const HypertoricDatum& datum);

// Irreducible elements of the invariant monoid up to the degree bound:
// the n quadrics z_i w_i plus every f_beta admitting no sign-compatible
// splitting inside the image lattice.
RingGenerators ring_generators(const HypertoricDatum& datum, std::size_t degree_bound);

struct BracketTerm {
    Int coefficient;
    std::vector<RingGenerator> numerator;     // product of generators
    std::optional<std::size_t> denominator;   // index k of a dividing z_k w_k
};

// Symbolic Poisson bracket of two generators:
//   {z_j w_j, z_k w_k} = 0
//   {f_beta, z_k w_k}  = beta_k f_beta
//   {f_beta, f_gamma}  = sum over beta_j gamma_j < 0 of
//                        beta_j |gamma_j| f_beta f_gamma / (z_j w_j)
std::vector<BracketTerm> poisson_bracket(const RingGenerator& g1, const RingGenerator& g2);

} // namespace hypertoric
