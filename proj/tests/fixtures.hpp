#pragma once
#include "hypertoric/int_matrix.hpp"
#include "hypertoric/graph.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace fixtures {

using hypertoric::Int;
using hypertoric::IntMatrix;
using hypertoric::IntVec;

// The (l1+l2+l3-2) x (l1+l2+l3) matrix whose hypertoric variety is the
// triple-power deformation of the minimal sl3 orbit closure: two mixing
// columns followed by an identity block per group.
inline IntMatrix omin_matrix(int l1, int l2, int l3) {
    const int d = l1 + l2 + l3 - 2, n = l1 + l2 + l3;
    IntMatrix a{std::size_t(d), std::size_t(n)};
    int row = 0;
    for (int i = 0; i < l1 - 1; ++i, ++row) {
        a(row, 0) = -1;
        a(row, std::size_t(2 + i)) = 1;
    }
    for (int j = 0; j < l2 - 1; ++j, ++row) {
        a(row, 1) = -1;
        a(row, std::size_t(2 + (l1 - 1) + j)) = 1;
    }
    for (int k = 0; k < l3; ++k, ++row) {
        a(row, 0) = 1;
        a(row, 1) = 1;
        a(row, std::size_t(2 + (l1 - 1) + (l2 - 1) + k)) = 1;
    }
    return a;
}

// d x (d+1) matrix [I | -1] of the A_d surface singularity.
inline IntMatrix surface_matrix(int m) {
    IntMatrix a{std::size_t(m), std::size_t(m) + 1};
    for (int i = 0; i < m; ++i) {
        a(i, std::size_t(i)) = 1;
        a(i, std::size_t(m)) = -1;
    }
    return a;
}

// Block-diagonal all-ones rows, one block of width l+1 per entry.
inline IntMatrix block_ones_matrix(const std::vector<int>& ells) {
    std::vector<IntMatrix> blocks;
    for (int l : ells) {
        IntMatrix row{1, std::size_t(l) + 1};
        for (int j = 0; j <= l; ++j) row(0, std::size_t(j)) = 1;
        blocks.push_back(row);
    }
    return IntMatrix::block_diag(blocks);
}

// Random GL_d(Z) element as a short product of elementary operations.
inline IntMatrix random_gl(std::size_t d, std::mt19937_64& rng, int ops = 8) {
    IntMatrix p = IntMatrix::identity(d);
    if (d == 0) return p;
    std::uniform_int_distribution<std::size_t> pick(0, d - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int t = 0; t < ops; ++t) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) {
            if (coef(rng) < 0)
                for (std::size_t k = 0; k < d; ++k) p(i, k) = -p(i, k);
            continue;
        }
        Int c = coef(rng);
        for (std::size_t k = 0; k < d; ++k) p(i, k) += c * p(j, k);
    }
    return p;
}

// Random signed permutation matrix.
inline IntMatrix random_signed_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMatrix d(n, n);
    std::uniform_int_distribution<int> s(0, 1);
    for (std::size_t i = 0; i < n; ++i) d(i, perm[i]) = s(rng) ? 1 : -1;
    return d;
}

// Random connected multigraph; unimodular inputs come from these.
inline hypertoric::Graph random_connected_graph(std::size_t vertices, std::size_t extra_edges,
                                                std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t v = 1; v < vertices; ++v) {
        std::uniform_int_distribution<std::size_t> parent(0, v - 1);
        edges.emplace_back(int(parent(rng)), int(v));
    }
    std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
    while (edges.size() < vertices - 1 + extra_edges) {
        std::size_t u = pick(rng), v = pick(rng);
        if (u == v) continue;
        edges.emplace_back(int(u), int(v));
    }
    return hypertoric::Graph(vertices, std::move(edges));
}

// Independent determinant for oracle checks: cofactor expansion.
inline Int cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) cols.push_back(k);
        Int sub = cofactor_det(m.select_rows(rows).select_cols(cols));
        sum += (j % 2 == 0 ? m(0, j) : -m(0, j)) * sub;
    }
    return sum;
}

} // namespace fixtures
