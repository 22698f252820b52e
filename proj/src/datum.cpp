#include "hypertoric/datum.hpp"
#include "hypertoric/arrangement.hpp"
#include "hypertoric/matroid.hpp"

#include <algorithm>
#include <map>

namespace hypertoric {

namespace {

// Group the rows of b into parallel classes. Rows of a unimodular kernel
// basis are primitive, so parallel means equal up to sign.
std::vector<ReducedClass> reduce_rows(const IntMatrix& b) {
    std::map<IntVec, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < b.rows(); ++i) {
        IntVec r = b.row(i);
        if (!normalize_primitive(r)) throw error(errc::invalid_input, "zero row after reduction");
        groups[r].push_back(i);
    }
    std::vector<ReducedClass> classes;
    for (auto& [dir, members] : groups)
        classes.push_back(ReducedClass{dir, members.size(), members});
    return classes;
}

HypertoricDatum build_datum(const IntMatrix& a_in, const IntMatrix& b_in,
                            std::vector<std::size_t> dropped) {
    HypertoricDatum datum;
    datum.a = a_in;
    datum.b = b_in;
    datum.dropped_rows = std::move(dropped);
    datum.n = a_in.cols();
    datum.d = a_in.rows();
    datum.reduced = reduce_rows(b_in);
    return datum;
}

} // namespace

HypertoricDatum from_matrix_a(const IntMatrix& a) {
    if (!is_surjective_over_Z(a))
        throw error(errc::not_surjective, "a is not surjective over Z");
    if (!is_unimodular(a))
        throw error(errc::not_unimodular, "a has a maximal minor outside {-1,0,1}");
    IntMatrix b = kernel_basis(a);

    std::vector<std::size_t> zero_rows, keep;
    for (std::size_t i = 0; i < b.rows(); ++i) {
        bool z = true;
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b(i, j) != 0) { z = false; break; }
        (z ? zero_rows : keep).push_back(i);
    }
    if (zero_rows.empty()) return build_datum(a, b, {});

    // dropping a zero row of b splits off a smooth factor; the reduced pair
    // is the cokernel presentation of the surviving rows
    IntMatrix br = b.select_rows(keep);
    IntMatrix ar = cokernel_matrix(br);
    IntMatrix b2 = kernel_basis(ar);
    return build_datum(ar, b2, std::move(zero_rows));
}

HypertoricDatum from_matrix_b(const IntMatrix& b) {
    const std::size_t n = b.rows(), k = b.cols();
    if (k > n) throw error(errc::invalid_input, "b must have at least as many rows as columns");
    if (rank_rational(b) != k) throw error(errc::invalid_input, "columns of b are dependent");
    auto f = smith_form(b).invariant_factors();
    for (const Int& x : f)
        if (x != 1) throw error(errc::cokernel_not_free, "cokernel of b has torsion");
    if (!is_unimodular(IntMatrix(b.transpose())))
        throw error(errc::not_unimodular, "b has a maximal minor outside {-1,0,1}");
    IntMatrix a = cokernel_matrix(b);
    return from_matrix_a(a);
}

IntMatrix graph_incidence(const Graph& g) {
    if (g.num_vertices < 2) throw error(errc::invalid_input, "need at least two vertices");
    const std::size_t d = g.num_vertices - 1, n = g.edges.size();
    IntMatrix a(d, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto [u, v] = g.edges[j];
        if (u > v) std::swap(u, v);
        // column is e_v - e_u in the basis v0-v1,...,v0-vd (row i <-> vertex i+1)
        if (v >= 1) a(std::size_t(v) - 1, j) += 1;
        if (u >= 1) a(std::size_t(u) - 1, j) -= 1;
    }
    return a;
}

HypertoricDatum from_graph(const Graph& g) {
    if (!g.connected()) throw error(errc::disconnected, "graph must be connected");
    if (g.num_vertices < 2) throw error(errc::invalid_input, "need at least two vertices");
    return from_matrix_a(graph_incidence(g));
}

std::size_t dimension(const HypertoricDatum& datum) { return 2 * (datum.n - datum.d); }

NamikawaWeyl namikawa_weyl(const HypertoricDatum& datum) {
    NamikawaWeyl w;
    for (const auto& c : datum.reduced) w.multiplicities.push_back(c.multiplicity);
    std::sort(w.multiplicities.rbegin(), w.multiplicities.rend());
    w.order = 1;
    for (std::size_t m : w.multiplicities) w.order *= factorial(unsigned(m));
    return w;
}

std::vector<FlatStratum> flats(const HypertoricDatum& datum) {
    const std::size_t m = datum.gale_dim();
    // distinct directions of the multi-arrangement
    std::vector<IntVec> dirs;
    for (const auto& c : datum.reduced) dirs.push_back(c.direction);
    auto scan = detail::scan_flats(m, dirs, std::size_t(-1));

    std::vector<FlatStratum> out;
    out.reserve(scan.ranks.size());
    for (std::size_t k = 0; k < scan.ranks.size(); ++k) {
        FlatStratum fs;
        fs.rank = scan.ranks[k];
        fs.stratum_dim = 2 * (m - std::size_t(fs.rank));
        // index set: all rows whose direction lies in the flat's normal span
        for (std::size_t ci = 0; ci < datum.reduced.size(); ++ci) {
            bool in = (scan.hsets[k][ci >> 6] >> (ci & 63)) & 1u;
            if (in)
                for (std::size_t row : datum.reduced[ci].members) fs.indices.push_back(row);
        }
        std::sort(fs.indices.begin(), fs.indices.end());

        // slice: restrict b to the rows of F and present it on the quotient
        // lattice Z^m / H_F via an integral complement of the kernel
        if (fs.indices.empty()) {
            fs.slice = from_matrix_b(IntMatrix(0, 0));
        } else {
            IntMatrix bf = datum.b.select_rows(fs.indices);
            IntMatrix ker = kernel_lattice(bf);  // m x (m - rank)
            IntMatrix comp = ker.cols() == 0 ? IntMatrix::identity(m) : integral_complement(ker);
            fs.slice = from_matrix_b(bf * comp);
        }
        out.push_back(std::move(fs));
    }
    return out;
}

std::vector<Codim2Slice> codim2_slices(const HypertoricDatum& datum) {
    std::vector<Codim2Slice> out;
    for (const auto& c : datum.reduced) {
        if (c.multiplicity < 2) continue;
        out.push_back(Codim2Slice{c.members, c.multiplicity, c.multiplicity - 1});
    }
    return out;
}

std::optional<std::vector<std::size_t>> degree_two_test(const HypertoricDatum& datum) {
    const std::size_t n = datum.n;
    // collect (Im B)_2 = {beta in Im B | beta = +-e_i +- e_j}
    std::vector<IntVec> deg2;
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool related = false;
            for (int si = -1; si <= 1; si += 2)
                for (int sj = -1; sj <= 1; sj += 2) {
                    IntVec v(n);
                    v[i] = si;
                    v[j] = sj;
                    if (lattice_contains(datum.b, v)) {
                        deg2.push_back(v);
                        related = true;
                    }
                }
            if (related) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }

    // sublattice generated by (Im B)_2 must be all of Im B
    IntMatrix gen(n, deg2.size());
    for (std::size_t c = 0; c < deg2.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) gen(r, c) = deg2[c][r];
    IntMatrix span = hermite_row_form(gen.transpose()).transpose();
    if (!lattices_equal(span, datum.b)) return std::nullopt;

    // block partition from the pair relation
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<std::size_t> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v : adj[u])
                if (comp[v] < 0) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
        }
        ++ncomp;
    }
    std::vector<std::size_t> sizes(ncomp, 0);
    for (std::size_t i = 0; i < n; ++i) ++sizes[comp[i]];

    // verification: the block all-ones matrix must carry the same matroid
    std::vector<IntMatrix> blocks;
    for (int c = 0; c < ncomp; ++c) {
        IntMatrix row(1, sizes[c]);
        for (std::size_t j = 0; j < sizes[c]; ++j) row(0, j) = 1;
        blocks.push_back(row);
    }
    IntMatrix model = IntMatrix::block_diag(blocks);
    if (!is_isomorphic(from_matrix(model), from_matrix(datum.a)))
        throw error(errc::verification_failed,
                    "degree-two lattice test passed but the block model mismatches");

    std::vector<std::size_t> ell;
    for (int c = 0; c < ncomp; ++c)
        if (sizes[c] >= 2) ell.push_back(sizes[c] - 1);
    std::sort(ell.rbegin(), ell.rend());
    return ell;
}

bool is_generic(const IntVec& alpha, const HypertoricDatum& datum) {
    if (alpha.size() != datum.d) throw error(errc::dimension_mismatch, "alpha length");
    Arrangement ha = from_columns(datum.a);
    for (const auto& nu : ha.normals) {
        Int dot = 0;
        for (std::size_t j = 0; j < nu.size(); ++j) dot += nu[j] * alpha[j];
        if (dot == 0) return false;
    }
    return true;
}

} // namespace hypertoric
