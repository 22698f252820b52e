#include "hypertoric/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace hypertoric {

Matroid::Matroid(int n, int rank, std::vector<std::uint32_t> bases)
    : n_(n), rank_(rank), bases_(std::move(bases)) {
    if (n < 0 || n > 30) throw error(errc::size_guard, "ground set too large for bitmask bases");
    if (bases_.empty()) throw error(errc::invalid_input, "a matroid has at least one basis");
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    std::uint32_t covered = 0;
    degrees_.assign(n_, 0);
    for (std::uint32_t b : bases_) {
        if (std::popcount(b) != rank_) throw error(errc::invalid_input, "basis of wrong cardinality");
        covered |= b;
        for (int e = 0; e < n_; ++e)
            if (b & (1u << e)) ++degrees_[e];
    }
    loop_mask_ = ~covered & ((1u << n_) - 1u);
}

bool Matroid::is_basis(std::uint32_t mask) const {
    return std::binary_search(bases_.begin(), bases_.end(), mask);
}

int Matroid::rank_of(std::uint32_t subset) const {
    int best = 0;
    for (std::uint32_t b : bases_) {
        int c = std::popcount(b & subset);
        if (c > best) best = c;
        if (best == rank_) break;
    }
    return best;
}

bool Matroid::satisfies_basis_exchange() const {
    for (std::uint32_t b1 : bases_)
        for (std::uint32_t b2 : bases_) {
            std::uint32_t out = b1 & ~b2;
            for (int x = 0; x < n_; ++x) {
                if (!(out & (1u << x))) continue;
                bool ok = false;
                std::uint32_t in = b2 & ~b1;
                for (int y = 0; y < n_ && !ok; ++y)
                    if (in & (1u << y))
                        ok = is_basis((b1 & ~(1u << x)) | (1u << y));
                if (!ok) return false;
            }
        }
    return true;
}

Matroid from_matrix(const IntMatrix& a) {
    const int n = int(a.cols());
    if (n > 30) throw error(errc::size_guard, "too many columns for a bitmask matroid");
    const int r = int(rank_rational(a));
    std::vector<std::uint32_t> bases;
    // enumerate r-subsets, keep those of full rank
    std::vector<int> sel(r);
    std::iota(sel.begin(), sel.end(), 0);
    if (r == 0) {
        bases.push_back(0);
    } else {
        for (;;) {
            std::vector<std::size_t> cols(sel.begin(), sel.end());
            if (rank_rational(a.select_cols(cols)) == std::size_t(r)) {
                std::uint32_t m = 0;
                for (int c : sel) m |= 1u << c;
                bases.push_back(m);
            }
            int i = r - 1;
            while (i >= 0 && sel[i] == n - r + i) --i;
            if (i < 0) break;
            ++sel[i];
            for (int j = i + 1; j < r; ++j) sel[j] = sel[j - 1] + 1;
        }
    }
    Matroid m(n, r, std::move(bases));
    m.set_representation(a);
    return m;
}

Matroid dual(const Matroid& m) {
    const int n = m.ground_size();
    const std::uint32_t full = n < 32 ? (1u << n) - 1u : ~0u;
    std::vector<std::uint32_t> bases;
    bases.reserve(m.bases().size());
    for (std::uint32_t b : m.bases()) bases.push_back(full & ~b);
    return Matroid(n, n - m.rank(), std::move(bases));
}

ParallelClasses parallel_classes(const Matroid& m) {
    ParallelClasses pc;
    const int n = m.ground_size();
    std::vector<char> used(n, 0);
    for (int i = 0; i < n; ++i) {
        if (m.is_loop(i)) {
            pc.loops.push_back(i);
            used[i] = 1;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        std::vector<int> cls{i};
        used[i] = 1;
        for (int j = i + 1; j < n; ++j) {
            if (used[j]) continue;
            if (m.rank_of((1u << i) | (1u << j)) <= 1) {
                cls.push_back(j);
                used[j] = 1;
            }
        }
        pc.classes.push_back(std::move(cls));
    }
    return pc;
}

std::vector<std::vector<int>> connected_components(const Matroid& m) {
    const int n = m.ground_size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    // Fundamental circuits with respect to one fixed basis span the
    // connectivity relation.
    std::uint32_t b0 = m.bases().front();
    for (int e = 0; e < n; ++e) {
        if (b0 & (1u << e)) continue;
        if (m.is_loop(e)) continue;
        for (int f = 0; f < n; ++f) {
            if (!(b0 & (1u << f))) continue;
            if (m.is_basis((b0 & ~(1u << f)) | (1u << e))) unite(e, f);
        }
    }
    std::map<int, std::vector<int>> comps;
    for (int e = 0; e < n; ++e) comps[find(e)].push_back(e);
    std::vector<std::vector<int>> out;
    for (auto& [root, elems] : comps) out.push_back(std::move(elems));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct IsoSearch {
    const Matroid& m1;
    const Matroid& m2;
    std::vector<std::vector<int>> candidates;  // per element of m1
    std::vector<int> image;
    std::vector<char> taken;
    const std::function<bool(const GroundBijection&)>& fn;
    bool found = false;
    bool stop = false;

    bool compatible_prefix(int depth) const {
        // rank of the mapped prefix must agree
        std::uint32_t s1 = 0, s2 = 0;
        for (int i = 0; i <= depth; ++i) {
            s1 |= 1u << i;
            s2 |= 1u << image[i];
        }
        return m1.rank_of(s1) == m2.rank_of(s2);
    }

    bool full_check() const {
        for (std::uint32_t b : m1.bases()) {
            std::uint32_t t = 0;
            for (int e = 0; e < m1.ground_size(); ++e)
                if (b & (1u << e)) t |= 1u << image[e];
            if (!m2.is_basis(t)) return false;
        }
        return true;
    }

    void rec(int depth) {
        if (stop) return;
        const int n = m1.ground_size();
        if (depth == n) {
            if (full_check()) {
                found = true;
                if (!fn(GroundBijection{image})) stop = true;
            }
            return;
        }
        for (int img : candidates[depth]) {
            if (taken[img]) continue;
            image[depth] = img;
            taken[img] = 1;
            if (compatible_prefix(depth)) rec(depth + 1);
            taken[img] = 0;
            if (stop) return;
        }
    }
};

} // namespace

bool for_each_isomorphism(const Matroid& m1, const Matroid& m2,
                          const std::function<bool(const GroundBijection&)>& fn) {
    if (m1.ground_size() != m2.ground_size())
        throw error(errc::ground_size_mismatch, "matroids on different ground sizes");
    const int n = m1.ground_size();
    if (m1.rank() != m2.rank() || m1.bases().size() != m2.bases().size()) return false;
    if (std::popcount(m1.loop_mask()) != std::popcount(m2.loop_mask())) return false;

    // global invariants: degree profile, parallel-class size profile,
    // circuit-size distribution
    auto profile = [](const Matroid& m) {
        std::vector<int> d = m.element_degrees();
        std::sort(d.begin(), d.end());
        auto pc = parallel_classes(m);
        std::vector<int> p;
        for (auto& c : pc.classes) p.push_back(int(c.size()));
        std::sort(p.begin(), p.end());
        return std::make_pair(d, p);
    };
    if (profile(m1) != profile(m2)) return false;
    if (n <= 14 && circuit_size_profile(m1) != circuit_size_profile(m2)) return false;

    IsoSearch s{m1, m2, {}, std::vector<int>(n, -1), std::vector<char>(n, 0), fn};
    s.candidates.resize(n);
    auto pc1 = parallel_classes(m1), pc2 = parallel_classes(m2);
    std::vector<int> class_size1(n, 0), class_size2(n, 0);
    for (auto& c : pc1.classes)
        for (int e : c) class_size1[e] = int(c.size());
    for (auto& c : pc2.classes)
        for (int e : c) class_size2[e] = int(c.size());
    for (int e = 0; e < n; ++e) {
        for (int f = 0; f < n; ++f) {
            if (m1.is_loop(e) != m2.is_loop(f)) continue;
            if (m1.element_degrees()[e] != m2.element_degrees()[f]) continue;
            if (class_size1[e] != class_size2[f]) continue;
            s.candidates[e].push_back(f);
        }
        if (s.candidates[e].empty()) return false;
    }
    s.rec(0);
    return s.found;
}

std::optional<GroundBijection> is_isomorphic(const Matroid& m1, const Matroid& m2) {
    std::optional<GroundBijection> witness;
    for_each_isomorphism(m1, m2, [&](const GroundBijection& b) {
        witness = b;
        return false;  // first hit in the fixed order
    });
    return witness;
}

Matroid graph_matroid(const Graph& g) {
    const std::size_t v = g.num_vertices, e = g.edges.size();
    IntMatrix inc(v, e);
    for (std::size_t j = 0; j < e; ++j) {
        auto [a, b] = g.edges[j];
        inc(a, j) = 1;
        inc(b, j) = -1;
    }
    return from_matrix(inc);
}

std::vector<std::uint32_t> circuits_brute_force(const Matroid& m) {
    const int n = m.ground_size();
    std::vector<std::uint32_t> circuits;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        if (m.rank_of(s) >= std::popcount(s)) continue;  // independent
        bool minimal = true;
        for (int e = 0; e < n && minimal; ++e) {
            if (!(s & (1u << e))) continue;
            std::uint32_t t = s & ~(1u << e);
            if (t != 0 && m.rank_of(t) < std::popcount(t)) minimal = false;
        }
        if (minimal) circuits.push_back(s);
    }
    return circuits;
}

std::vector<int> circuit_size_profile(const Matroid& m) {
    std::vector<int> sizes;
    for (std::uint32_t c : circuits_brute_force(m)) sizes.push_back(std::popcount(c));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

} // namespace hypertoric
