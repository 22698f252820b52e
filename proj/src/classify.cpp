#include "hypertoric/classify.hpp"

#include <algorithm>
#include <mutex>

namespace hypertoric {

std::string ClassLabel::to_string() const {
    auto mults = [&] {
        std::string s = "{";
        for (std::size_t i = 0; i < multiplicities.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(multiplicities[i]);
        }
        return s + "}";
    };
    switch (kind) {
        case Kind::SurfaceProduct: {
            std::string s;
            for (std::size_t m : multiplicities) {
                if (!s.empty()) s += " x ";
                s += "S_A" + std::to_string(m - 1);
            }
            return s;
        }
        case Kind::OminTriple: return "Omin" + mults();
        case Kind::Catalog6: return "Catalog6[" + std::to_string(catalog_index) + "]" + mults();
        case Kind::Other: return "Other(matroid fingerprint)";
    }
    return "?";
}

const std::vector<IntMatrix>& catalog_matrices() {
    static const std::vector<IntMatrix> cat = [] {
        std::vector<IntMatrix> v;
        v.push_back(IntMatrix{{1, 0}, {0, 1}});
        v.push_back(IntMatrix{{1, 0}, {0, 1}, {1, 1}});
        v.push_back(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
        v.push_back(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}});
        v.push_back(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
        v.push_back(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}});
        v.push_back(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}});
        return v;
    }();
    // the seven catalog matroids separate pairwise; checked once
    static std::once_flag checked;
    std::call_once(checked, [] {
        for (std::size_t i = 0; i < cat.size(); ++i)
            for (std::size_t j = i + 1; j < cat.size(); ++j) {
                const auto& bi = cat[i];
                const auto& bj = cat[j];
                if (bi.rows() != bj.rows()) continue;
                if (is_isomorphic(from_matrix(bi.transpose()), from_matrix(bj.transpose())))
                    throw error(errc::verification_failed, "catalog matroids failed to separate");
            }
    });
    return cat;
}

const std::vector<Graph>& catalog_graphs() {
    static const std::vector<Graph> graphs = [] {
        std::vector<Graph> g;
        g.emplace_back(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
        g.emplace_back(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}});
        g.emplace_back(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
        g.emplace_back(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}, {2, 3}});
        g.emplace_back(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        g.emplace_back(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
        g.emplace_back(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
        return g;
    }();
    return graphs;
}

IsoResult isomorphic(const IntMatrix& a, const IntMatrix& a2) {
    HypertoricDatum d1 = from_matrix_a(a);
    HypertoricDatum d2 = from_matrix_a(a2);
    IsoResult res;
    if (d1.n != d2.n || d1.d != d2.d) return res;
    auto w = is_isomorphic(from_matrix(d1.a), from_matrix(d2.a));
    res.isomorphic = w.has_value();
    res.witness = std::move(w);
    return res;
}

std::optional<EquivalenceWitness> equivalence_witness(const IntMatrix& a, const IntMatrix& a2,
                                                      std::size_t budget) {
    if (a.rows() != a2.rows() || a.cols() != a2.cols())
        return std::nullopt;
    const std::size_t d = a.rows(), n = a.cols();
    Matroid m1 = from_matrix(a), m2 = from_matrix(a2);
    if (m1.rank() != int(d))
        throw error(errc::invalid_input, "a must have full row rank");

    // choose a column basis of a once; signs on it determine p
    std::uint32_t basis_mask = m1.bases().front();
    std::vector<std::size_t> basis_cols;
    for (std::size_t e = 0; e < n; ++e)
        if (basis_mask & (1u << e)) basis_cols.push_back(e);

    std::size_t spent = 0;
    std::optional<EquivalenceWitness> found;
    bool ran_out = false;

    for_each_isomorphism(m1, m2, [&](const GroundBijection& phi) {
        // try every sign pattern on the basis columns; the rest are forced
        const std::size_t trials = std::size_t(1) << d;
        for (std::size_t bits = 0; bits < trials; ++bits) {
            if (spent >= budget) { ran_out = true; return false; }
            ++spent;
            // p * (eps_j a_j) = a2_phi(j) on the basis columns:
            // p = a2_sel * diag(eps) * (a_sel)^-1, all integral since the
            // basis minor has determinant +-1
            std::vector<std::size_t> image_cols;
            for (std::size_t e : basis_cols) image_cols.push_back(std::size_t(phi.perm[e]));
            IntMatrix asel = a.select_cols(basis_cols);
            IntMatrix bsel = a2.select_cols(image_cols);
            Int det_a = det(asel);
            if (det_a != 1 && det_a != -1) continue;
            // integer inverse by adjugate
            IntMatrix inv(d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    std::vector<std::size_t> ri, ci;
                    for (std::size_t t = 0; t < d; ++t) {
                        if (t != j) ri.push_back(t);
                        if (t != i) ci.push_back(t);
                    }
                    Int minor = d == 1 ? Int(1) : det(asel.select_rows(ri).select_cols(ci));
                    inv(i, j) = ((i + j) % 2 == 0 ? minor : -minor) / det_a;
                }
            IntMatrix eps(d, d);
            for (std::size_t t = 0; t < d; ++t) eps(t, t) = (bits >> t) & 1 ? -1 : 1;
            IntMatrix p = bsel * eps * inv;

            // signs on the remaining columns are forced
            bool ok = true;
            std::vector<int> colsign(n, 0);
            for (std::size_t t = 0; t < d; ++t) colsign[basis_cols[t]] = (bits >> t) & 1 ? -1 : 1;
            for (std::size_t e = 0; e < n && ok; ++e) {
                if (colsign[e] != 0) continue;
                IntVec pa = p.apply(a.col(e));
                IntVec target = a2.col(std::size_t(phi.perm[e]));
                bool plus = pa == target;
                bool minus = true;
                for (std::size_t i = 0; i < d; ++i)
                    if (pa[i] != -target[i]) { minus = false; break; }
                if (plus) colsign[e] = 1;
                else if (minus) colsign[e] = -1;
                else ok = false;
            }
            if (!ok) continue;
            // d has entry colsign[e] at (e, phi(e)): (a*d)_{phi(e)} = eps_e a_e
            IntMatrix dm(n, n);
            for (std::size_t e = 0; e < n; ++e) dm(e, std::size_t(phi.perm[e])) = colsign[e];
            if (a2 == p * a * dm) {
                found = EquivalenceWitness{p, dm};
                return false;
            }
        }
        return true;
    });

    if (found) return found;
    if (ran_out) throw error(errc::budget_exceeded, "witness search budget exhausted");
    return std::nullopt;
}

namespace {

// transported multiplicities, canonicalized over every matroid isomorphism
std::optional<std::vector<std::size_t>> transport_multiplicities(const HypertoricDatum& datum,
                                                                 const IntMatrix& catalog_b) {
    const IntMatrix& cb = catalog_b;
    if (datum.reduced.size() != cb.rows()) return std::nullopt;
    IntMatrix simp(datum.reduced.size(), datum.gale_dim());
    for (std::size_t i = 0; i < datum.reduced.size(); ++i) simp.set_row(i, datum.reduced[i].direction);

    Matroid ms = from_matrix(simp.transpose());
    Matroid mc = from_matrix(cb.transpose());
    std::optional<std::vector<std::size_t>> best;
    for_each_isomorphism(ms, mc, [&](const GroundBijection& phi) {
        std::vector<std::size_t> assign(datum.reduced.size());
        for (std::size_t e = 0; e < assign.size(); ++e)
            assign[std::size_t(phi.perm[e])] = datum.reduced[e].multiplicity;
        if (!best || assign > *best) best = assign;
        return true;  // walk every isomorphism for the canonical maximum
    });
    return best;
}

std::vector<long long> matroid_fingerprint(const Matroid& m) {
    std::vector<long long> fp{m.ground_size(), m.rank(), (long long)m.bases().size()};
    std::vector<int> deg = m.element_degrees();
    std::sort(deg.begin(), deg.end());
    for (int x : deg) fp.push_back(x);
    if (m.ground_size() <= 14)  // circuit walk is exponential in the ground size
        for (int s : circuit_size_profile(m)) fp.push_back(s);
    return fp;
}

} // namespace

ClassLabel classify4(const IntMatrix& a) {
    HypertoricDatum datum = from_matrix_a(a);
    if (datum.gale_dim() != 2) throw error(errc::not_dimension_four, "variety is not 4-dimensional");
    const auto& cat = catalog_matrices();
    ClassLabel label;
    if (auto m = transport_multiplicities(datum, cat[0])) {
        label.kind = ClassLabel::Kind::SurfaceProduct;
        label.multiplicities = *m;
        std::sort(label.multiplicities.rbegin(), label.multiplicities.rend());
        return label;
    }
    if (auto m = transport_multiplicities(datum, cat[1])) {
        label.kind = ClassLabel::Kind::OminTriple;
        label.multiplicities = *m;
        std::sort(label.multiplicities.rbegin(), label.multiplicities.rend());
        return label;
    }
    throw error(errc::verification_failed, "4-dimensional datum matched no catalog entry");
}

ClassLabel classify6(const IntMatrix& a) {
    HypertoricDatum datum = from_matrix_a(a);
    if (datum.gale_dim() != 3) throw error(errc::not_dimension_six, "variety is not 6-dimensional");
    const auto& cat = catalog_matrices();
    for (int idx = 3; idx <= 7; ++idx) {
        if (auto m = transport_multiplicities(datum, cat[std::size_t(idx - 1)])) {
            ClassLabel label;
            label.kind = ClassLabel::Kind::Catalog6;
            label.catalog_index = idx;
            label.multiplicities = *m;
            return label;
        }
    }
    throw error(errc::verification_failed, "6-dimensional datum matched no catalog entry");
}

ClassLabel classify(const IntMatrix& a) {
    HypertoricDatum datum = from_matrix_a(a);
    if (datum.gale_dim() == 2) return classify4(a);
    if (datum.gale_dim() == 3) return classify6(a);
    ClassLabel label;
    label.kind = ClassLabel::Kind::Other;
    label.fingerprint = matroid_fingerprint(from_matrix(datum.a));
    return label;
}

bool quiver_iso(const Graph& g1, const Graph& g2) {
    if (!g1.connected() || !g2.connected())
        throw error(errc::disconnected, "quiver comparison expects connected graphs");
    if (g1.num_vertices < 2 || g2.num_vertices < 2)
        throw error(errc::invalid_input, "need at least two vertices");
    IntMatrix a1 = graph_incidence(g1), a2 = graph_incidence(g2);
    HypertoricDatum d1 = from_matrix_a(a1), d2 = from_matrix_a(a2);
    if (d1.n != d2.n || d1.d != d2.d) return false;
    return is_isomorphic(from_matrix(d1.a), from_matrix(d2.a)).has_value();
}

} // namespace hypertoric
