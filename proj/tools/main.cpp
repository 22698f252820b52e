#include "hypertoric/arrangement.hpp"
#include "hypertoric/classify.hpp"
#include "hypertoric/datum.hpp"
#include "hypertoric/io.hpp"
#include "hypertoric/ring.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <optional>

using namespace hypertoric;
using nlohmann::json;

namespace {

struct Output {
    std::string command;
    json input = json::object();
    json result = json::object();
    std::vector<std::string> warnings;
    bool as_json = false;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
    std::string text;  // human-readable body

    void emit() {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        if (as_json) {
            json doc{{"command", command},
                     {"input", input},
                     {"result", result},
                     {"warnings", warnings},
                     {"elapsed_ms", elapsed}};
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << text;
            for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
        }
    }
};

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json vec_json(const IntVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(x.str());
    return a;
}

json poly_json(const Poly& p) {
    json coeffs = json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(c.str());
    return json{{"coefficients_ascending", coeffs}, {"pretty", p.to_string()}};
}

std::string join_sizes(const std::vector<std::size_t>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

json datum_json(const HypertoricDatum& d) {
    json classes = json::array();
    for (const auto& c : d.reduced)
        classes.push_back(json{{"direction", vec_json(c.direction)},
                               {"multiplicity", c.multiplicity}});
    return json{{"n", d.n},
                {"d", d.d},
                {"dropped_rows", d.dropped_rows},
                {"reduced_classes", classes}};
}

ChiOptions chi_options(const std::string& method) {
    ChiOptions o;
    if (method == "poset") o.method = ChiMethod::Poset;
    else if (method == "delres") o.method = ChiMethod::DeletionRestriction;
    else if (method == "ffield") o.method = ChiMethod::FiniteField;
    else throw error(errc::invalid_input, "unknown method " + method);
    return o;
}

std::string label_json_kind(const ClassLabel& l) {
    switch (l.kind) {
        case ClassLabel::Kind::SurfaceProduct: return "surface_product";
        case ClassLabel::Kind::OminTriple: return "omin_triple";
        case ClassLabel::Kind::Catalog6: return "catalog6";
        case ClassLabel::Kind::Other: return "other";
    }
    return "?";
}

json label_json(const ClassLabel& l) {
    json j{{"kind", label_json_kind(l)}, {"pretty", l.to_string()}};
    if (l.kind != ClassLabel::Kind::Other) j["multiplicities"] = l.multiplicities;
    if (l.kind == ClassLabel::Kind::Catalog6) j["catalog_index"] = l.catalog_index;
    if (l.kind == ClassLabel::Kind::Other) j["fingerprint"] = l.fingerprint;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of affine hypertoric varieties"};
    app.require_subcommand(1);

    bool as_json = false;
    std::uint64_t seed = 0;
    int threads = 1;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--seed", seed, "seed for randomized diagnostics");
    app.add_option("--threads", threads, "worker threads for parallel sections")
        ->check(CLI::PositiveNumber);

    std::string matrix_path, matrix_path2, graph_path, graph_path2;
    std::string method = "poset";
    std::uint64_t prime = 0;
    std::size_t degree_bound = 0;
    std::size_t budget = 1000000;
    bool want_witness = false;
    std::vector<int> er;

    auto* validate = app.add_subcommand("validate", "surjectivity and unimodularity verdicts");
    validate->add_option("matrix", matrix_path)->required();

    auto* gale = app.add_subcommand("gale", "print the gale dual of a matrix");
    gale->add_option("matrix", matrix_path)->required();

    auto* info = app.add_subcommand("info", "dimension, reduced classes, weyl group, strata");
    info->add_option("matrix", matrix_path);
    info->add_option("--graph", graph_path, "read a graph instead of a matrix");

    auto* ring = app.add_subcommand("ring-gens", "generators of the coordinate ring");
    ring->add_option("matrix", matrix_path)->required();
    ring->add_option("--degree-bound", degree_bound);

    auto* chi = app.add_subcommand("chi", "characteristic polynomial of the column arrangement");
    chi->add_option("matrix", matrix_path);
    chi->add_option("--er", er, "triple-sum arrangement sizes l1 l2 l3")->expected(3);
    chi->add_option("--method", method)->check(CLI::IsMember({"poset", "delres", "ffield"}));
    chi->add_option("--prime", prime, "also report the point count at this prime");

    auto* res = app.add_subcommand("resolutions", "number of projective crepant resolutions");
    res->add_option("matrix", matrix_path)->required();

    auto* iso = app.add_subcommand("iso", "decide conical symplectic isomorphism");
    iso->add_option("matrixA", matrix_path)->required();
    iso->add_option("matrixB", matrix_path2)->required();
    iso->add_flag("--witness", want_witness, "search for (P, D) with A' = P A D");
    iso->add_option("--budget", budget);

    auto* cls = app.add_subcommand("classify", "canonical isomorphism-class label");
    cls->add_option("matrix", matrix_path)->required();

    auto* qiso = app.add_subcommand("quiver-iso", "compare two quiver graphs");
    qiso->add_option("graphA", graph_path)->required();
    qiso->add_option("graphB", graph_path2)->required();

    auto* nil = app.add_subcommand("nilpotent-test", "minimal-orbit product detection");
    nil->add_option("matrix", matrix_path)->required();

    CLI11_PARSE(app, argc, argv);
    (void)seed;
    (void)threads;

    Output out;
    out.as_json = as_json;

    try {
        if (validate->parsed()) {
            out.command = "validate";
            IntMatrix a = read_matrix_file(matrix_path);
            out.input["matrix"] = matrix_json(a);
            bool surj = is_surjective_over_Z(a);
            bool unim = false;
            std::string unim_note;
            if (rank_rational(a) == a.rows()) unim = is_unimodular(a);
            else unim_note = "rank-deficient";
            out.result = {{"surjective_over_Z", surj}, {"unimodular", unim}};
            if (!unim_note.empty()) out.result["note"] = unim_note;
            out.text = std::string("surjective: ") + (surj ? "yes" : "no") +
                       "\nunimodular: " + (unim ? "yes" : "no") + "\n";
        } else if (gale->parsed()) {
            out.command = "gale";
            IntMatrix a = read_matrix_file(matrix_path);
            out.input["matrix"] = matrix_json(a);
            if (!is_surjective_over_Z(a))
                throw error(errc::not_surjective, "matrix is not surjective over Z");
            IntMatrix b = kernel_basis(a);
            out.result["gale_dual"] = matrix_json(b);
            out.text = format_matrix_file(b);
        } else if (info->parsed()) {
            out.command = "info";
            HypertoricDatum d;
            if (!graph_path.empty()) {
                Graph g = read_graph_file(graph_path);
                out.input["graph_edges"] = g.edges.size();
                d = from_graph(g);
            } else if (!matrix_path.empty()) {
                IntMatrix a = read_matrix_file(matrix_path);
                out.input["matrix"] = matrix_json(a);
                d = from_matrix_a(a);
            } else {
                throw error(errc::invalid_input, "info needs a matrix or --graph");
            }
            auto w = namikawa_weyl(d);
            auto strata = flats(d);
            out.result["datum"] = datum_json(d);
            out.result["dimension"] = dimension(d);
            out.result["weyl_multiplicities"] = w.multiplicities;
            out.result["weyl_order"] = w.order.str();
            json slices = json::array();
            for (const auto& s : codim2_slices(d))
                slices.push_back(json{{"class_indices", s.indices},
                                      {"multiplicity", s.multiplicity},
                                      {"surface_type", "A" + std::to_string(s.surface_type)}});
            out.result["codim2_slices"] = slices;
            json strata_json = json::array();
            for (const auto& f : strata)
                strata_json.push_back(json{{"flat", f.indices},
                                           {"rank", f.rank},
                                           {"stratum_dim", f.stratum_dim},
                                           {"slice_dim", dimension(f.slice)}});
            out.result["strata"] = strata_json;

            out.text = "dimension: " + std::to_string(dimension(d)) + "\n";
            out.text += "reduced classes:";
            for (const auto& c : d.reduced) {
                out.text += " (";
                for (std::size_t j = 0; j < c.direction.size(); ++j)
                    out.text += (j ? "," : "") + c.direction[j].str();
                out.text += ")x" + std::to_string(c.multiplicity);
            }
            out.text += "\nweyl group: ";
            std::string wt;
            for (std::size_t m : w.multiplicities) {
                if (!wt.empty()) wt += " x ";
                wt += "S" + std::to_string(m);
            }
            out.text += (wt.empty() ? "trivial" : wt) + "  order " + w.order.str() + "\n";
            out.text += "codim-2 slices:";
            bool any = false;
            for (const auto& s : codim2_slices(d)) {
                out.text += " A" + std::to_string(s.surface_type);
                any = true;
            }
            out.text += any ? "\n" : " none\n";
            out.text += "strata (rank, dim, |F|):";
            for (const auto& f : strata)
                out.text += " (" + std::to_string(f.rank) + "," + std::to_string(f.stratum_dim) +
                            "," + std::to_string(f.indices.size()) + ")";
            out.text += "\n";
        } else if (ring->parsed()) {
            out.command = "ring-gens";
            IntMatrix a = read_matrix_file(matrix_path);
            out.input["matrix"] = matrix_json(a);
            HypertoricDatum d = from_matrix_a(a);
            std::size_t bound = degree_bound ? degree_bound : default_degree_bound(d);
            auto rg = ring_generators(d, bound);
            if (rg.bound_too_small && d.gale_dim() > 0)
                out.warnings.push_back("no f_beta generator fits under degree bound " +
                                       std::to_string(bound));
            if (rg.boundary_warning)
                out.warnings.push_back(
                    "an irreducible generator sits exactly at the degree bound; raise "
                    "--degree-bound to rule out higher-degree generators");
            out.result["degree_bound"] = bound;
            json gens = json::array();
            for (const auto& g : rg.generators)
                gens.push_back(json{{"label", g.label()},
                                    {"degree", g.degree()},
                                    {"z_exponents", g.z_exponents},
                                    {"w_exponents", g.w_exponents}});
            out.result["generators"] = gens;
            out.text = "degree bound " + std::to_string(bound) + ", " +
                       std::to_string(rg.generators.size()) + " generators\n";
            for (const auto& g : rg.generators)
                out.text += "  " + g.label() + "  (degree " + std::to_string(g.degree()) + ")\n";
        } else if (chi->parsed()) {
            out.command = "chi";
            Arrangement arr;
            if (er.size() == 3) {
                out.input["er"] = er;
                arr = edelman_reiner_arrangement(er[0], er[1], er[2]);
            } else if (!matrix_path.empty()) {
                IntMatrix a = read_matrix_file(matrix_path);
                out.input["matrix"] = matrix_json(a);
                arr = from_columns(a);
            } else {
                throw error(errc::invalid_input, "chi needs a matrix or --er l1 l2 l3");
            }
            out.input["method"] = method;
            Poly p = char_poly(arr, chi_options(method));
            out.result["chi"] = poly_json(p);
            out.result["hyperplanes"] = arr.size();
            out.result["chambers"] = chamber_count(arr).str();
            out.text = "hyperplanes: " + std::to_string(arr.size()) + "\n";
            out.text += "chi(t) = " + p.to_string() + "\n";
            if (prime) {
                auto c = char_poly_finite_field(arr, prime);
                out.result["point_count"] = {{"prime", prime}, {"count", c.count.str()}};
                if (c.small_prime_warning)
                    out.warnings.push_back("prime " + std::to_string(prime) +
                                           " is at or below the subdeterminant bound " +
                                           subdeterminant_bound(arr).str());
                out.text += "points off the arrangement over F_" + std::to_string(prime) + ": " +
                            c.count.str() + "\n";
            }
        } else if (res->parsed()) {
            out.command = "resolutions";
            IntMatrix a = read_matrix_file(matrix_path);
            out.input["matrix"] = matrix_json(a);
            HypertoricDatum d = from_matrix_a(a);
            auto w = namikawa_weyl(d);
            Arrangement ha = from_columns(d.a);
            Int chambers = chamber_count(ha);
            Int count = crepant_resolution_count(d);
            out.result = {{"chambers", chambers.str()},
                          {"weyl_order", w.order.str()},
                          {"resolutions", count.str()}};
            out.text = "chambers r(H_A): " + chambers.str() + "\n|W_B|: " + w.order.str() +
                       "\nprojective crepant resolutions: " + count.str() + "\n";
        } else if (iso->parsed()) {
            out.command = "iso";
            IntMatrix a = read_matrix_file(matrix_path);
            IntMatrix a2 = read_matrix_file(matrix_path2);
            out.input["matrixA"] = matrix_json(a);
            out.input["matrixB"] = matrix_json(a2);
            auto verdict = isomorphic(a, a2);
            out.result["isomorphic"] = verdict.isomorphic;
            out.text = verdict.isomorphic ? "isomorphic: yes\n" : "isomorphic: no\n";
            if (want_witness && verdict.isomorphic) {
                auto w = equivalence_witness(a, a2, budget);
                if (w) {
                    out.result["witness"] = {{"P", matrix_json(w->p)}, {"D", matrix_json(w->d)}};
                    out.text += "P =\n" + w->p.to_string() + "D =\n" + w->d.to_string();
                } else {
                    out.result["witness"] = nullptr;
                    out.text += "no witness found\n";
                }
            }
        } else if (cls->parsed()) {
            out.command = "classify";
            IntMatrix a = read_matrix_file(matrix_path);
            out.input["matrix"] = matrix_json(a);
            ClassLabel l = classify(a);
            out.result["label"] = label_json(l);
            out.text = l.to_string() + "\n";
        } else if (qiso->parsed()) {
            out.command = "quiver-iso";
            Graph g1 = read_graph_file(graph_path);
            Graph g2 = read_graph_file(graph_path2);
            out.input["graphA_edges"] = g1.edges.size();
            out.input["graphB_edges"] = g2.edges.size();
            bool v = quiver_iso(g1, g2);
            out.result["isomorphic"] = v;
            out.text = v ? "isomorphic: yes\n" : "isomorphic: no\n";
        } else if (nil->parsed()) {
            out.command = "nilpotent-test";
            IntMatrix a = read_matrix_file(matrix_path);
            out.input["matrix"] = matrix_json(a);
            auto r = degree_two_test(from_matrix_a(a));
            if (r) {
                out.result["nilpotent_orbit_product"] = true;
                out.result["multiplicities"] = *r;
                out.text = "minimal-orbit product: yes  {" + join_sizes(*r, ",") + "}\n";
            } else {
                out.result["nilpotent_orbit_product"] = false;
                out.text = "minimal-orbit product: no\n";
            }
        }
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    out.emit();
    return 0;
}
