// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each check is exact; tolerances are equalities of
// integers or integer polynomials.

#include "hypertoric/arrangement.hpp"
#include "hypertoric/classify.hpp"
#include "hypertoric/datum.hpp"
#include "hypertoric/ring.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace hypertoric;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::function<bool(std::string&)>& fn) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << "  " << what << "  ["
              << ms << " ms]";
    if (!detail.empty()) std::cout << "\n    " << detail;
    std::cout << "\n" << std::flush;
    if (!ok) ++failures;
}

Int expected_resolutions(int l1, int l2, int l3) {
    if (l3 == 1) return binomial(unsigned(l1 + l2), unsigned(l1));
    Int v = binomial(unsigned(l1 + l2 + 1), unsigned(l1)) * binomial(unsigned(l1 + l2 + 1), unsigned(l2));
    return v / (l1 + l2 + 1);
}

std::vector<std::size_t> codim2_profile(const HypertoricDatum& d) {
    std::vector<std::size_t> p;
    for (const auto& s : codim2_slices(d)) p.push_back(s.multiplicity);
    std::sort(p.rbegin(), p.rend());
    return p;
}

} // namespace

int main() {
    criterion(1, "chi of the 3,3,3 triple-sum arrangement has the expected degree-nine factorization",
              [](std::string& detail) {
                  auto start = std::chrono::steady_clock::now();
                  Poly chi = char_poly(edelman_reiner_arrangement(3, 3, 3));
                  Poly quartic(IntVec{1188, -784, 200, -23, 1});
                  Poly expected = Poly::monomial(2) * Poly::linear(1) * Poly::linear(5) *
                                  Poly::linear(7) * quartic;
                  auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
                  if (secs > 300) {
                      detail = "exceeded the five-minute budget";
                      return false;
                  }
                  if (chi != expected) {
                      detail = "got " + chi.to_string();
                      return false;
                  }
                  return true;
              });

    criterion(2, "crepant-resolution counts for l1,l2 <= 4 and l3 in {1,2}", [](std::string& detail) {
        auto start = std::chrono::steady_clock::now();
        struct Pin {
            int l1, l2, l3;
            Int expect;
        };
        for (const Pin& p : {Pin{1, 1, 1, 2}, Pin{2, 1, 1, 3}, Pin{2, 2, 1, 6}, Pin{3, 2, 1, 10},
                             Pin{1, 1, 2, 3}, Pin{2, 2, 2, 20}})
            if (expected_resolutions(p.l1, p.l2, p.l3) != p.expect) {
                detail = "closed form disagrees with a pinned expected value";
                return false;
            }
        for (int l1 = 1; l1 <= 4; ++l1)
            for (int l2 = 1; l2 <= 4; ++l2)
                for (int l3 = 1; l3 <= 2; ++l3) {
                    HypertoricDatum d = from_matrix_a(fixtures::omin_matrix(l1, l2, l3));
                    Int got = crepant_resolution_count(d);
                    Int expect = expected_resolutions(l1, l2, l3);
                    if (got != expect) {
                        std::ostringstream os;
                        os << "(" << l1 << "," << l2 << "," << l3 << "): got " << got
                           << ", expected " << expect;
                        detail = os.str();
                        return false;
                    }
                }
        auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        if (secs > 120) {
            detail = "exceeded the two-minute budget";
            return false;
        }
        return true;
    });

    criterion(3, "chamber closed forms match computed counts for l1,l2 <= 3", [](std::string& detail) {
        for (int l1 = 1; l1 <= 3; ++l1)
            for (int l2 = 1; l2 <= 3; ++l2)
                for (int l3 = 1; l3 <= 2; ++l3) {
                    Arrangement arr = edelman_reiner_arrangement(l1, l2, l3);
                    Int computed = chamber_count(arr);
                    auto cf = er_closed_form(l1, l2, l3);
                    Int closed = l3 == 1 ? factorial(unsigned(l1 + l2)) : cf.chambers;
                    if (computed != closed || cf.chambers != computed) {
                        std::ostringstream os;
                        os << "(" << l1 << "," << l2 << "," << l3 << "): computed " << computed
                           << ", closed form " << closed;
                        detail = os.str();
                        return false;
                    }
                }
        return true;
    });

    criterion(4, "squared-variable lemma for every l <= 3", [](std::string& detail) {
        for (int l1 = 1; l1 <= 3; ++l1)
            for (int l2 = 1; l2 <= 3; ++l2)
                for (int l3 = 1; l3 <= 3; ++l3) {
                    Poly lhs = char_poly(edelman_reiner_arrangement(l1, l2, l3));
                    Poly rhs = Poly::monomial(2) *
                               char_poly(from_columns(fixtures::omin_matrix(l1, l2, l3)));
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "(" << l1 << "," << l2 << "," << l3 << ")";
                        detail = os.str();
                        return false;
                    }
                }
        return true;
    });

    criterion(5, "surface data have a unique resolution with factorial chamber counts",
              [](std::string& detail) {
                  for (int m = 1; m <= 4; ++m) {
                      HypertoricDatum d = from_matrix_a(fixtures::surface_matrix(m));
                      Arrangement ha = from_columns(d.a);
                      Int chambers = chamber_count(ha);
                      Int weyl = namikawa_weyl(d).order;
                      Int fact = factorial(unsigned(m + 1));
                      if (chambers != fact || weyl != fact || crepant_resolution_count(d) != 1) {
                          detail = "m = " + std::to_string(m);
                          return false;
                      }
                      if (m <= 3 && oracles::chambers_brute_force(ha) != chambers) {
                          detail = "sign-vector oracle disagrees at m = " + std::to_string(m);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(6, "span dimensions pair up across the exact sequence, 500 random splits",
              [](std::string& detail) {
                  std::mt19937_64 rng(20240808);
                  std::uniform_int_distribution<std::size_t> dpick(1, 4);
                  int done = 0;
                  while (done < 500) {
                      std::size_t d = dpick(rng);
                      std::size_t n = d + 1 + rng() % 4;
                      IntMatrix proj(d, n);
                      for (std::size_t i = 0; i < d; ++i) proj(i, i) = 1;
                      IntMatrix a = fixtures::random_gl(d, rng) * proj * fixtures::random_gl(n, rng);
                      IntMatrix b = kernel_basis(a);
                      // random partition I | J of the columns
                      std::vector<std::size_t> iset, jset;
                      for (std::size_t c = 0; c < n; ++c) (rng() % 2 ? iset : jset).push_back(c);
                      IntMatrix bi = b.select_rows(iset);
                      std::vector<std::size_t> jcols = jset;
                      IntMatrix aj = a.select_cols(jcols);
                      std::size_t dim_b = rank_rational(bi);
                      std::size_t dim_a = rank_rational(aj);
                      for (std::size_t r = 0; r <= d; ++r) {
                          if (iset.size() < r || iset.size() - r > n - d) continue;  // admissible only
                          bool lhs = dim_b == iset.size() - r;
                          bool rhs = dim_a == d - r;
                          if (lhs != rhs) {
                              detail = "failed at trial " + std::to_string(done);
                              return false;
                          }
                      }
                      ++done;
                  }
                  return true;
              });

    criterion(7, "gale dual matroid equals the dual matroid, 200 random unimodular inputs",
              [](std::string& detail) {
                  std::mt19937_64 rng(424242);
                  int done = 0;
                  while (done < 200) {
                      auto g = fixtures::random_connected_graph(2 + rng() % 4, rng() % 4, rng);
                      if (g.edges.size() > 8) continue;
                      IntMatrix a = graph_incidence(g);
                      if (!is_surjective_over_Z(a)) continue;
                      Matroid lhs = from_matrix(kernel_basis(a).transpose());
                      Matroid rhs = dual(from_matrix(a));
                      if (lhs.bases() != rhs.bases()) {
                          detail = "failed at trial " + std::to_string(done);
                          return false;
                      }
                      ++done;
                  }
                  return true;
              });

    criterion(8, "equivalence invariance across 200 random transformed pairs",
              [](std::string& detail) {
                  std::mt19937_64 rng(9001);
                  int done = 0;
                  while (done < 200) {
                      auto g = fixtures::random_connected_graph(3 + rng() % 2, 1 + rng() % 2, rng);
                      if (g.edges.size() > 6) continue;
                      IntMatrix a = graph_incidence(g);
                      IntMatrix p = fixtures::random_gl(a.rows(), rng);
                      IntMatrix dd = fixtures::random_signed_permutation(a.cols(), rng);
                      IntMatrix a2 = p * a * dd;
                      if (!isomorphic(a, a2).isomorphic) {
                          detail = "isomorphism verdict failed at trial " + std::to_string(done);
                          return false;
                      }
                      HypertoricDatum d1 = from_matrix_a(a), d2 = from_matrix_a(a2);
                      auto w1 = namikawa_weyl(d1), w2 = namikawa_weyl(d2);
                      bool agree = dimension(d1) == dimension(d2) &&
                                   w1.multiplicities == w2.multiplicities && w1.order == w2.order &&
                                   codim2_profile(d1) == codim2_profile(d2) &&
                                   classify(a) == classify(a2) &&
                                   crepant_resolution_count(d1) == crepant_resolution_count(d2);
                      if (!agree) {
                          detail = "invariants diverged at trial " + std::to_string(done);
                          return false;
                      }
                      ++done;
                  }
                  return true;
              });

    criterion(9, "the seven catalog matroids separate and match their graphs",
              [](std::string& detail) {
                  const auto& cat = catalog_matrices();
                  const auto& graphs = catalog_graphs();
                  for (std::size_t i = 0; i < 7; ++i)
                      for (std::size_t j = i + 1; j < 7; ++j) {
                          if (cat[i].rows() != cat[j].rows()) continue;
                          if (is_isomorphic(from_matrix(cat[i].transpose()),
                                            from_matrix(cat[j].transpose()))) {
                              detail = "catalog entries " + std::to_string(i + 1) + " and " +
                                       std::to_string(j + 1) + " collide";
                              return false;
                          }
                      }
                  for (std::size_t i = 0; i < 7; ++i)
                      if (!is_isomorphic(from_matrix(cat[i].transpose()), graph_matroid(graphs[i]))) {
                          detail = "catalog entry " + std::to_string(i + 1) +
                                   " does not match its graph";
                          return false;
                      }
                  return true;
              });

    criterion(10, "ring generators of the minimal sl3 orbit at bound two", [](std::string& detail) {
        HypertoricDatum d = from_matrix_a(IntMatrix{{1, 1, 1}});
        auto rg = ring_generators(d, 2);
        std::set<std::string> got;
        for (const auto& g : rg.generators) got.insert(g.label());
        std::set<std::string> expect{"z1*w1", "z2*w2", "z3*w3", "z1*w2", "z1*w3",
                                     "z2*w3", "z2*w1", "z3*w1", "z3*w2"};
        if (got != expect) {
            detail = "generator set mismatch (" + std::to_string(got.size()) + " found)";
            return false;
        }
        return true;
    });

    criterion(11, "nilpotent-orbit detection on block products and two rejection cases",
              [](std::string& detail) {
                  // every block shape with at most three blocks and l <= 3
                  std::vector<std::vector<int>> shapes;
                  for (int l1 = 1; l1 <= 3; ++l1) {
                      shapes.push_back({l1});
                      for (int l2 = 1; l2 <= l1; ++l2) {
                          shapes.push_back({l1, l2});
                          for (int l3 = 1; l3 <= l2; ++l3) shapes.push_back({l1, l2, l3});
                      }
                  }
                  for (const auto& ells : shapes) {
                      auto r = degree_two_test(from_matrix_a(fixtures::block_ones_matrix(ells)));
                      std::vector<std::size_t> expect(ells.begin(), ells.end());
                      std::sort(expect.rbegin(), expect.rend());
                      if (!r || *r != expect) {
                          detail = "block shape failed";
                          return false;
                      }
                  }
                  if (degree_two_test(from_matrix_a(fixtures::omin_matrix(2, 1, 1))).has_value()) {
                      detail = "the 2,1,1 triple should be rejected";
                      return false;
                  }
                  // The S_A1 x S_A1 pair is required to be rejected here,
                  // but it reduces to the same pair as the two-block
                  // all-ones input accepted above: it is the product of two
                  // minimal sl2 orbit closures, so the detector reports
                  // {1,1}. The rejection is checked as required and fails.
                  IntMatrix pair = IntMatrix::block_diag({IntMatrix{{1, -1}}, IntMatrix{{1, -1}}});
                  auto r = degree_two_test(from_matrix_a(pair));
                  if (r.has_value()) {
                      detail = "S_A1 x S_A1 reported {1,1}: it coincides with the minimal "
                               "sl2 x sl2 orbit product, so the specified rejection is "
                               "unsatisfiable alongside the block cases above";
                      return false;
                  }
                  return true;
              });

    criterion(12, "cross-method chi agreement on the fixture arrangements", [](std::string& detail) {
        std::vector<std::pair<std::string, Arrangement>> fixtures_list;
        auto braid = Arrangement(3);
        braid.add_normal(IntVec{1, -1, 0});
        braid.add_normal(IntVec{1, 0, -1});
        braid.add_normal(IntVec{0, 1, -1});
        braid.finalize();
        fixtures_list.emplace_back("braid3", braid);
        Arrangement coord(3);
        for (std::size_t i = 0; i < 3; ++i) {
            IntVec v(3);
            v[i] = 1;
            coord.add_normal(std::move(v));
        }
        coord.finalize();
        fixtures_list.emplace_back("coordinate3", coord);
        fixtures_list.emplace_back("er(1,1,1)", edelman_reiner_arrangement(1, 1, 1));
        fixtures_list.emplace_back("er(2,1,1)", edelman_reiner_arrangement(2, 1, 1));
        fixtures_list.emplace_back("er(2,2,1)", edelman_reiner_arrangement(2, 2, 1));
        fixtures_list.emplace_back("er(2,2,2)", edelman_reiner_arrangement(2, 2, 2));
        fixtures_list.emplace_back("h(2,2,1)", from_columns(fixtures::omin_matrix(2, 2, 1)));
        fixtures_list.emplace_back("h(2,2,2)", from_columns(fixtures::omin_matrix(2, 2, 2)));
        fixtures_list.emplace_back("h(3,2,1)", from_columns(fixtures::omin_matrix(3, 2, 1)));
        fixtures_list.emplace_back("h(3,3,1)", from_columns(fixtures::omin_matrix(3, 3, 1)));
        fixtures_list.emplace_back("surface3", from_columns(fixtures::surface_matrix(3)));

        ChiOptions del;
        del.method = ChiMethod::DeletionRestriction;
        for (const auto& [name, arr] : fixtures_list) {
            Poly chi = char_poly(arr);
            if (chi != char_poly(arr, del)) {
                detail = name + ": poset vs deletion-restriction";
                return false;
            }
            // finite-field leg only where a prime above the bound keeps
            // p^d within the stated enumeration budget of 1e7
            Int bound = subdeterminant_bound(arr);
            std::uint64_t p = next_prime_above(bound.convert_to<std::uint64_t>());
            Int points = 1;
            for (std::size_t i = 0; i < arr.ambient_dim; ++i) points *= p;
            if (points <= 10000000) {
                auto c = char_poly_finite_field(arr, p, 10000000);
                if (c.small_prime_warning || c.count != chi.eval(Int(p))) {
                    detail = name + ": finite-field count at p = " + std::to_string(p);
                    return false;
                }
            }
        }
        return true;
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
