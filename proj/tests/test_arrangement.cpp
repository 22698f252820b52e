#include "hypertoric/arrangement.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <random>
#include <set>

using namespace hypertoric;

namespace {

Arrangement braid3() {
    Arrangement arr(3);
    arr.add_normal(IntVec{1, -1, 0});
    arr.add_normal(IntVec{1, 0, -1});
    arr.add_normal(IntVec{0, 1, -1});
    arr.finalize();
    return arr;
}

Arrangement coordinate(std::size_t d) {
    Arrangement arr(d);
    for (std::size_t i = 0; i < d; ++i) {
        IntVec v(d);
        v[i] = 1;
        arr.add_normal(std::move(v));
    }
    arr.finalize();
    return arr;
}

// Restriction oracle used only to exercise the deletion-restriction identity.
Arrangement restrict_to(const Arrangement& arr, std::size_t h) {
    IntMatrix row(1, arr.ambient_dim);
    row.set_row(0, arr.normals[h]);
    IntMatrix emb = kernel_lattice(row);
    Arrangement out(emb.cols());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i == h) continue;
        IntVec w(emb.cols());
        for (std::size_t j = 0; j < emb.cols(); ++j)
            for (std::size_t k = 0; k < arr.ambient_dim; ++k)
                w[j] += emb(k, j) * arr.normals[i][k];
        bool zero = true;
        for (const Int& x : w)
            if (x != 0) { zero = false; break; }
        if (!zero) out.add_normal(std::move(w));
    }
    out.finalize();
    return out;
}

Arrangement drop(const Arrangement& arr, std::size_t h) {
    Arrangement out(arr.ambient_dim);
    for (std::size_t i = 0; i < arr.size(); ++i)
        if (i != h) out.add_normal(arr.normals[i]);
    out.finalize();
    return out;
}

} // namespace

TEST_SUITE("arrangement") {

TEST_CASE("from_columns of a rank-one matrix is the origin of the line") {
    Arrangement arr = from_columns(IntMatrix{{1, 1, 1}});
    REQUIRE(arr.size() == 1);
    CHECK(arr.normals[0] == IntVec{1});
}

TEST_CASE("from_columns of the identity gives the coordinate lines") {
    Arrangement arr = from_columns(IntMatrix::identity(2));
    REQUIRE(arr.size() == 2);
    CHECK(arr.normals[0] == IntVec{0, 1});
    CHECK(arr.normals[1] == IntVec{1, 0});
}

TEST_CASE("from_columns reproduces the triple-power hyperplane list") {
    Arrangement arr = from_columns(fixtures::omin_matrix(2, 2, 1));
    std::set<IntVec> expect{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    std::set<IntVec> got(arr.normals.begin(), arr.normals.end());
    CHECK(got == expect);
}

TEST_CASE("triple-sum arrangement shapes") {
    CHECK(edelman_reiner_arrangement(1, 1, 1).size() == 1);
    Arrangement a211 = edelman_reiner_arrangement(2, 1, 1);
    std::set<IntVec> expect{{1, 0, 1, 1}, {0, 1, 1, 1}, {1, -1, 0, 0}};
    std::set<IntVec> got(a211.normals.begin(), a211.normals.end());
    CHECK(got == expect);
    for (int l1 = 1; l1 <= 3; ++l1)
        for (int l2 = 1; l2 <= 3; ++l2)
            for (int l3 = 1; l3 <= 3; ++l3) {
                std::size_t expected = std::size_t(l1 * l2 * l3) + l1 * (l1 - 1) / 2 +
                                       l2 * (l2 - 1) / 2 + l3 * (l3 - 1) / 2;
                CHECK(edelman_reiner_arrangement(l1, l2, l3).size() == expected);
            }
}

TEST_CASE("poset of the empty arrangement") {
    auto poset = intersection_poset(Arrangement(3));
    REQUIRE(poset.flats.size() == 1);
    CHECK(poset.flats[0].mobius == 1);
    CHECK(poset.flats[0].dim == 3);
}

TEST_CASE("poset of a single hyperplane") {
    Arrangement arr(2);
    arr.add_normal(IntVec{1, 0});
    auto poset = intersection_poset(arr);
    REQUIRE(poset.flats.size() == 2);
    CHECK(poset.flats[0].mobius == 1);
    CHECK(poset.flats[1].mobius == -1);
}

TEST_CASE("poset of the braid arrangement in R3") {
    auto poset = intersection_poset(braid3());
    REQUIRE(poset.flats.size() == 5);
    std::vector<long long> mob;
    for (const auto& f : poset.flats) mob.push_back(f.mobius);
    CHECK(mob == std::vector<long long>{1, -1, -1, -1, 2});
    CHECK(poset.flats[4].rank == 2);
    CHECK(poset.flats[4].space.dim() == 1);
}

TEST_CASE("mobius recursion holds at every flat") {
    for (const Arrangement& arr :
         {braid3(), coordinate(3), edelman_reiner_arrangement(2, 2, 1),
          edelman_reiner_arrangement(2, 2, 2), from_columns(fixtures::omin_matrix(2, 2, 1)),
          from_columns(fixtures::omin_matrix(3, 2, 1)), from_columns(fixtures::surface_matrix(3))}) {
        auto poset = intersection_poset(arr);
        for (std::size_t x = 0; x < poset.flats.size(); ++x) {
            long long sum = 0;
            for (std::size_t y = 0; y < poset.flats.size(); ++y)
                if (y != x && poset.leq(y, x)) sum += poset.flats[y].mobius;
            if (poset.flats[x].rank == 0)
                CHECK(poset.flats[x].mobius == 1);
            else
                CHECK(poset.flats[x].mobius == -sum);
        }
        // chi reproduced from the poset
        IntVec coeffs(arr.ambient_dim + 1);
        for (const auto& f : poset.flats) coeffs[std::size_t(f.dim)] += f.mobius;
        CHECK(Poly(coeffs) == char_poly(arr));
    }
}

TEST_CASE("characteristic polynomial of the empty plane") {
    CHECK(char_poly(Arrangement(2)) == Poly::monomial(2));
}

TEST_CASE("characteristic polynomial of the braid arrangement") {
    Poly chi = char_poly(braid3());
    Poly expected = Poly::monomial(1) * Poly::linear(1) * Poly::linear(2);
    CHECK(chi == expected);
    // independent oracle: finite-field counts at four primes, interpolated
    ChiOptions ff;
    ff.method = ChiMethod::FiniteField;
    CHECK(char_poly(braid3(), ff) == expected);
}

TEST_CASE("finite-field point counts") {
    Arrangement one(2);
    one.add_normal(IntVec{1, 0});
    CHECK(char_poly_finite_field(one, 5).count == 20);
    CHECK(char_poly_finite_field(braid3(), 7).count == 7 * 6 * 5);
    CHECK(char_poly_finite_field(edelman_reiner_arrangement(1, 1, 1), 11).count == 11 * 11 * 10);
}

TEST_CASE("finite-field guards") {
    CHECK_THROWS_AS(char_poly_finite_field(braid3(), 6), error);   // not prime
    CHECK_THROWS_AS(char_poly_finite_field(braid3(), 101, 1000), error);  // budget
    CHECK(char_poly_finite_field(braid3(), 2).small_prime_warning);
}

TEST_CASE("chamber counts") {
    CHECK(chamber_count(Arrangement(4)) == 1);
    CHECK(chamber_count(coordinate(3)) == 8);
    CHECK(chamber_count(braid3()) == 6);
}

TEST_CASE("chamber count agrees with sign-vector enumeration") {
    CHECK(oracles::chambers_brute_force(braid3()) == 6);
    CHECK(oracles::chambers_brute_force(coordinate(3)) == 8);
    Arrangement surf = from_columns(fixtures::surface_matrix(3));
    CHECK(chamber_count(surf) == oracles::chambers_brute_force(surf));
    CHECK(chamber_count(surf) == 24);
    Arrangement h221 = from_columns(fixtures::omin_matrix(2, 2, 1));
    CHECK(chamber_count(h221) == oracles::chambers_brute_force(h221));
}

TEST_CASE("chamber location by sign vector") {
    auto arr = braid3();
    CHECK_FALSE(chamber_of(IntVec{0, 0, 0}, arr).has_value());
    auto c1 = chamber_of(IntVec{3, 2, 1}, arr);
    auto c2 = chamber_of(IntVec{5, 4, 1}, arr);
    auto c3 = chamber_of(IntVec{-3, -2, -1}, arr);
    REQUIRE(c1.has_value());
    REQUIRE(c2.has_value());
    REQUIRE(c3.has_value());
    CHECK(*c1 == *c2);
    for (std::size_t i = 0; i < c1->size(); ++i) CHECK((*c1)[i] == -(*c3)[i]);
}

TEST_CASE("deletion-restriction identity on fixtures") {
    for (const Arrangement& arr :
         {braid3(), edelman_reiner_arrangement(2, 2, 1), from_columns(fixtures::omin_matrix(2, 2, 1))}) {
        Poly chi = char_poly(arr);
        for (std::size_t h = 0; h < arr.size(); ++h)
            CHECK(chi == char_poly(drop(arr, h)) - char_poly(restrict_to(arr, h)));
    }
}

TEST_CASE("methods agree on fixtures") {
    ChiOptions del;
    del.method = ChiMethod::DeletionRestriction;
    ChiOptions ff;
    ff.method = ChiMethod::FiniteField;
    for (const Arrangement& arr :
         {braid3(), coordinate(3), edelman_reiner_arrangement(2, 1, 1),
          edelman_reiner_arrangement(2, 2, 1), from_columns(fixtures::omin_matrix(2, 2, 1))}) {
        Poly chi = char_poly(arr);
        CHECK(chi == char_poly(arr, del));
        CHECK(chi == char_poly(arr, ff));
        // the ambient-space flat contributes the monic top term
        CHECK(chi.degree() == int(arr.ambient_dim));
        CHECK(chi.coeff(unsigned(arr.ambient_dim)) == 1);
    }
}

TEST_CASE("squared-variable lemma on small sizes") {
    for (auto [l1, l2, l3] : {std::tuple{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {2, 2, 2}}) {
        Poly lhs = char_poly(edelman_reiner_arrangement(l1, l2, l3));
        Poly rhs = Poly::monomial(2) * char_poly(from_columns(fixtures::omin_matrix(l1, l2, l3)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("closed forms for l3 = 1 and 2") {
    auto f111 = er_closed_form(1, 1, 1);
    CHECK(f111.chi == Poly::monomial(2) * Poly::linear(1));
    CHECK(f111.chambers == 2);
    CHECK(er_closed_form(2, 2, 1).chambers == 24);
    CHECK(er_closed_form(2, 2, 2).chambers == 160);
    CHECK_THROWS_AS(er_closed_form(2, 2, 3), error);
    // computed chambers match the closed forms on small instances
    for (auto [l1, l2, l3] : {std::tuple{1, 1, 1}, {2, 1, 1}, {1, 2, 2}, {2, 2, 2}}) {
        auto cf = er_closed_form(l1, l2, l3);
        Arrangement arr = edelman_reiner_arrangement(l1, l2, l3);
        CHECK(char_poly(arr) == cf.chi);
        CHECK(chamber_count(arr) == cf.chambers);
    }
}

TEST_CASE("poset construction is deterministic") {
    Arrangement arr = edelman_reiner_arrangement(2, 2, 1);
    auto p1 = intersection_poset(arr);
    auto p2 = intersection_poset(arr);
    REQUIRE(p1.flats.size() == p2.flats.size());
    for (std::size_t i = 0; i < p1.flats.size(); ++i) {
        CHECK(p1.flats[i].space == p2.flats[i].space);
        CHECK(p1.flats[i].hset == p2.flats[i].hset);
        CHECK(p1.flats[i].mobius == p2.flats[i].mobius);
    }
}

TEST_CASE("flat cap falls back to the recursive method") {
    ChiOptions tiny;
    tiny.flat_cap = 2;
    CHECK(char_poly(braid3(), tiny) == char_poly(braid3()));
}

TEST_CASE("big normal entries take the arbitrary-precision path") {
    Arrangement arr(2);
    Int big = Int(1) << 40;
    arr.add_normal(IntVec{big + 1, 1});
    arr.add_normal(IntVec{1, big});
    arr.add_normal(IntVec{1, 0});
    arr.finalize();
    Poly chi = char_poly(arr);
    // three distinct lines through the origin of the plane
    CHECK(chi == Poly(IntVec{2, -3, 1}));
    CHECK(chamber_count(arr) == 6);
}

TEST_CASE("poset order relation matches subspace containment") {
    auto poset = intersection_poset(braid3());
    for (std::size_t i = 0; i < poset.flats.size(); ++i)
        for (std::size_t j = 0; j < poset.flats.size(); ++j)
            CHECK(poset.leq(i, j) ==
                  poset.flats[i].space.contains_subspace(poset.flats[j].space));
}

TEST_CASE("subdeterminant bound is conservative") {
    Int b = subdeterminant_bound(braid3());
    CHECK(b >= 2);  // actual max subdeterminant of the braid normals
    CHECK_FALSE(char_poly_finite_field(braid3(), next_prime_above(b.convert_to<std::uint64_t>()))
                    .small_prime_warning);
}

} // TEST_SUITE
