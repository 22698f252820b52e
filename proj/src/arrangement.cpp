#include "hypertoric/arrangement.hpp"
#include "hypertoric/datum.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <unordered_map>

namespace hypertoric {

void Arrangement::add_normal(IntVec v) {
    if (v.size() != ambient_dim) throw error(errc::dimension_mismatch, "normal length");
    if (!normalize_primitive(v)) throw error(errc::invalid_input, "zero normal");
    normals.push_back(std::move(v));
}

void Arrangement::finalize() {
    std::sort(normals.begin(), normals.end());
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
}

namespace {

template <class Fn>
void each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        fn(idx);
        if (k == 0) return;
        std::size_t i = k - 1;
        while (idx[i] == i + n - k) {
            if (i == 0) return;
            --i;
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

Arrangement from_columns(const IntMatrix& a) {
    const std::size_t d = a.rows(), n = a.cols();
    if (rank_rational(a) != d) throw error(errc::rank_deficient, "from_columns needs full row rank");
    Arrangement arr(d);
    if (d == 0) return arr;
    // (d-1)-subsets of columns of rank d-1 span the candidate hyperplanes
    each_subset(n, d - 1, [&](const std::vector<std::size_t>& sel) {
        IntMatrix rows(d - 1, d);
        for (std::size_t i = 0; i < d - 1; ++i)
            for (std::size_t j = 0; j < d; ++j) rows(i, j) = a(j, sel[i]);
        if (rank_rational(rows) == d - 1) {
            IntMatrix ker = kernel_lattice(rows);
            if (ker.cols() == 1) arr.add_normal(ker.col(0));
        }
    });
    arr.finalize();
    return arr;
}

Arrangement edelman_reiner_arrangement(int l1, int l2, int l3) {
    if (l1 < 1 || l2 < 1 || l3 < 1) throw error(errc::invalid_input, "group sizes must be positive");
    const int d = l1 + l2 + l3;
    Arrangement arr{std::size_t(d)};
    const int ox = 0, oy = l1, oz = l1 + l2;
    for (int i = 0; i < l1; ++i)
        for (int j = 0; j < l2; ++j)
            for (int k = 0; k < l3; ++k) {
                IntVec v(d);
                v[ox + i] = 1;
                v[oy + j] = 1;
                v[oz + k] = 1;
                arr.add_normal(std::move(v));
            }
    auto differences = [&](int off, int cnt) {
        for (int i = 0; i < cnt; ++i)
            for (int j = i + 1; j < cnt; ++j) {
                IntVec v(d);
                v[off + i] = 1;
                v[off + j] = -1;
                arr.add_normal(std::move(v));
            }
    };
    differences(ox, l1);
    differences(oy, l2);
    differences(oz, l3);
    arr.finalize();
    return arr;
}

// ---------------------------------------------------------------------------
// Flat scan: breadth-first closure of the intersection lattice with Mobius
// values computed on the fly. For a flat x of rank r+1 and its least
// containing hyperplane a, mu(x) = -sum of mu(y) over the rank-r flats y
// with y v a = x (Weisner), and every such join shows up as an expansion
// step of the sweep, so no pairwise order comparisons are ever needed.
// ---------------------------------------------------------------------------

namespace {

struct RetryWithBigInt {};

template <class E>
struct Ops;

template <>
struct Ops<long long> {
    static long long mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw RetryWithBigInt{};
        return r;
    }
    static long long sub(long long a, long long b) {
        long long r;
        if (__builtin_sub_overflow(a, b, &r)) throw RetryWithBigInt{};
        return r;
    }
    static long long gcd(long long a, long long b) { return std::gcd(a, b); }
    static Int to_int(long long a) { return Int(a); }
    static bool fits(const Int& a) { return a >= std::numeric_limits<long long>::min() && a <= std::numeric_limits<long long>::max(); }
    static long long from_int(const Int& a) { return a.convert_to<long long>(); }
};

template <>
struct Ops<Int> {
    static Int mul(const Int& a, const Int& b) { return a * b; }
    static Int sub(const Int& a, const Int& b) { return a - b; }
    static Int gcd(const Int& a, const Int& b) { return hypertoric::gcd(a, b); }
    static Int to_int(const Int& a) { return a; }
    static bool fits(const Int&) { return true; }
    static Int from_int(const Int& a) { return a; }
};

// divide by the content and make the first nonzero entry positive
template <class E>
void normalize_row(std::vector<E>& v) {
    E g = 0;
    for (const E& x : v) {
        g = Ops<E>::gcd(g, x);
        if (g == 1) break;
    }
    if (g == 0) return;
    E lead = 0;
    for (const E& x : v)
        if (x != 0) { lead = x; break; }
    if (lead < 0) g = -g;
    if (g != 1)
        for (E& x : v) x /= g;
}

template <class E>
struct Basis {
    // row-echelon rows, each primitive with positive pivot; pivots ascending
    std::vector<std::vector<E>> rows;
    std::vector<int> pivots;

    // fraction-free reduction; result normalized primitive (or all-zero)
    std::vector<E> reduce(std::vector<E> v) const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const int p = pivots[i];
            if (v[p] == 0) continue;
            E g = Ops<E>::gcd(rows[i][p], v[p]);
            E f1 = rows[i][p] / g, f2 = v[p] / g;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = Ops<E>::sub(Ops<E>::mul(f1, v[j]), Ops<E>::mul(f2, rows[i][j]));
            normalize_row(v);
        }
        return v;
    }

    bool contains(const std::vector<E>& v) const {
        auto r = reduce(v);
        for (const E& x : r)
            if (x != 0) return false;
        return true;
    }

    // v must already be reduced and nonzero
    Basis extended(const std::vector<E>& v) const {
        Basis b = *this;
        int p = 0;
        while (v[std::size_t(p)] == 0) ++p;
        for (std::size_t i = 0; i < b.rows.size(); ++i) {
            auto& r = b.rows[i];
            if (r[std::size_t(p)] == 0) continue;
            E g = Ops<E>::gcd(v[std::size_t(p)], r[std::size_t(p)]);
            E f1 = v[std::size_t(p)] / g, f2 = r[std::size_t(p)] / g;
            for (std::size_t j = 0; j < r.size(); ++j)
                r[j] = Ops<E>::sub(Ops<E>::mul(f1, r[j]), Ops<E>::mul(f2, v[j]));
            normalize_row(r);
        }
        std::size_t at = 0;
        while (at < b.pivots.size() && b.pivots[at] < p) ++at;
        b.rows.insert(b.rows.begin() + at, v);
        b.pivots.insert(b.pivots.begin() + at, p);
        return b;
    }

    bool operator<(const Basis& o) const {
        if (rows.size() != o.rows.size()) return rows.size() < o.rows.size();
        return rows < o.rows;
    }
    bool operator==(const Basis& o) const { return rows == o.rows; }
};

inline bool bit_get(const std::vector<std::uint64_t>& w, std::size_t i) {
    return (w[i >> 6] >> (i & 63)) & 1u;
}
inline void bit_set(std::vector<std::uint64_t>& w, std::size_t i) {
    w[i >> 6] |= std::uint64_t(1) << (i & 63);
}

template <class E>
detail::FlatScan scan_with(std::size_t dim, const std::vector<IntVec>& normals_in,
                           std::size_t flat_cap) {
    const std::size_t n = normals_in.size();
    const std::size_t words = (n + 63) / 64;

    std::vector<std::vector<E>> normals(n);
    for (std::size_t i = 0; i < n; ++i) {
        normals[i].resize(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            if (!Ops<E>::fits(normals_in[i][j])) throw RetryWithBigInt{};
            normals[i][j] = Ops<E>::from_int(normals_in[i][j]);
        }
    }

    struct Flat {
        Basis<E> basis;
        std::vector<std::uint64_t> hset;
        int rank;
        int astar;           // least containing hyperplane, -1 at rank 0
        long long mobius;
        long long accum;
    };
    std::vector<Flat> flats;
    std::map<Basis<E>, std::size_t> index;  // deterministic dedupe

    flats.push_back(Flat{Basis<E>{}, std::vector<std::uint64_t>(words, 0), 0, -1, 1, 0});
    index.emplace(flats[0].basis, 0);

    std::vector<std::size_t> level{0};
    while (!level.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t yi : level) {
            for (std::size_t i = 0; i < n; ++i) {
                if (bit_get(flats[yi].hset, i)) continue;
                auto v = flats[yi].basis.reduce(normals[i]);
                bool zero = true;
                for (const E& x : v)
                    if (x != 0) { zero = false; break; }
                if (zero) continue;  // cannot happen for i outside hset; keep safe
                Basis<E> nb = flats[yi].basis.extended(v);
                auto it = index.find(nb);
                std::size_t xi;
                if (it == index.end()) {
                    if (flats.size() >= flat_cap)
                        throw error(errc::size_guard, "flat cap exceeded");
                    Flat f;
                    f.hset.assign(words, 0);
                    f.rank = flats[yi].rank + 1;
                    f.mobius = 0;
                    f.accum = 0;
                    // membership set: everything already in S(y), plus the
                    // hyperplanes newly swallowed by the bigger span
                    for (std::size_t j = 0; j < n; ++j) {
                        if (bit_get(flats[yi].hset, j) || j == i || nb.contains(normals[j]))
                            bit_set(f.hset, j);
                    }
                    f.astar = -1;
                    for (std::size_t j = 0; j < n; ++j)
                        if (bit_get(f.hset, j)) { f.astar = int(j); break; }
                    f.basis = std::move(nb);
                    xi = flats.size();
                    index.emplace(f.basis, xi);
                    flats.push_back(std::move(f));
                    next.push_back(xi);
                } else {
                    xi = it->second;
                }
                if (int(i) == flats[xi].astar) flats[xi].accum += flats[yi].mobius;
            }
        }
        for (std::size_t xi : next) flats[xi].mobius = -flats[xi].accum;
        // deterministic sweep order for the next level
        std::sort(next.begin(), next.end(), [&](std::size_t a, std::size_t b) {
            return flats[a].basis < flats[b].basis;
        });
        level = std::move(next);
    }

    // emit sorted by (rank, basis)
    std::vector<std::size_t> order(flats.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (flats[a].rank != flats[b].rank) return flats[a].rank < flats[b].rank;
        return flats[a].basis < flats[b].basis;
    });

    detail::FlatScan out;
    out.ambient_dim = dim;
    out.n_hyperplanes = n;
    out.ranks.reserve(flats.size());
    out.mobius.reserve(flats.size());
    out.hsets.reserve(flats.size());
    out.normal_bases.reserve(flats.size());
    for (std::size_t k : order) {
        out.ranks.push_back(flats[k].rank);
        out.mobius.push_back(flats[k].mobius);
        out.hsets.push_back(std::move(flats[k].hset));
        IntMatrix nb(flats[k].basis.rows.size(), dim);
        for (std::size_t i = 0; i < flats[k].basis.rows.size(); ++i)
            for (std::size_t j = 0; j < dim; ++j)
                nb(i, j) = Ops<E>::to_int(flats[k].basis.rows[i][j]);
        out.normal_bases.push_back(std::move(nb));
    }
    return out;
}

} // namespace

namespace detail {

FlatScan scan_flats(std::size_t dim, const std::vector<IntVec>& normals, std::size_t flat_cap) {
    try {
        return scan_with<long long>(dim, normals, flat_cap);
    } catch (const RetryWithBigInt&) {
        return scan_with<Int>(dim, normals, flat_cap);
    }
}

} // namespace detail

IntersectionPoset intersection_poset(const Arrangement& arr) {
    auto scan = detail::scan_flats(arr.ambient_dim, arr.normals, std::size_t(-1));
    IntersectionPoset poset;
    poset.ambient_dim = arr.ambient_dim;
    poset.flats.reserve(scan.ranks.size());
    for (std::size_t k = 0; k < scan.ranks.size(); ++k) {
        IntersectionPoset::Flat f{RationalSubspace(arr.ambient_dim), std::move(scan.hsets[k]),
                                  scan.ranks[k], int(arr.ambient_dim) - scan.ranks[k],
                                  scan.mobius[k]};
        // the flat itself is the kernel of its normal space
        f.space = RationalSubspace::span_of_cols(kernel_lattice(scan.normal_bases[k]));
        poset.flats.push_back(std::move(f));
    }
    return poset;
}

bool IntersectionPoset::leq(std::size_t x, std::size_t y) const {
    // x <= y iff x contains y iff every hyperplane through x passes through y
    const auto& a = flats[x].hset;
    const auto& b = flats[y].hset;
    for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

namespace {

Poly chi_from_scan(const detail::FlatScan& scan) {
    IntVec coeffs(scan.ambient_dim + 1);
    for (std::size_t k = 0; k < scan.ranks.size(); ++k)
        coeffs[scan.ambient_dim - std::size_t(scan.ranks[k])] += scan.mobius[k];
    return Poly(std::move(coeffs));
}

using NormalKey = std::pair<std::size_t, std::vector<IntVec>>;

Poly chi_delres(std::size_t dim, std::vector<IntVec> normals, std::map<NormalKey, Poly>& memo) {
    if (normals.empty()) return Poly::monomial(unsigned(dim));
    std::sort(normals.begin(), normals.end());
    NormalKey key{dim, normals};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    IntVec h = normals.back();
    std::vector<IntVec> rest(normals.begin(), normals.end() - 1);

    // restriction: rewrite the remaining normals on an integral basis of h's
    // hyperplane so the recursion stays over Z
    IntMatrix hrow(1, dim);
    hrow.set_row(0, h);
    IntMatrix emb = kernel_lattice(hrow);  // dim x (dim-1)
    std::vector<IntVec> restricted;
    for (const auto& nu : rest) {
        IntVec w(emb.cols());
        for (std::size_t j = 0; j < emb.cols(); ++j)
            for (std::size_t i = 0; i < dim; ++i) w[j] += emb(i, j) * nu[i];
        if (normalize_primitive(w)) restricted.push_back(std::move(w));
    }
    std::sort(restricted.begin(), restricted.end());
    restricted.erase(std::unique(restricted.begin(), restricted.end()), restricted.end());

    Poly chi = chi_delres(dim, rest, memo) - chi_delres(dim - 1, restricted, memo);
    memo.emplace(std::move(key), chi);
    return chi;
}

} // namespace

Int subdeterminant_bound(const Arrangement& arr) {
    // product of the min(d, n) largest squared row norms, then isqrt
    std::vector<Int> sq;
    for (const auto& v : arr.normals) {
        Int s = 0;
        for (const Int& x : v) s += x * x;
        sq.push_back(s);
    }
    std::sort(sq.rbegin(), sq.rend());
    Int prod = 1;
    for (std::size_t i = 0; i < std::min(arr.ambient_dim, sq.size()); ++i) prod *= sq[i];
    Int r = boost::multiprecision::sqrt(prod);
    while (r * r < prod) ++r;
    return r;
}

FiniteFieldCount char_poly_finite_field(const Arrangement& arr, std::uint64_t p,
                                        std::uint64_t budget) {
    if (!is_prime_u64(p)) throw error(errc::invalid_input, "p must be prime");
    const std::size_t d = arr.ambient_dim, n = arr.size();
    Int points = 1;
    for (std::size_t i = 0; i < d; ++i) {
        points *= p;
        if (points > budget) throw error(errc::budget_exceeded, "p^d exceeds the enumeration budget");
    }
    FiniteFieldCount out;
    out.small_prime_warning = Int(p) <= subdeterminant_bound(arr);

    // normals mod p, bucketed by their last nonzero coordinate so each
    // hyperplane is tested as soon as its dot product is complete
    std::vector<std::vector<std::uint64_t>> nm(n, std::vector<std::uint64_t>(d, 0));
    std::vector<std::vector<std::size_t>> final_at(d);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t last = 0;
        for (std::size_t j = 0; j < d; ++j) {
            Int e = arr.normals[i][j] % p;
            if (e < 0) e += p;
            nm[i][j] = e.convert_to<std::uint64_t>();
            if (nm[i][j] != 0) last = j;
        }
        final_at[last].push_back(i);
    }

    if (d == 0) {
        out.count = n == 0 ? 1 : 0;
        return out;
    }

    std::vector<std::vector<std::uint64_t>> partial(d + 1, std::vector<std::uint64_t>(n, 0));
    std::vector<std::uint64_t> coord(d, 0);
    Int count = 0;
    std::size_t depth = 0;
    for (;;) {
        // apply coordinate value coord[depth] at this depth
        auto& cur = partial[depth + 1];
        const auto& prev = partial[depth];
        bool dead = false;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t s = prev[i] + nm[i][depth] * coord[depth];
            cur[i] = s % p;
        }
        for (std::size_t i : final_at[depth])
            if (cur[i] == 0) { dead = true; break; }
        if (!dead) {
            if (depth + 1 == d) {
                ++count;
            } else {
                ++depth;
                coord[depth] = 0;
                continue;
            }
        }
        // advance
        for (;;) {
            if (coord[depth] + 1 < p) {
                ++coord[depth];
                break;
            }
            if (depth == 0) {
                out.count = count;
                return out;
            }
            --depth;
        }
    }
}

Poly char_poly(const Arrangement& arr, const ChiOptions& opts) {
    switch (opts.method) {
        case ChiMethod::Poset: {
            try {
                auto scan = detail::scan_flats(arr.ambient_dim, arr.normals, opts.flat_cap);
                return chi_from_scan(scan);
            } catch (const error& e) {
                if (e.code() != errc::size_guard) throw;
                // poset blew past the flat cap; fall back to recursion
                std::map<NormalKey, Poly> memo;
                return chi_delres(arr.ambient_dim, arr.normals, memo);
            }
        }
        case ChiMethod::DeletionRestriction: {
            std::map<NormalKey, Poly> memo;
            return chi_delres(arr.ambient_dim, arr.normals, memo);
        }
        case ChiMethod::FiniteField: {
            // evaluation-only method: chi(p) at d+1 primes above the
            // subdeterminant bound, then exact interpolation
            const std::size_t d = arr.ambient_dim;
            Int bound = subdeterminant_bound(arr);
            std::vector<std::uint64_t> primes;
            std::uint64_t p = bound.convert_to<std::uint64_t>();
            while (primes.size() < d + 1) {
                p = next_prime_above(p);
                primes.push_back(p);
            }
            std::vector<Int> xs, ys;
            for (std::uint64_t q : primes) {
                xs.emplace_back(q);
                ys.push_back(char_poly_finite_field(arr, q, opts.enumeration_budget).count);
            }
            const std::size_t m = xs.size();
            IntMatrix vmat(m, m);
            for (std::size_t i = 0; i < m; ++i) {
                Int pw = 1;
                for (std::size_t j = 0; j < m; ++j) {
                    vmat(i, j) = pw;
                    pw *= xs[i];
                }
            }
            auto coeffs = solve_integral(vmat, ys);
            if (!coeffs) throw error(errc::verification_failed, "finite-field interpolation was not integral");
            return Poly(std::move(*coeffs));
        }
    }
    throw error(errc::invalid_input, "unknown method");
}

Int chamber_count(const Arrangement& arr, const ChiOptions& opts) {
    Poly chi = char_poly(arr, opts);
    Int v = chi.eval(Int(-1));
    return arr.ambient_dim % 2 == 0 ? v : -v;
}

std::optional<std::vector<int>> chamber_of(const IntVec& alpha, const Arrangement& arr) {
    if (alpha.size() != arr.ambient_dim) throw error(errc::dimension_mismatch, "alpha length");
    std::vector<int> signs;
    signs.reserve(arr.size());
    for (const auto& nu : arr.normals) {
        Int dot = 0;
        for (std::size_t j = 0; j < nu.size(); ++j) dot += nu[j] * alpha[j];
        if (dot == 0) return std::nullopt;
        signs.push_back(dot > 0 ? 1 : -1);
    }
    return signs;
}

ErClosedForm er_closed_form(int l1, int l2, int l3) {
    if (l1 < 1 || l2 < 1) throw error(errc::invalid_input, "group sizes must be positive");
    if (l3 != 1 && l3 != 2) throw error(errc::unsupported_l3, "closed forms exist for l3 in {1,2}");
    ErClosedForm out;
    if (l3 == 1) {
        Poly chi = Poly::monomial(2);
        for (int i = 1; i <= l1 + l2 - 1; ++i) chi = chi * Poly::linear(Int(i));
        out.chi = chi;
        out.chambers = factorial(unsigned(l1 + l2));
    } else {
        Poly chi = Poly::monomial(2) * Poly::linear(Int(1));
        for (int i = l1 + 1; i <= l1 + l2; ++i) chi = chi * Poly::linear(Int(i));
        for (int j = l2 + 1; j <= l1 + l2 - 1; ++j) chi = chi * Poly::linear(Int(j));
        out.chi = chi;
        Int r = 2 * binomial(unsigned(l1 + l2 + 1), unsigned(l1)) *
                binomial(unsigned(l1 + l2 + 1), unsigned(l2)) * factorial(unsigned(l1)) *
                factorial(unsigned(l2));
        if (r % (l1 + l2 + 1) != 0)
            throw error(errc::verification_failed, "closed-form division is not exact");
        out.chambers = r / (l1 + l2 + 1);
    }
    return out;
}

Int crepant_resolution_count(const HypertoricDatum& datum, const ChiOptions& opts) {
    Arrangement ha = from_columns(datum.a);
    Int chambers = chamber_count(ha, opts);
    Int order = namikawa_weyl(datum).order;
    if (chambers % order != 0)
        throw error(errc::not_divisible, "chamber count is not divisible by the Weyl group order");
    return chambers / order;
}

} // namespace hypertoric
