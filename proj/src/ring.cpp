#include "hypertoric/ring.hpp"

#include <algorithm>
#include <map>

namespace hypertoric {

bool RingGenerator::is_quadric() const { return quadric_index().has_value(); }

std::optional<std::size_t> RingGenerator::quadric_index() const {
    std::optional<std::size_t> idx;
    for (std::size_t i = 0; i < z_exponents.size(); ++i) {
        if (z_exponents[i] == 0 && w_exponents[i] == 0) continue;
        if (z_exponents[i] == 1 && w_exponents[i] == 1 && !idx) {
            idx = i;
            continue;
        }
        return std::nullopt;
    }
    return idx;
}

IntVec RingGenerator::beta() const {
    IntVec v(z_exponents.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = Int(z_exponents[i]) - Int(w_exponents[i]);
    return v;
}

std::string RingGenerator::label() const {
    std::string s;
    auto app = [&](char var, std::size_t i, std::size_t e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += var;
        s += std::to_string(i + 1);
        if (e > 1) s += "^" + std::to_string(e);
    };
    for (std::size_t i = 0; i < z_exponents.size(); ++i) app('z', i, z_exponents[i]);
    for (std::size_t i = 0; i < w_exponents.size(); ++i) app('w', i, w_exponents[i]);
    return s.empty() ? "1" : s;
}

bool RingGenerator::operator<(const RingGenerator& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    if (z_exponents != o.z_exponents) return z_exponents < o.z_exponents;
    return w_exponents < o.w_exponents;
}

std::size_t default_degree_bound(const HypertoricDatum& datum) {
    std::size_t maxl = 0;
    for (const auto& c : datum.reduced) maxl = std::max(maxl, c.multiplicity);
    return 2 * maxl + 2;
}

namespace {

// beta' fits strictly inside beta with matching signs
bool dominated(const IntVec& inner, const IntVec& outer) {
    for (std::size_t i = 0; i < inner.size(); ++i) {
        if (outer[i] >= 0 && (inner[i] < 0 || inner[i] > outer[i])) return false;
        if (outer[i] < 0 && (inner[i] > 0 || inner[i] < outer[i])) return false;
    }
    return true;
}

RingGenerator monomial_of(const IntVec& beta) {
    RingGenerator g;
    g.z_exponents.assign(beta.size(), 0);
    g.w_exponents.assign(beta.size(), 0);
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] > 0) g.z_exponents[i] = beta[i].convert_to<std::size_t>();
        if (beta[i] < 0) g.w_exponents[i] = (-beta[i]).convert_to<std::size_t>();
    }
    return g;
}

} // namespace

RingGenerators ring_generators(const HypertoricDatum& datum, std::size_t degree_bound) {
    RingGenerators out;
    out.degree_bound = degree_bound;
    const std::size_t n = datum.n, m = datum.gale_dim();

    for (std::size_t i = 0; i < n; ++i) {
        RingGenerator q;
        q.z_exponents.assign(n, 0);
        q.w_exponents.assign(n, 0);
        q.z_exponents[i] = 1;
        q.w_exponents[i] = 1;
        out.generators.push_back(std::move(q));
    }
    if (m == 0) {
        std::sort(out.generators.begin(), out.generators.end());
        return out;
    }

    // enumerate the image lattice inside the L1 ball of the degree bound:
    // pick a unimodular row submatrix r of b, so h = r^-1 y runs over all
    // lattice coordinates when y runs over the box
    std::vector<std::size_t> pivot_rows;
    {
        std::vector<std::size_t> sel(m);
        for (std::size_t i = 0; i < m; ++i) sel[i] = i;
        for (;;) {
            Int dd = det(datum.b.select_rows(sel));
            if (dd == 1 || dd == -1) { pivot_rows = sel; break; }
            std::size_t i = m - 1;
            while (sel[i] == i + n - m) {
                if (i == 0) throw error(errc::not_unimodular, "no unimodular row submatrix in b");
                --i;
            }
            ++sel[i];
            for (std::size_t j = i + 1; j < m; ++j) sel[j] = sel[j - 1] + 1;
        }
    }
    IntMatrix r = datum.b.select_rows(pivot_rows);
    // integer inverse of the +-1 determinant submatrix via adjugate
    IntMatrix rinv(m, m);
    {
        Int dd = det(r);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                std::vector<std::size_t> ri, ci;
                for (std::size_t k = 0; k < m; ++k) {
                    if (k != j) ri.push_back(k);
                    if (k != i) ci.push_back(k);
                }
                Int minor = det(r.select_rows(ri).select_cols(ci));
                rinv(i, j) = ((i + j) % 2 == 0 ? minor : -minor) / dd;
            }
    }

    double box = 1;
    for (std::size_t i = 0; i < m; ++i) box *= double(2 * degree_bound + 1);
    if (box > 2e7) throw error(errc::size_guard, "degree bound box too large to enumerate");

    std::vector<IntVec> betas;
    const long long bnd = (long long)degree_bound;
    std::vector<long long> y(m, -bnd);
    for (;;) {
        IntVec yv(m);
        for (std::size_t i = 0; i < m; ++i) yv[i] = y[i];
        IntVec h = rinv.apply(yv);
        IntVec beta = datum.b.apply(h);
        Int l1 = 0;
        for (const Int& x : beta) l1 += abs(x);
        bool zero = l1 == 0;
        if (!zero && l1 <= degree_bound) betas.push_back(beta);
        std::size_t i = 0;
        while (i < m && y[i] == bnd) {
            y[i] = -bnd;
            ++i;
        }
        if (i == m) break;
        ++y[i];
    }
    std::sort(betas.begin(), betas.end());
    betas.erase(std::unique(betas.begin(), betas.end()), betas.end());

    bool any_f = false;
    for (const auto& beta : betas) {
        bool irreducible = true;
        for (const auto& other : betas) {
            if (other == beta) continue;
            if (dominated(other, beta)) { irreducible = false; break; }
        }
        if (!irreducible) continue;
        any_f = true;
        Int l1 = 0;
        for (const Int& x : beta) l1 += abs(x);
        if (l1 == degree_bound) out.boundary_warning = true;
        out.generators.push_back(monomial_of(beta));
    }
    out.bound_too_small = !any_f;
    std::sort(out.generators.begin(), out.generators.end());
    return out;
}

namespace {

// f_beta monomials have disjoint z- and w-supports
bool is_f_form(const RingGenerator& g) {
    bool nonzero = false;
    for (std::size_t i = 0; i < g.z_exponents.size(); ++i) {
        if (g.z_exponents[i] != 0 && g.w_exponents[i] != 0) return false;
        if (g.z_exponents[i] != 0 || g.w_exponents[i] != 0) nonzero = true;
    }
    return nonzero;
}

} // namespace

std::vector<BracketTerm> poisson_bracket(const RingGenerator& g1, const RingGenerator& g2) {
    auto q1 = g1.quadric_index(), q2 = g2.quadric_index();
    const bool f1 = !q1.has_value(), f2 = !q2.has_value();
    if ((f1 && !is_f_form(g1)) || (f2 && !is_f_form(g2)))
        throw error(errc::unsupported_generator_form, "expected z_k w_k or f_beta");
    std::vector<BracketTerm> terms;

    if (!f1 && !f2) return terms;  // {z_j w_j, z_k w_k} = 0

    if (f1 && !f2) {
        // {f_beta, z_k w_k} = beta_k f_beta
        IntVec beta = g1.beta();
        Int c = beta[*q2];
        if (c != 0) terms.push_back(BracketTerm{c, {g1}, std::nullopt});
        return terms;
    }
    if (!f1 && f2) {
        // antisymmetry from the displayed formula
        auto t = poisson_bracket(g2, g1);
        for (auto& term : t) term.coefficient = -term.coefficient;
        return t;
    }
    // {f_beta, f_gamma} = sum_{beta_j gamma_j < 0} beta_j |gamma_j| f_b f_g / (z_j w_j)
    IntVec beta = g1.beta(), gamma = g2.beta();
    for (std::size_t j = 0; j < beta.size(); ++j) {
        if (beta[j] == 0 || gamma[j] == 0) continue;
        if (sign(beta[j]) * sign(gamma[j]) >= 0) continue;
        terms.push_back(BracketTerm{beta[j] * abs(gamma[j]), {g1, g2}, j});
    }
    return terms;
}

} // namespace hypertoric
