#pragma once

#include <atomic>
#include <future>
#include <map>
#include <thread>
#include <vector>

#include "pwlab/bounds.hpp"
#include "pwlab/constructions.hpp"
#include "pwlab/gf2poly.hpp"

namespace pwlab {

namespace detail {

inline void equal_degree_split(GF2Poly f, std::size_t d, std::vector<GF2Poly>& out) {
    if (static_cast<std::size_t>(f.degree()) == d) {
        out.push_back(f);
        return;
    }
    // trace-map splitting with a deterministic candidate sequence
    for (std::uint64_t cand = 2;; ++cand) {
        GF2Poly a = poly_mod(GF2Poly(cand), f);
        if (a.degree() < 1) continue;
        GF2Poly trace(0), power = a;
        for (std::size_t i = 0; i < d; ++i) {
            trace = trace + power;
            power = poly_sqrmod(power, f);
        }
        for (GF2Poly t : {trace, trace + poly_one()}) {
            GF2Poly g = poly_gcd(t, f);
            if (g.degree() > 0 && g.degree() < f.degree()) {
                equal_degree_split(g, d, out);
                equal_degree_split(poly_divmod(f, g).quot, d, out);
                return;
            }
        }
    }
}

/// Factor a squarefree polynomial by distinct-degree decomposition.
inline std::vector<GF2Poly> factor_squarefree(GF2Poly f) {
    std::vector<GF2Poly> out;
    GF2Poly x = poly_x();
    GF2Poly xq = x;  // x^{2^d} mod f
    for (std::size_t d = 1; f.degree() > 0; ++d) {
        if (2 * d > static_cast<std::size_t>(f.degree())) {
            out.push_back(f);
            break;
        }
        xq = poly_sqrmod(xq, f);
        GF2Poly g = poly_gcd(xq + x, f);
        if (g.degree() > 0) {
            equal_degree_split(g, d, out);
            f = poly_divmod(f, g).quot;
            xq = poly_mod(xq, f);
        }
    }
    return out;
}

}  // namespace detail

/// Complete factorization of x^n + 1 over GF(2). With n = 2^a m (m odd),
/// x^n + 1 = (x^m + 1)^{2^a} and x^m + 1 is squarefree.
inline std::vector<GF2Poly> factor_xn_minus_1(std::size_t n) {
    if (n < 1 || n > 63) throw DimensionGuard("factor_xn_minus_1: need 1 <= n <= 63");
    std::size_t oddpart = n, mult = 1;
    while (oddpart % 2 == 0) {
        oddpart /= 2;
        mult *= 2;
    }
    std::vector<GF2Poly> base = detail::factor_squarefree(poly_xn_plus_1(oddpart));
    std::sort(base.begin(), base.end());
    std::vector<GF2Poly> out;
    for (GF2Poly f : base)
        for (std::size_t i = 0; i < mult; ++i) out.push_back(f);

    GF2Poly check = poly_one();
    for (GF2Poly f : out) check = poly_mul(check, f);
    if (!(check == poly_xn_plus_1(n))) throw Error("factor_xn_minus_1: product check failed");
    return out;
}

/// All monic divisors g of x^n + 1 with 1 <= deg g <= n-1, by (degree, bits).
inline std::vector<GF2Poly> enumerate_cyclic_codes(std::size_t n) {
    std::vector<GF2Poly> factors = factor_xn_minus_1(n);

    // group repeated factors, then walk the multiplicity lattice
    std::map<std::uint64_t, std::size_t> mult;
    for (GF2Poly f : factors) ++mult[f.bits];
    std::vector<std::pair<GF2Poly, std::size_t>> groups;
    for (auto& [bits, count] : mult) groups.emplace_back(GF2Poly(bits), count);

    std::vector<GF2Poly> out;
    std::vector<std::size_t> exps(groups.size(), 0);
    while (true) {
        GF2Poly g = poly_one();
        for (std::size_t i = 0; i < groups.size(); ++i)
            for (std::size_t e = 0; e < exps[i]; ++e) g = poly_mul(g, groups[i].first);
        if (g.degree() >= 1 && static_cast<std::size_t>(g.degree()) <= n - 1) out.push_back(g);

        std::size_t i = 0;
        while (i < groups.size() && exps[i] == groups[i].second) exps[i++] = 0;
        if (i == groups.size()) break;
        ++exps[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Full circulant parity-check matrix of the cyclic code generated by g:
/// c is the reciprocal of h = (x^n + 1)/g, whose shifts span the dual code.
inline std::pair<std::vector<bool>, BinaryMatrix> circulant_parity_check(GF2Poly g,
                                                                         std::size_t n) {
    if (!poly_divides(g, poly_xn_plus_1(n)))
        throw Error("circulant_parity_check: g does not divide x^n + 1");
    GF2Poly h = poly_divmod(poly_xn_plus_1(n), g).quot;
    GF2Poly c = poly_reciprocal(h);
    std::vector<bool> cv(n, false);
    for (std::size_t i = 0; i < n; ++i) cv[i] = (c.bits >> i) & 1u;
    BinaryMatrix mat = circulant(cv);

    // postcondition: ker(circulant(c)) is the cyclic code of g
    LinearCode code = cyclic_code(g, n);
    if (!is_parity_check_for(mat, code))
        throw Error("circulant_parity_check: kernel mismatch");
    return {cv, mat};
}

struct CyclicRecord {
    std::size_t n = 0, k = 0;
    std::optional<std::size_t> min_distance;  // absent when k exceeds the budget
    GF2Poly generator;
    std::vector<bool> circulant_vector;
    std::size_t w = 0;
    bool connected = false;
    std::optional<double> mu1, mu2, bound;
    bool meets_bound = false;  // bound == D within 1e-6 and D >= 3
    bool budget_hit = false;
};

namespace detail {

inline CyclicRecord scan_one(std::size_t n, GF2Poly g, std::size_t k_budget) {
    CyclicRecord rec;
    rec.n = n;
    rec.generator = g;
    rec.k = n - static_cast<std::size_t>(g.degree());
    auto [c, mat] = circulant_parity_check(g, n);
    rec.circulant_vector = c;
    for (bool b : c) rec.w += b;
    rec.connected = tanner_connected(mat);

    if (rec.k <= k_budget) {
        rec.min_distance = min_distance(cyclic_code(g, n), std::size_t{1} << 62);
    } else {
        rec.budget_hit = true;
    }
    if (rec.connected) {
        try {
            EigenvalueBoundResult b = circulant_eigenvalue_bound(c);
            rec.mu1 = b.mu1;
            rec.mu2 = b.mu2;
            rec.bound = b.bound;
        } catch (const DegenerateSpectrum&) {
            // bound left absent
        }
    }
    rec.meets_bound = rec.connected && rec.min_distance && rec.bound &&
                      *rec.min_distance >= 3 &&
                      std::abs(*rec.bound - static_cast<double>(*rec.min_distance)) <= 1e-6;
    return rec;
}

}  // namespace detail

/// Scan all cyclic codes with 2 <= n <= n_max and k <= k_budget; per-record
/// budget flags, never aborts. Records are computed in parallel and returned
/// in (n, generator) order.
inline std::vector<CyclicRecord> scan(std::size_t n_max, std::size_t k_budget = 28) {
    std::vector<std::pair<std::size_t, GF2Poly>> jobs;
    for (std::size_t n = 2; n <= n_max; ++n)
        for (GF2Poly g : enumerate_cyclic_codes(n)) jobs.emplace_back(n, g);

    std::vector<CyclicRecord> records(jobs.size());
    std::atomic<std::size_t> next{0};
    unsigned workers = std::min<unsigned>(worker_count(), std::max<std::size_t>(jobs.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
                records[i] = detail::scan_one(jobs[i].first, jobs[i].second, k_budget);
        });
    for (std::thread& t : pool) t.join();
    return records;
}

}  // namespace pwlab
