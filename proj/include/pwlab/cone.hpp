#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "pwlab/gf2.hpp"

namespace pwlab {

/// Homogeneous inequality system a . x >= 0 describing the fundamental cone
/// K(H). Always contains the n nonnegativity rows; entries are -1/0/+1.
struct ConeSystem {
    std::size_t n = 0;
    std::vector<std::vector<int>> ineqs;
};

using RayVec = std::vector<long long>;

/// Primitive nonnegative integer extreme rays of a cone, in lexicographic
/// order. These are the minimal pseudocodewords generating K(H).
struct RaySet {
    std::vector<RayVec> rays;

    bool empty() const { return rays.empty(); }
    std::size_t size() const { return rays.size(); }
};

/// Transcribe eqs (2)-(3): n nonnegativity rows first, then for every check
/// row j and every position l in its support the row
/// sum_{i in I_j \ {l}} x_i - x_l >= 0.
inline ConeSystem fundamental_cone(const BinaryMatrix& h) {
    ConeSystem s;
    s.n = h.n_cols();
    for (std::size_t i = 0; i < s.n; ++i) {
        std::vector<int> a(s.n, 0);
        a[i] = 1;
        s.ineqs.push_back(std::move(a));
    }
    for (std::size_t j = 0; j < h.n_rows(); ++j) {
        std::vector<std::size_t> supp = h.support_of_row(j);
        for (std::size_t l : supp) {
            std::vector<int> a(s.n, 0);
            for (std::size_t i : supp) a[i] = 1;
            a[l] = -1;
            s.ineqs.push_back(std::move(a));
        }
    }
    return s;
}

template <typename Vec>
bool cone_contains(const ConeSystem& s, const Vec& x) {
    if (x.size() != s.n) throw Error("cone_contains: dimension mismatch");
    for (const auto& a : s.ineqs) {
        typename Vec::value_type acc{};
        for (std::size_t i = 0; i < s.n; ++i)
            if (a[i] != 0) acc += a[i] > 0 ? x[i] : -x[i];
        if (acc < typename Vec::value_type{}) return false;
    }
    return true;
}

namespace detail {

inline long long checked_ll(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw ArithmeticOverflow("extreme_rays: ray coordinate overflow");
    return static_cast<long long>(v);
}

inline void make_primitive(std::vector<__int128>& v, RayVec& out) {
    __int128 g = 0;
    for (__int128 x : v) {
        __int128 a = x < 0 ? -x : x;
        while (a) {
            __int128 t = g % a;
            g = a;
            a = t;
        }
    }
    out.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = checked_ll(g == 0 ? v[i] : v[i] / g);
}

/// Rank of an integer matrix over Q by fraction-free (Bareiss) elimination,
/// with early exit once `stop_at` is reached.
inline std::size_t bareiss_rank(std::vector<std::vector<__int128>> m, std::size_t stop_at) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    __int128 prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
        if (r >= stop_at) return r;
    }
    return r;
}

struct DDRay {
    RayVec v;
    std::vector<std::uint64_t> active;  // bitset over the inequality list

    bool active_bit(std::size_t t) const { return (active[t / 64] >> (t % 64)) & 1u; }
    void set_active(std::size_t t) { active[t / 64] |= std::uint64_t{1} << (t % 64); }
};

inline __int128 dot(const std::vector<int>& a, const RayVec& r) {
    __int128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += a[i] > 0 ? __int128(r[i]) : -__int128(r[i]);
    return s;
}

}  // namespace detail

/// Complete extreme-ray enumeration by the double description method with
/// exact integer arithmetic. The system must contain the nonnegativity rows
/// (fundamental_cone always emits them); insertion order is by ascending
/// support size with lexicographic tie-break. Adjacency of a candidate pair
/// is confirmed by the algebraic test: rank of the common active inequality
/// set equals n-2.
inline RaySet extreme_rays(const ConeSystem& s, std::size_t dimension_guard = 16) {
    using detail::DDRay;
    const std::size_t n = s.n;
    if (n > dimension_guard) throw DimensionGuard("extreme_rays: dimension exceeds guard");
    const std::size_t m = s.ineqs.size();
    const std::size_t awords = (m + 63) / 64;

    // the unit rows e_i seed the algorithm with the nonnegative orthant
    std::vector<bool> is_unit_row(m, false);
    std::vector<bool> covered(n, false);
    for (std::size_t t = 0; t < m; ++t) {
        std::size_t nz = 0, idx = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (s.ineqs[t][i] != 0) {
                ++nz;
                idx = i;
            }
        if (nz == 1 && s.ineqs[t][idx] == 1) {
            is_unit_row[t] = true;
            covered[idx] = true;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!covered[i]) throw Error("extreme_rays: system lacks nonnegativity row");

    std::vector<std::size_t> order;
    for (std::size_t t = 0; t < m; ++t)
        if (!is_unit_row[t]) order.push_back(t);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        std::size_t sa = 0, sb = 0;
        for (int v : s.ineqs[a]) sa += v != 0;
        for (int v : s.ineqs[b]) sb += v != 0;
        if (sa != sb) return sa < sb;
        return s.ineqs[a] < s.ineqs[b];
    });

    // start from the nonnegative orthant; its extreme rays are the unit vectors
    std::vector<DDRay> rays;
    for (std::size_t i = 0; i < n; ++i) {
        DDRay r;
        r.v.assign(n, 0);
        r.v[i] = 1;
        r.active.assign(awords, 0);
        rays.push_back(std::move(r));
    }

    std::vector<std::size_t> processed;
    for (std::size_t t = 0; t < m; ++t)
        if (is_unit_row[t]) processed.push_back(t);
    auto recompute_active = [&](DDRay& r) {
        std::fill(r.active.begin(), r.active.end(), 0);
        for (std::size_t t : processed)
            if (detail::dot(s.ineqs[t], r.v) == 0) r.set_active(t);
    };
    for (DDRay& r : rays) recompute_active(r);

    auto adjacent = [&](const DDRay& p, const DDRay& q) {
        if (n < 2) return false;
        std::vector<std::uint64_t> common(awords);
        for (std::size_t w = 0; w < awords; ++w) common[w] = p.active[w] & q.active[w];
        // combinatorial pre-filter: no third ray's zero set may contain the
        // common zero set
        for (const DDRay& r : rays) {
            if (&r == &p || &r == &q) continue;
            bool subset = true;
            for (std::size_t w = 0; w < awords; ++w)
                if (common[w] & ~r.active[w]) {
                    subset = false;
                    break;
                }
            if (subset) return false;
        }
        std::vector<std::vector<__int128>> rows;
        for (std::size_t t : processed)
            if ((common[t / 64] >> (t % 64)) & 1u) {
                std::vector<__int128> row(n);
                for (std::size_t i = 0; i < n; ++i) row[i] = s.ineqs[t][i];
                rows.push_back(std::move(row));
            }
        return detail::bareiss_rank(std::move(rows), n - 1) == n - 2;
    };

    for (std::size_t t : order) {
        const std::vector<int>& a = s.ineqs[t];
        std::vector<__int128> vals(rays.size());
        bool any_neg = false;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            vals[i] = detail::dot(a, rays[i].v);
            if (vals[i] < 0) any_neg = true;
        }
        if (!any_neg) {
            processed.push_back(t);
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (vals[i] == 0) rays[i].set_active(t);
            continue;
        }

        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i)
            (vals[i] < 0 ? neg : pos).push_back(i);

        std::vector<DDRay> created;
        for (std::size_t pi : pos) {
            if (vals[pi] == 0) continue;
            for (std::size_t qi : neg) {
                if (!adjacent(rays[pi], rays[qi])) continue;
                std::vector<__int128> comb(n);
                for (std::size_t i = 0; i < n; ++i)
                    comb[i] = vals[pi] * __int128(rays[qi].v[i]) -
                              vals[qi] * __int128(rays[pi].v[i]);
                DDRay nr;
                detail::make_primitive(comb, nr.v);
                nr.active.assign(awords, 0);
                created.push_back(std::move(nr));
            }
        }

        processed.push_back(t);
        std::vector<DDRay> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (vals[i] < 0) continue;
            if (vals[i] == 0) rays[i].set_active(t);
            next.push_back(std::move(rays[i]));
        }
        for (DDRay& nr : created) {
            recompute_active(nr);
            next.push_back(std::move(nr));
        }
        rays = std::move(next);
    }

    RaySet out;
    for (DDRay& r : rays) out.rays.push_back(std::move(r.v));
    std::sort(out.rays.begin(), out.rays.end());
    return out;
}

/// Deterministic pseudo-random positive rational combination of a random
/// nonempty subset of the rays.
inline std::vector<Rat> sample_cone_point(const RaySet& r, std::uint64_t seed) {
    if (r.empty()) throw Error("sample_cone_point: empty ray set");
    std::mt19937_64 rng(seed);
    std::size_t n = r.rays.front().size();
    std::vector<Rat> x(n, Rat(0));
    bool used_any = false;
    for (std::size_t j = 0; j < r.size(); ++j) {
        bool use = (rng() & 1u) != 0;
        if (j + 1 == r.size() && !used_any) use = true;
        if (!use) continue;
        used_any = true;
        Rat coeff(1 + static_cast<long long>(rng() % 7),
                  1 + static_cast<long long>(rng() % 5));
        for (std::size_t i = 0; i < n; ++i) x[i] += coeff * r.rays[j][i];
    }
    return x;
}

}  // namespace pwlab
