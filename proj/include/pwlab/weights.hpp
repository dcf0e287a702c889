#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "pwlab/cone.hpp"
#include "pwlab/gf2.hpp"

namespace pwlab {

enum class Channel { BEC, AWGNC, BSC, MAXFRAC };

inline const std::array<Channel, 4>& all_channels() {
    static const std::array<Channel, 4> cs{Channel::BEC, Channel::AWGNC, Channel::BSC,
                                           Channel::MAXFRAC};
    return cs;
}

inline const char* channel_name(Channel c) {
    switch (c) {
        case Channel::BEC: return "bec";
        case Channel::AWGNC: return "awgnc";
        case Channel::BSC: return "bsc";
        case Channel::MAXFRAC: return "maxfrac";
    }
    return "?";
}

namespace detail {

inline std::vector<Rat> to_rat_vector(const RayVec& x) {
    std::vector<Rat> v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[i];
    return v;
}

inline void require_nonzero_nonneg(const std::vector<Rat>& x) {
    bool nonzero = false;
    for (const Rat& xi : x) {
        if (xi < 0) throw Error("pseudoweight: negative entry");
        if (xi != 0) nonzero = true;
    }
    if (!nonzero) throw ZeroVector("pseudoweight: zero vector");
}

}  // namespace detail

/// BEC pseudoweight: support size.
inline std::size_t w_bec(const std::vector<Rat>& x) {
    detail::require_nonzero_nonneg(x);
    std::size_t s = 0;
    for (const Rat& xi : x) s += xi != 0;
    return s;
}

/// AWGNC pseudoweight (sum x)^2 / (sum x^2), kept as an exact rational.
inline Rat w_awgnc(const std::vector<Rat>& x) {
    detail::require_nonzero_nonneg(x);
    Rat s(0), q(0);
    for (const Rat& xi : x) {
        s += xi;
        q += xi * xi;
    }
    return s * s / q;
}

/// BSC pseudoweight 2 Phi^{-1}(Phi(n)/2), where Phi is the cumulative sum of
/// the entries sorted in non-increasing order. Exact rational; on the
/// boundary Phi(k-1) = S/2 the interpolation term vanishes and the value is
/// exactly 2(k-1).
inline Rat w_bsc(const std::vector<Rat>& x) {
    detail::require_nonzero_nonneg(x);
    std::vector<Rat> sorted = x;
    std::sort(sorted.begin(), sorted.end(), std::greater<Rat>());
    Rat total(0);
    for (const Rat& xi : sorted) total += xi;
    Rat half = total / 2;
    Rat cum(0);
    for (std::size_t k = 1; k <= sorted.size(); ++k) {
        Rat prev = cum;
        cum += sorted[k - 1];
        if (cum >= half)
            return 2 * (Rat(static_cast<long long>(k - 1)) + (half - prev) / sorted[k - 1]);
    }
    throw Error("w_bsc: unreachable");
}

/// Max-fractional weight sum x / max x.
inline Rat w_maxfrac(const std::vector<Rat>& x) {
    detail::require_nonzero_nonneg(x);
    Rat s(0), mx(0);
    for (const Rat& xi : x) {
        s += xi;
        if (xi > mx) mx = xi;
    }
    return s / mx;
}

inline Rat pseudoweight(Channel ch, const std::vector<Rat>& x) {
    switch (ch) {
        case Channel::BEC: return Rat(static_cast<long long>(w_bec(x)));
        case Channel::AWGNC: return w_awgnc(x);
        case Channel::BSC: return w_bsc(x);
        case Channel::MAXFRAC: return w_maxfrac(x);
    }
    throw Error("pseudoweight: bad channel");
}

inline Rat pseudoweight(Channel ch, const RayVec& x) {
    return pseudoweight(ch, detail::to_rat_vector(x));
}

struct ChannelMinimum {
    ExtRat value = ExtRat::infinity();
    std::optional<RayVec> witness;
};

/// Exact minima of the four pseudoweight functionals over K(H) \ {0}.
/// minima over the cone are attained on extreme rays (the functionals are
/// scale-invariant and quasi-concave on the cross-section), so the report is
/// the minimum over the ray set; ties pick the lexicographically smallest
/// witness. An empty ray set (K(H) = {0}) reports +inf.
struct PseudoweightReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::optional<std::size_t> min_distance;
    std::map<Channel, ChannelMinimum> minima;

    const ChannelMinimum& at(Channel ch) const { return minima.at(ch); }
};

/// Minimum of one functional over an already-enumerated ray set.
inline ChannelMinimum channel_minimum(const RaySet& rays, Channel ch) {
    ChannelMinimum best;
    for (const RayVec& r : rays.rays) {
        ExtRat v(pseudoweight(ch, r));
        if (v < best.value) {
            best.value = v;
            best.witness = r;
        }
        // rays are lex-sorted, so the first minimiser is the lex-smallest
    }
    return best;
}

inline PseudoweightReport min_pseudoweights(
    const BinaryMatrix& h,
    const std::vector<Channel>& channels = {Channel::BEC, Channel::AWGNC, Channel::BSC,
                                            Channel::MAXFRAC},
    std::size_t dimension_guard = 16) {
    RaySet rays = extreme_rays(fundamental_cone(h), dimension_guard);
    PseudoweightReport rep;
    rep.n = h.n_cols();
    rep.m = h.n_rows();
    for (Channel ch : channels) rep.minima[ch] = channel_minimum(rays, ch);
    return rep;
}

/// Smallest nonempty set of columns meeting no row in exactly one position.
/// Combinatorial oracle for the minimum BEC pseudoweight; nullopt when no
/// stopping set exists.
inline std::optional<std::size_t> min_stopping_set(const BinaryMatrix& h,
                                                   std::size_t budget = std::size_t{1} << 24) {
    std::size_t n = h.n_cols();
    if (n >= 63 || (std::uint64_t{1} << n) > budget)
        throw BudgetExceeded("min_stopping_set: 2^n exceeds budget");
    std::vector<std::uint64_t> rows(h.n_rows());
    for (std::size_t j = 0; j < h.n_rows(); ++j) {
        std::uint64_t w = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (h.get(j, i)) w |= std::uint64_t{1} << i;
        rows[j] = w;
    }
    std::size_t best = n + 1;
    std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t set = 1; set < total; ++set) {
        if (static_cast<std::size_t>(std::popcount(set)) >= best) continue;
        bool ok = true;
        for (std::uint64_t row : rows)
            if (std::popcount(row & set) == 1) {
                ok = false;
                break;
            }
        if (ok) best = static_cast<std::size_t>(std::popcount(set));
    }
    if (best > n) return std::nullopt;
    return best;
}

}  // namespace pwlab
