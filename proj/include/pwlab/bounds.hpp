#pragma once

#include <cmath>
#include <complex>
#include <queue>
#include <vector>

#include "pwlab/constructions.hpp"
#include "pwlab/gf2.hpp"

namespace pwlab {

struct WitnessedRat {
    Rat value;
    std::vector<Rat> witness;
};

struct WitnessedCount {
    std::size_t value;
    std::vector<Rat> witness;
};

/// (n + d - 2)^2 / ((d-1)^2 + (n-1)) with witness (d-1, 1, ..., 1); an upper
/// bound on the minimum AWGNC pseudoweight for any parity-check matrix, d
/// being the dual minimum distance.
inline WitnessedRat awgnc_upper_bound(std::size_t n, std::size_t d) {
    if (n < 2 || d < 1) throw Error("awgnc_upper_bound: need n >= 2, d >= 1");
    Rat nn(static_cast<long long>(n)), dd(static_cast<long long>(d));
    WitnessedRat r;
    r.value = (nn + dd - 2) * (nn + dd - 2) / ((dd - 1) * (dd - 1) + (nn - 1));
    r.witness.assign(n, Rat(1));
    r.witness[0] = dd - 1;
    return r;
}

/// 2 ceil(n/d) with the witness of tau = ceil(n/d) leading entries d-1.
inline WitnessedCount bsc_upper_bound(std::size_t n, std::size_t d) {
    if (n < 2 || d < 1) throw Error("bsc_upper_bound: need n >= 2, d >= 1");
    std::size_t tau = (n + d - 1) / d;
    WitnessedCount r;
    r.value = 2 * tau;
    r.witness.assign(n, Rat(1));
    for (std::size_t i = 0; i < tau && i < n; ++i) r.witness[i] = Rat(static_cast<long long>(d - 1));
    return r;
}

struct DesignParameters {
    enum class Kind { Partial, Bibd };
    Kind kind;
    std::size_t w_c;                   // blocks per point
    std::size_t lambda;                // max (partial) or exact (bibd) pair coverage
    std::optional<std::size_t> w_r;    // block size, bibd only
    std::size_t n;                     // points
    std::size_t m;                     // blocks
};

/// Classify H as a BIBD or partial (w_c, lambda) design incidence matrix.
/// Partial requires constant column weight and lambda >= 1.
inline std::optional<DesignParameters> detect_design(const BinaryMatrix& h) {
    std::size_t n = h.n_cols(), m = h.n_rows();
    if (n == 0 || m == 0) return std::nullopt;

    std::size_t w_c = h.col_weight(0);
    for (std::size_t i = 1; i < n; ++i)
        if (h.col_weight(i) != w_c) return std::nullopt;
    if (w_c == 0) return std::nullopt;

    std::size_t max_pair = 0, min_pair = m + 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t co = 0;
            for (std::size_t r = 0; r < m; ++r) co += h.get(r, i) && h.get(r, j);
            max_pair = std::max(max_pair, co);
            min_pair = std::min(min_pair, co);
        }
    if (n < 2) return std::nullopt;
    if (max_pair == 0) return std::nullopt;

    bool rows_regular = true;
    std::size_t w_r = h.row_weight(0);
    for (std::size_t r = 1; r < m; ++r)
        if (h.row_weight(r) != w_r) rows_regular = false;

    DesignParameters p;
    p.w_c = w_c;
    p.n = n;
    p.m = m;
    if (rows_regular && min_pair == max_pair) {
        p.kind = DesignParameters::Kind::Bibd;
        p.lambda = max_pair;
        p.w_r = w_r;
    } else {
        p.kind = DesignParameters::Kind::Partial;
        p.lambda = max_pair;
    }
    return p;
}

/// 1 + w_c / lambda: lower bound on the minimum max-fractional (and hence
/// AWGNC and BSC) pseudoweight of any matrix containing the design's rows.
inline Rat design_lower_bound(const DesignParameters& p) {
    return 1 + Rat(static_cast<long long>(p.w_c), static_cast<long long>(p.lambda));
}

/// Connectivity of the bipartite Tanner graph of H (isolated graph nodes
/// count as disconnected components).
inline bool tanner_connected(const BinaryMatrix& h) {
    std::size_t n = h.n_cols(), m = h.n_rows();
    if (n + m == 0) return false;
    std::vector<bool> seen_col(n, false), seen_row(m, false);
    std::queue<std::pair<bool, std::size_t>> q;  // (is_col, index)
    q.emplace(true, 0);
    seen_col[0] = true;
    while (!q.empty()) {
        auto [is_col, idx] = q.front();
        q.pop();
        if (is_col) {
            for (std::size_t r : h.checks_on_col(idx))
                if (!seen_row[r]) {
                    seen_row[r] = true;
                    q.emplace(false, r);
                }
        } else {
            for (std::size_t c : h.support_of_row(idx))
                if (!seen_col[c]) {
                    seen_col[c] = true;
                    q.emplace(true, c);
                }
        }
    }
    for (bool b : seen_col)
        if (!b) return false;
    for (bool b : seen_row)
        if (!b) return false;
    return true;
}

struct EigenvalueBoundResult {
    double mu1 = 0;
    double mu2 = 0;
    std::size_t w_c = 0;
    std::size_t w_r = 0;
    double bound = 0;
    bool connected = false;
};

namespace detail {

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-24) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    double aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    double api = a[p][i], aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
            }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
    std::sort(eig.rbegin(), eig.rend());
    return eig;
}

inline EigenvalueBoundResult bound_from_spectrum(double mu1, double mu2, std::size_t n,
                                                 std::size_t w_c, std::size_t w_r) {
    if (mu1 - mu2 < 1e-9 * std::max(mu1, 1.0))
        throw DegenerateSpectrum("eigenvalue bound: mu1 - mu2 below tolerance");
    EigenvalueBoundResult r;
    r.mu1 = mu1;
    r.mu2 = mu2;
    r.w_c = w_c;
    r.w_r = w_r;
    r.connected = true;
    r.bound = static_cast<double>(n) * (2.0 * static_cast<double>(w_c) - mu2) / (mu1 - mu2);
    return r;
}

}  // namespace detail

/// AWGNC lower bound n (2 w_c - mu2)/(mu1 - mu2) from the two largest
/// eigenvalues (with multiplicity) of L = H^T H. H must be (w_c,w_r)-regular
/// with a connected Tanner graph.
inline EigenvalueBoundResult eigenvalue_bound(const BinaryMatrix& h) {
    std::size_t n = h.n_cols(), m = h.n_rows();
    if (n == 0 || m == 0) throw NotRegular("eigenvalue_bound: empty matrix");
    std::size_t w_c = h.col_weight(0), w_r = h.row_weight(0);
    for (std::size_t i = 0; i < n; ++i)
        if (h.col_weight(i) != w_c) throw NotRegular("eigenvalue_bound: columns not regular");
    for (std::size_t j = 0; j < m; ++j)
        if (h.row_weight(j) != w_r) throw NotRegular("eigenvalue_bound: rows not regular");
    if (w_c == 0 || w_r == 0) throw NotRegular("eigenvalue_bound: zero weights");
    if (!tanner_connected(h)) throw Disconnected("eigenvalue_bound: Tanner graph disconnected");

    // L = H^T H over the integers, then a float eigen-decomposition
    std::vector<std::vector<double>> l(n, std::vector<double>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t s = 0;
            for (std::size_t r = 0; r < m; ++r) s += h.get(r, i) && h.get(r, j);
            l[i][j] = static_cast<double>(s);
        }
    std::vector<double> eig = detail::jacobi_eigenvalues(std::move(l));
    if (eig.size() < 2) throw DegenerateSpectrum("eigenvalue_bound: n < 2");
    return detail::bound_from_spectrum(eig[0], eig[1], n, w_c, w_r);
}

/// Same bound for a circulant matrix, via the DFT: mu_t = |c_hat(omega^t)|^2,
/// mu1 = w^2 at t = 0.
inline EigenvalueBoundResult circulant_eigenvalue_bound(const std::vector<bool>& c) {
    std::size_t n = c.size();
    if (n < 2) throw DegenerateSpectrum("circulant_eigenvalue_bound: n < 2");
    std::size_t w = 0;
    for (bool b : c) w += b;
    if (w == 0) throw NotRegular("circulant_eigenvalue_bound: zero vector");
    if (!tanner_connected(circulant(c)))
        throw Disconnected("circulant_eigenvalue_bound: Tanner graph disconnected");

    double mu1 = static_cast<double>(w) * static_cast<double>(w);
    double mu2 = 0;
    const double two_pi = 2 * std::acos(-1.0);
    for (std::size_t t = 1; t < n; ++t) {
        std::complex<double> sum(0, 0);
        for (std::size_t j = 0; j < n; ++j)
            if (c[j])
                sum += std::polar(1.0, two_pi * static_cast<double>(j) *
                                           static_cast<double>(t) / static_cast<double>(n));
        mu2 = std::max(mu2, std::norm(sum));
    }
    return detail::bound_from_spectrum(mu1, mu2, n, w, w);
}

inline double binary_entropy(double p) {
    if (p < 0 || p > 1) throw Error("binary_entropy: p outside [0,1]");
    if (p == 0 || p == 1) return 0;
    return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

/// Inverse of the binary entropy on the branch [0, 1/2], by bisection.
inline double inv_binary_entropy(double y) {
    if (y < 0 || y > 1) throw Error("inv_binary_entropy: y outside [0,1]");
    double lo = 0, hi = 0.5;
    while (hi - lo > 1e-12) {
        double mid = (lo + hi) / 2;
        if (binary_entropy(mid) < y)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

/// Gilbert-Varshamov relative distance H2^{-1}(1 - R) - epsilon.
inline double gv_relative_distance(double rate, double epsilon) {
    return inv_binary_entropy(1 - rate) - epsilon;
}

struct BoundGapReport {
    std::size_t n = 0, k = 0;
    std::size_t min_distance = 0;
    std::size_t dual_distance = 0;
    Rat awgnc_ub;
    std::size_t bsc_ub = 0;
    // ub < D means no parity-check matrix attains D, i.e. rho = infinity
    bool awgnc_rho_infinite = false;
    bool bsc_rho_infinite = false;
};

inline BoundGapReport bound_gap_report(const LinearCode& c,
                                       std::size_t budget = std::size_t{1} << 28) {
    BoundGapReport r;
    r.n = c.n();
    r.k = c.k();
    r.min_distance = min_distance(c, budget);
    r.dual_distance = min_distance(dual_code(c), budget);
    r.awgnc_ub = awgnc_upper_bound(r.n, r.dual_distance).value;
    r.bsc_ub = bsc_upper_bound(r.n, r.dual_distance).value;
    r.awgnc_rho_infinite = r.awgnc_ub < Rat(static_cast<long long>(r.min_distance));
    r.bsc_rho_infinite = r.bsc_ub < r.min_distance;
    return r;
}

}  // namespace pwlab
