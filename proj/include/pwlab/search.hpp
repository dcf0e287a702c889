#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "pwlab/constructions.hpp"
#include "pwlab/weights.hpp"

namespace pwlab {

struct RedundancyResult {
    Channel channel = Channel::AWGNC;
    std::optional<std::size_t> rho;  // absent: infinite (or undecided on budget_hit)
    std::optional<BinaryMatrix> witness_matrix;
    std::size_t matrices_examined = 0;
    bool budget_hit = false;
    std::size_t lower_bound = 0;  // best-known lower bound on rho when budget_hit
};

namespace detail {

inline std::vector<BitRow> dual_codeword_rows(const LinearCode& c) {
    BinaryMatrix all = all_dual_codewords_matrix(c);
    std::vector<BitRow> rows(all.n_rows());
    for (std::size_t i = 0; i < all.n_rows(); ++i)
        rows[i].assign(all.row(i).begin(), all.row(i).end());
    return rows;
}

inline BinaryMatrix matrix_from_rows(const std::vector<BitRow>& rows, std::size_t n,
                                     const std::vector<std::size_t>& pick) {
    BinaryMatrix m(pick.size(), n);
    for (std::size_t i = 0; i < pick.size(); ++i) m.set_row(i, rows[pick[i]]);
    return m;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t total) {
    std::size_t m = idx.size();
    for (std::size_t i = m; i-- > 0;) {
        if (idx[i] + (m - i) < total) {
            ++idx[i];
            for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Evaluate a batch of candidates in parallel; results keep batch order.
template <typename Fn>
std::vector<char> parallel_eval(const std::vector<std::vector<std::size_t>>& batch, Fn&& fn) {
    std::vector<char> res(batch.size(), 0);
    unsigned workers = worker_count();
    if (workers <= 1 || batch.size() < 16) {
        for (std::size_t i = 0; i < batch.size(); ++i) res[i] = fn(batch[i]) ? 1 : 0;
        return res;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < batch.size(); i = next.fetch_add(1))
                res[i] = fn(batch[i]) ? 1 : 0;
        });
    for (std::thread& t : pool) t.join();
    return res;
}

}  // namespace detail

/// Finiteness via the all-dual-codewords matrix: every parity-check matrix's
/// rows are a subset of its rows, so by constraint accumulation no matrix can
/// exceed its channel minimum. rho is finite iff that maximal matrix attains D.
inline bool redundancy_is_finite(const LinearCode& c, Channel channel,
                                 std::size_t budget = std::size_t{1} << 28,
                                 std::size_t dimension_guard = 16) {
    std::size_t d = min_distance(c, budget);
    BinaryMatrix all = all_dual_codewords_matrix(c);
    RaySet rays = extreme_rays(fundamental_cone(all), dimension_guard);
    return channel_minimum(rays, channel).value == ExtRat(Rat(static_cast<long long>(d)));
}

/// Smallest number of rows of any parity-check matrix of C whose channel
/// minimum pseudoweight equals D. Searches duplicate-free m-subsets of the
/// nonzero dual codewords with rank n-k, m ascending, subsets in
/// lexicographic order; first witness wins.
inline RedundancyResult pseudoredundancy(const LinearCode& c, Channel channel,
                                         std::size_t budget = std::size_t{1} << 24,
                                         std::size_t dimension_guard = 16) {
    RedundancyResult res;
    res.channel = channel;
    std::size_t d = min_distance(c);
    ExtRat target{Rat(static_cast<long long>(d))};
    std::size_t r = c.n() - c.k();
    res.lower_bound = r;

    if (!redundancy_is_finite(c, channel, std::size_t{1} << 28, dimension_guard)) return res;

    std::vector<BitRow> rows = detail::dual_codeword_rows(c);
    std::size_t total = rows.size();
    std::atomic<std::size_t> examined{0};

    auto achieves = [&](const std::vector<std::size_t>& pick) {
        BinaryMatrix m = detail::matrix_from_rows(rows, c.n(), pick);
        if (rank(m) != r) return false;
        examined.fetch_add(1);
        RaySet rs = extreme_rays(fundamental_cone(m), dimension_guard);
        return channel_minimum(rs, channel).value == target;
    };

    const std::size_t batch_size = 8 * worker_count();
    for (std::size_t m = r; m <= total; ++m) {
        res.lower_bound = m;
        std::vector<std::size_t> idx(m);
        for (std::size_t i = 0; i < m; ++i) idx[i] = i;
        bool more = true;
        while (more) {
            std::vector<std::vector<std::size_t>> batch;
            while (more && batch.size() < batch_size) {
                batch.push_back(idx);
                more = detail::next_combination(idx, total);
            }
            std::vector<char> hit = detail::parallel_eval(batch, achieves);
            for (std::size_t i = 0; i < batch.size(); ++i)
                if (hit[i]) {
                    res.rho = m;
                    res.witness_matrix = detail::matrix_from_rows(rows, c.n(), batch[i]);
                    res.matrices_examined = examined.load();
                    return res;
                }
            if (examined.load() > budget) {
                res.budget_hit = true;
                res.matrices_examined = examined.load();
                return res;
            }
        }
    }
    // unreachable once finiteness holds: the all-dual matrix itself attains D
    throw Error("pseudoredundancy: finite redundancy but no witness found");
}

struct MatrixPredicate {
    Channel channel = Channel::AWGNC;
    Rat threshold;  // requires channel minimum >= threshold
};

struct ExhaustiveResult {
    bool holds = true;
    std::optional<BinaryMatrix> counterexample;
    std::size_t matrices_examined = 0;
};

/// Check a minimum-pseudoweight predicate on every parity-check matrix of C
/// (every duplicate-free rank-(n-k) subset of the nonzero dual codewords).
/// Returns the first counterexample in (size, lexicographic) order.
inline ExhaustiveResult exhaustive_matrix_property(const LinearCode& c,
                                                   const MatrixPredicate& pred,
                                                   std::size_t budget = std::size_t{1} << 24,
                                                   std::size_t dimension_guard = 16) {
    ExhaustiveResult res;
    std::size_t r = c.n() - c.k();
    std::vector<BitRow> rows = detail::dual_codeword_rows(c);
    std::size_t total = rows.size();
    ExtRat threshold{pred.threshold};

    for (std::size_t m = r; m <= total; ++m) {
        std::vector<std::size_t> idx(m);
        for (std::size_t i = 0; i < m; ++i) idx[i] = i;
        do {
            BinaryMatrix mat = detail::matrix_from_rows(rows, c.n(), idx);
            if (rank(mat) != r) continue;
            ++res.matrices_examined;
            if (res.matrices_examined > budget)
                throw BudgetExceeded("exhaustive_matrix_property: budget exceeded");
            RaySet rs = extreme_rays(fundamental_cone(mat), dimension_guard);
            if (channel_minimum(rs, pred.channel).value < threshold) {
                res.holds = false;
                res.counterexample = mat;
                return res;
            }
        } while (detail::next_combination(idx, total));
    }
    return res;
}

/// Column permutations fixing the code setwise, by brute force (n <= 9).
inline std::vector<std::vector<std::size_t>> automorphism_group(const LinearCode& c) {
    if (c.n() > 9) throw DimensionGuard("automorphism_group: n > 9");
    std::vector<std::size_t> perm(c.n());
    for (std::size_t i = 0; i < c.n(); ++i) perm[i] = i;
    std::vector<std::vector<std::size_t>> out;
    std::size_t wpr = c.generator_basis().words_per_row();
    do {
        bool ok = true;
        for (std::size_t g = 0; g < c.k() && ok; ++g) {
            BitRow mapped(wpr, 0);
            for (std::size_t i = 0; i < c.n(); ++i)
                if (c.generator_basis().get(g, i))
                    mapped[perm[i] / 64] |= std::uint64_t{1} << (perm[i] % 64);
            ok = c.contains(mapped);
        }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

struct OptimalMatrixCount {
    std::size_t orbit_count = 0;
    std::size_t achieving_count = 0;
    std::vector<BinaryMatrix> representatives;  // lex-min element of each orbit
};

/// Count m-row parity-check matrices achieving channel minimum == target, up
/// to equivalence: rows are a set (row permutations are free) and columns are
/// permuted by the automorphism group of the code.
inline OptimalMatrixCount count_distinct_optimal_matrices(const LinearCode& c, std::size_t m,
                                                          Channel channel, const Rat& target,
                                                          std::size_t dimension_guard = 16) {
    std::size_t r = c.n() - c.k();
    if (m < r) throw Error("count_distinct_optimal_matrices: m < n-k");
    std::vector<BitRow> rows = detail::dual_codeword_rows(c);
    std::size_t total = rows.size();
    ExtRat want{target};

    std::vector<std::vector<std::size_t>> achieving;
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    do {
        BinaryMatrix mat = detail::matrix_from_rows(rows, c.n(), idx);
        if (rank(mat) != r) continue;
        RaySet rs = extreme_rays(fundamental_cone(mat), dimension_guard);
        if (channel_minimum(rs, channel).value == want) achieving.push_back(idx);
    } while (detail::next_combination(idx, total));

    // orbit canonicalization under Aut(C) column permutations
    std::vector<std::vector<std::size_t>> auts = automorphism_group(c);
    std::map<BitRow, std::size_t> row_index;
    for (std::size_t i = 0; i < total; ++i) row_index[rows[i]] = i;
    std::size_t wpr = rows.empty() ? 0 : rows.front().size();

    auto canonical = [&](const std::vector<std::size_t>& pick) {
        std::vector<std::size_t> best = pick;
        for (const auto& perm : auts) {
            std::vector<std::size_t> mapped;
            for (std::size_t ri : pick) {
                BitRow nr(wpr, 0);
                for (std::size_t i = 0; i < c.n(); ++i)
                    if (bit_of(rows[ri], i)) nr[perm[i] / 64] |= std::uint64_t{1} << (perm[i] % 64);
                mapped.push_back(row_index.at(nr));
            }
            std::sort(mapped.begin(), mapped.end());
            if (mapped < best) best = mapped;
        }
        return best;
    };

    std::vector<std::vector<std::size_t>> reps;
    for (const auto& pick : achieving) {
        std::vector<std::size_t> can = canonical(pick);
        if (std::find(reps.begin(), reps.end(), can) == reps.end()) reps.push_back(can);
    }
    std::sort(reps.begin(), reps.end());

    OptimalMatrixCount out;
    out.achieving_count = achieving.size();
    out.orbit_count = reps.size();
    for (const auto& pick : reps) out.representatives.push_back(detail::matrix_from_rows(rows, c.n(), pick));
    return out;
}

}  // namespace pwlab
