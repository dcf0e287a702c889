#pragma once

// Shared test utilities: generators for random instances and the
// implementation-independent oracles the suites check against.

#include <random>
#include <set>

#include "pwlab/pwlab.hpp"

namespace pwtest {

using namespace pwlab;

inline BinaryMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                  double density = 0.5) {
    BinaryMatrix m(rows, cols);
    std::bernoulli_distribution bit(density);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c, true);
    return m;
}

/// Brute-force extreme rays: intersect every (n-1)-subset of inequality
/// hyperplanes, keep one-dimensional nullspaces whose feasible direction
/// satisfies the whole system, normalize to primitive vectors, dedupe.
inline std::vector<RayVec> brute_force_rays(const ConeSystem& s) {
    std::size_t n = s.n, m = s.ineqs.size();
    if (n < 1) return {};
    std::set<RayVec> found;

    std::vector<bool> select(m, false);
    std::fill(select.end() - static_cast<long>(n - 1), select.end(), true);
    // iterate over all (n-1)-subsets via permutation of the selector mask
    std::vector<std::size_t> subset;
    do {
        subset.clear();
        for (std::size_t i = 0; i < m; ++i)
            if (select[i]) subset.push_back(i);

        // rational nullspace of the selected rows
        std::vector<std::vector<Rat>> mat;
        for (std::size_t t : subset) {
            std::vector<Rat> row(n);
            for (std::size_t i = 0; i < n; ++i) row[i] = s.ineqs[t][i];
            mat.push_back(row);
        }
        std::vector<std::size_t> pivot_cols;
        std::size_t r = 0;
        for (std::size_t c = 0; c < n && r < mat.size(); ++c) {
            std::size_t piv = mat.size();
            for (std::size_t i = r; i < mat.size(); ++i)
                if (mat[i][c] != 0) {
                    piv = i;
                    break;
                }
            if (piv == mat.size()) continue;
            std::swap(mat[r], mat[piv]);
            Rat inv = mat[r][c];
            for (std::size_t j = 0; j < n; ++j) mat[r][j] /= inv;
            for (std::size_t i = 0; i < mat.size(); ++i)
                if (i != r && mat[i][c] != 0) {
                    Rat f = mat[i][c];
                    for (std::size_t j = 0; j < n; ++j) mat[i][j] -= f * mat[r][j];
                }
            pivot_cols.push_back(c);
            ++r;
        }
        if (r != n - 1) continue;  // nullspace not one-dimensional

        std::vector<bool> is_pivot(n, false);
        for (std::size_t c : pivot_cols) is_pivot[c] = true;
        std::size_t free_col = n;
        for (std::size_t c = 0; c < n; ++c)
            if (!is_pivot[c]) free_col = c;
        std::vector<Rat> dir(n, Rat(0));
        dir[free_col] = 1;
        for (std::size_t pr = 0; pr < pivot_cols.size(); ++pr)
            dir[pivot_cols[pr]] = -mat[pr][free_col];

        for (int sign : {1, -1}) {
            std::vector<Rat> cand(n);
            for (std::size_t i = 0; i < n; ++i) cand[i] = sign * dir[i];
            if (!cone_contains(s, cand)) continue;
            // clear denominators, divide by gcd
            Int lcm = 1;
            for (const Rat& x : cand)
                lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
            std::vector<Int> iv(n);
            Int g = 0;
            for (std::size_t i = 0; i < n; ++i) {
                iv[i] = boost::multiprecision::numerator(cand[i]) * (lcm / boost::multiprecision::denominator(cand[i]));
                g = boost::multiprecision::gcd(g, iv[i]);
            }
            if (g == 0) continue;
            RayVec prim(n);
            for (std::size_t i = 0; i < n; ++i)
                prim[i] = static_cast<long long>(Int(iv[i] / g));
            found.insert(prim);
        }
    } while (std::next_permutation(select.begin(), select.end()));

    return {found.begin(), found.end()};
}

/// Independent minimum-distance oracle: the smallest w such that some
/// w-subset of the parity-check columns sums to zero.
inline std::size_t column_dependency_distance(const LinearCode& c) {
    const BinaryMatrix& h = c.parity_basis();
    std::size_t n = c.n();
    if (n > 24) throw Error("column_dependency_distance: n too large");
    std::vector<std::uint64_t> cols(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < h.n_rows(); ++r)
            if (h.get(r, i)) cols[i] |= std::uint64_t{1} << r;

    for (std::size_t w = 1; w <= n; ++w) {
        std::vector<bool> select(n, false);
        std::fill(select.end() - static_cast<long>(w), select.end(), true);
        do {
            std::uint64_t acc = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (select[i]) acc ^= cols[i];
            if (acc == 0) return w;
        } while (std::next_permutation(select.begin(), select.end()));
    }
    throw Error("column_dependency_distance: no dependency found");
}

/// [6,3,3] code obtained by shortening the [7,4,3] Hamming code at its last
/// coordinate.
inline LinearCode shortened_hamming6() {
    LinearCode ham = hamming_code(3);
    std::vector<BitRow> words;
    for_each_nonzero_codeword(ham, std::size_t{1} << 8, [&](std::span<const std::uint64_t> cw) {
        if (!bit_of(cw, 6)) words.emplace_back(cw.begin(), cw.end());
    });
    BinaryMatrix all(words.size(), 7);
    for (std::size_t i = 0; i < words.size(); ++i) all.set_row(i, words[i]);
    BinaryMatrix basis = row_basis(all);
    BinaryMatrix shortened(basis.n_rows(), 6);
    for (std::size_t r = 0; r < basis.n_rows(); ++r)
        for (std::size_t c = 0; c < 6; ++c)
            if (basis.get(r, c)) shortened.set(r, c, true);
    return code_from_generators(shortened);
}

}  // namespace pwtest
