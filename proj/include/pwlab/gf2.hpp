#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "pwlab/common.hpp"

namespace pwlab {

/// Dense bit-matrix over GF(2). Rows double as parity checks or as the
/// blocks of a block design; bit i of a row is column (point) i.
class BinaryMatrix {
  public:
    BinaryMatrix() = default;

    BinaryMatrix(std::size_t rows, std::size_t cols)
        : n_rows_(rows), n_cols_(cols), wpr_(words_for(cols)), data_(rows * wpr_, 0) {}

    static BinaryMatrix from_strings(const std::vector<std::string_view>& rows) {
        BinaryMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.n_cols_) throw Error("from_strings: ragged rows");
            for (std::size_t c = 0; c < m.n_cols_; ++c) {
                if (rows[r][c] == '1')
                    m.set(r, c, true);
                else if (rows[r][c] != '0')
                    throw Error("from_strings: expected 0/1");
            }
        }
        return m;
    }

    std::size_t n_rows() const { return n_rows_; }
    std::size_t n_cols() const { return n_cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + c / 64] >> (c % 64)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t& w = data_[r * wpr_ + c / 64];
        std::uint64_t mask = std::uint64_t{1} << (c % 64);
        if (v)
            w |= mask;
        else
            w &= ~mask;
    }

    std::span<const std::uint64_t> row(std::size_t r) const {
        return {data_.data() + r * wpr_, wpr_};
    }

    std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * wpr_, wpr_}; }

    void set_row(std::size_t r, std::span<const std::uint64_t> words) {
        assert(words.size() == wpr_);
        std::copy(words.begin(), words.end(), data_.begin() + r * wpr_);
    }

    void append_row(std::span<const std::uint64_t> words) {
        assert(words.size() == wpr_ || (wpr_ == 0 && words.empty()));
        data_.insert(data_.end(), words.begin(), words.end());
        ++n_rows_;
    }

    void xor_row_into(std::size_t src, std::size_t dst) {
        for (std::size_t w = 0; w < wpr_; ++w) data_[dst * wpr_ + w] ^= data_[src * wpr_ + w];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t w = 0; w < wpr_; ++w)
            std::swap(data_[a * wpr_ + w], data_[b * wpr_ + w]);
    }

    std::size_t row_weight(std::size_t r) const {
        std::size_t s = 0;
        for (std::size_t w = 0; w < wpr_; ++w) s += std::popcount(data_[r * wpr_ + w]);
        return s;
    }

    std::size_t col_weight(std::size_t c) const {
        std::size_t s = 0;
        for (std::size_t r = 0; r < n_rows_; ++r) s += get(r, c);
        return s;
    }

    bool row_is_zero(std::size_t r) const {
        for (std::size_t w = 0; w < wpr_; ++w)
            if (data_[r * wpr_ + w]) return false;
        return true;
    }

    /// I_j: column indices of the nonzero entries of row j.
    std::vector<std::size_t> support_of_row(std::size_t j) const {
        std::vector<std::size_t> s;
        for (std::size_t w = 0; w < wpr_; ++w) {
            std::uint64_t word = data_[j * wpr_ + w];
            while (word) {
                s.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
        return s;
    }

    /// J_i: row indices of the checks involving column i.
    std::vector<std::size_t> checks_on_col(std::size_t i) const {
        std::vector<std::size_t> s;
        for (std::size_t r = 0; r < n_rows_; ++r)
            if (get(r, i)) s.push_back(r);
        return s;
    }

    friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
        return a.n_rows_ == b.n_rows_ && a.n_cols_ == b.n_cols_ && a.data_ == b.data_;
    }

    static std::size_t words_for(std::size_t cols) { return (cols + 63) / 64; }

  private:
    std::size_t n_rows_ = 0;
    std::size_t n_cols_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

using BitRow = std::vector<std::uint64_t>;

inline bool bit_of(std::span<const std::uint64_t> row, std::size_t c) {
    return (row[c / 64] >> (c % 64)) & 1u;
}

inline std::size_t weight_of(std::span<const std::uint64_t> row) {
    std::size_t s = 0;
    for (std::uint64_t w : row) s += std::popcount(w);
    return s;
}

inline bool is_zero(std::span<const std::uint64_t> row) {
    for (std::uint64_t w : row)
        if (w) return false;
    return true;
}

inline bool dot_gf2(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc ^= a[i] & b[i];
    return std::popcount(acc) & 1u;
}

/// Column-lexicographic order on bit-vectors: the vector with 0 at the first
/// differing coordinate is smaller.
inline bool lex_less(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    for (std::size_t w = 0; w < a.size(); ++w) {
        std::uint64_t x = a[w] ^ b[w];
        if (x) {
            std::size_t bit = static_cast<std::size_t>(std::countr_zero(x));
            return ((a[w] >> bit) & 1u) == 0;
        }
    }
    return false;
}

inline bool lex_less(const BitRow& a, const BitRow& b) {
    return lex_less(std::span<const std::uint64_t>(a), std::span<const std::uint64_t>(b));
}

/// Row-reduce in place; deterministic pivots at the lowest free column.
/// Returns the pivot columns (so the caller can read off the free ones).
inline std::vector<std::size_t> row_reduce(BinaryMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.n_cols() && r < m.n_rows(); ++c) {
        std::size_t pivot = m.n_rows();
        for (std::size_t i = r; i < m.n_rows(); ++i)
            if (m.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot == m.n_rows()) continue;
        m.swap_rows(r, pivot);
        for (std::size_t i = 0; i < m.n_rows(); ++i)
            if (i != r && m.get(i, c)) m.xor_row_into(r, i);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(const BinaryMatrix& m) {
    BinaryMatrix copy = m;
    return row_reduce(copy).size();
}

/// [n,k,D] binary linear code held as a generator basis and a parity basis.
class LinearCode {
  public:
    LinearCode() = default;

    LinearCode(BinaryMatrix generator, BinaryMatrix parity)
        : gen_(std::move(generator)), par_(std::move(parity)) {
        if (gen_.n_cols() != par_.n_cols()) throw Error("LinearCode: basis width mismatch");
        for (std::size_t g = 0; g < gen_.n_rows(); ++g)
            for (std::size_t p = 0; p < par_.n_rows(); ++p)
                if (dot_gf2(gen_.row(g), par_.row(p)))
                    throw Error("LinearCode: bases are not orthogonal");
        if (rank(gen_) != gen_.n_rows() || rank(par_) != par_.n_rows())
            throw Error("LinearCode: basis rows are dependent");
        if (gen_.n_rows() + par_.n_rows() != gen_.n_cols())
            throw Error("LinearCode: k + (n-k) != n");
    }

    std::size_t n() const { return gen_.n_cols(); }
    std::size_t k() const { return gen_.n_rows(); }
    const BinaryMatrix& generator_basis() const { return gen_; }
    const BinaryMatrix& parity_basis() const { return par_; }

    std::optional<std::size_t> cached_min_distance() const { return dist_; }
    void cache_min_distance(std::size_t d) const { dist_ = d; }

    bool contains(std::span<const std::uint64_t> word) const {
        for (std::size_t p = 0; p < par_.n_rows(); ++p)
            if (dot_gf2(word, par_.row(p))) return false;
        return true;
    }

  private:
    BinaryMatrix gen_;
    BinaryMatrix par_;
    mutable std::optional<std::size_t> dist_;
};

/// Canonical kernel basis of M: RREF pivots, one basis vector per free column.
inline BinaryMatrix kernel_basis(const BinaryMatrix& m) {
    BinaryMatrix red = m;
    std::vector<std::size_t> pivots = row_reduce(red);
    std::vector<bool> is_pivot(m.n_cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    BinaryMatrix basis(m.n_cols() - pivots.size(), m.n_cols());
    std::size_t bi = 0;
    for (std::size_t f = 0; f < m.n_cols(); ++f) {
        if (is_pivot[f]) continue;
        basis.set(bi, f, true);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            if (red.get(pr, f)) basis.set(bi, pivots[pr], true);
        ++bi;
    }
    return basis;
}

/// Row basis of M in RREF (zero rows dropped).
inline BinaryMatrix row_basis(const BinaryMatrix& m) {
    BinaryMatrix red = m;
    std::size_t r = row_reduce(red).size();
    BinaryMatrix basis(r, m.n_cols());
    for (std::size_t i = 0; i < r; ++i) basis.set_row(i, red.row(i));
    return basis;
}

inline LinearCode kernel_code(const BinaryMatrix& h) {
    return LinearCode(kernel_basis(h), row_basis(h));
}

inline LinearCode dual_code(const LinearCode& c) {
    return LinearCode(c.parity_basis(), c.generator_basis());
}

/// Code from a generator matrix (rows need not be independent).
inline LinearCode code_from_generators(const BinaryMatrix& g) {
    BinaryMatrix gen = row_basis(g);
    return LinearCode(gen, kernel_basis(gen));
}

/// Visit every nonzero codeword once, in Gray-code order over the messages.
/// fn receives the codeword as a word span valid only during the call.
template <typename Fn>
void for_each_nonzero_codeword(const LinearCode& c, std::size_t budget, Fn&& fn) {
    std::size_t k = c.k();
    if (k >= 63 || (std::uint64_t{1} << k) > budget)
        throw BudgetExceeded("codeword enumeration: 2^k exceeds budget");
    BitRow cur(c.generator_basis().words_per_row(), 0);
    const BinaryMatrix& gen = c.generator_basis();
    std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        std::size_t bit = static_cast<std::size_t>(std::countr_zero(i));
        auto row = gen.row(bit);
        for (std::size_t w = 0; w < cur.size(); ++w) cur[w] ^= row[w];
        fn(std::span<const std::uint64_t>(cur));
    }
}

/// Exact minimum distance by exhaustive codeword enumeration.
inline std::size_t min_distance(const LinearCode& c,
                                std::size_t budget = std::size_t{1} << 28) {
    if (c.k() == 0) throw Error("min_distance: zero code has no nonzero codeword");
    if (auto cached = c.cached_min_distance()) return *cached;

    std::size_t best = c.n() + 1;
    if (c.generator_basis().words_per_row() == 1) {
        // single-word fast path; the Gray walk is the hot loop of the cyclic scan
        std::size_t k = c.k();
        if (k >= 63 || (std::uint64_t{1} << k) > budget)
            throw BudgetExceeded("min_distance: 2^k exceeds budget");
        std::vector<std::uint64_t> gen(k);
        for (std::size_t i = 0; i < k; ++i) gen[i] = c.generator_basis().row(i)[0];
        std::uint64_t cur = 0;
        std::uint64_t total = std::uint64_t{1} << k;
        for (std::uint64_t i = 1; i < total; ++i) {
            cur ^= gen[std::countr_zero(i)];
            std::size_t w = static_cast<std::size_t>(std::popcount(cur));
            if (w < best) best = w;
        }
    } else {
        for_each_nonzero_codeword(c, budget, [&](std::span<const std::uint64_t> cw) {
            std::size_t w = weight_of(cw);
            if (w < best) best = w;
        });
    }
    c.cache_min_distance(best);
    return best;
}

/// All codewords of exact weight w, in lexicographic order.
inline std::vector<BitRow> codewords_of_weight(const LinearCode& c, std::size_t w,
                                               std::size_t budget = std::size_t{1} << 28) {
    std::vector<BitRow> out;
    if (w == 0) {
        out.emplace_back(c.generator_basis().words_per_row(), 0);
        return out;
    }
    if (c.k() > 0)
        for_each_nonzero_codeword(c, budget, [&](std::span<const std::uint64_t> cw) {
            if (weight_of(cw) == w) out.emplace_back(cw.begin(), cw.end());
        });
    std::sort(out.begin(), out.end(),
              [](const BitRow& a, const BitRow& b) { return lex_less(a, b); });
    return out;
}

/// True iff rowspace(H) equals the dual code of C.
inline bool is_parity_check_for(const BinaryMatrix& h, const LinearCode& c) {
    if (h.n_cols() != c.n()) return false;
    if (rank(h) != c.n() - c.k()) return false;
    for (std::size_t j = 0; j < h.n_rows(); ++j)
        for (std::size_t g = 0; g < c.k(); ++g)
            if (dot_gf2(h.row(j), c.generator_basis().row(g))) return false;
    return true;
}

}  // namespace pwlab
