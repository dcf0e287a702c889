#pragma once

#include <sstream>
#include <string>

#include "pwlab/gf2.hpp"
#include "pwlab/gf2poly.hpp"

namespace pwlab {

/// m x (2^m - 1) matrix whose columns are all nonzero length-m vectors in
/// increasing binary order (row 0 is the most significant bit).
inline BinaryMatrix hamming_parity_check(std::size_t m) {
    if (m < 2) throw Error("hamming_parity_check: m >= 2 required");
    if (m > 20) throw DimensionGuard("hamming_parity_check: m too large");
    std::size_t n = (std::size_t{1} << m) - 1;
    BinaryMatrix h(m, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t v = i + 1;
        for (std::size_t r = 0; r < m; ++r)
            if ((v >> (m - 1 - r)) & 1u) h.set(r, i, true);
    }
    return h;
}

/// (2^{n-k} - 1) x n matrix of all nonzero dual codewords, rows in
/// lexicographic order.
inline BinaryMatrix all_dual_codewords_matrix(const LinearCode& c) {
    std::size_t r = c.n() - c.k();
    if (r > 20) throw BudgetExceeded("all_dual_codewords_matrix: n-k > 20");
    LinearCode dual = dual_code(c);
    std::vector<BitRow> rows;
    rows.reserve((std::size_t{1} << r) - 1);
    if (r > 0)
        for_each_nonzero_codeword(dual, std::size_t{1} << r,
                                  [&](std::span<const std::uint64_t> cw) {
                                      rows.emplace_back(cw.begin(), cw.end());
                                  });
    std::sort(rows.begin(), rows.end(),
              [](const BitRow& a, const BitRow& b) { return lex_less(a, b); });
    BinaryMatrix out(rows.size(), c.n());
    for (std::size_t i = 0; i < rows.size(); ++i) out.set_row(i, rows[i]);
    return out;
}

/// Matrix of all weight-w dual codewords (possibly empty). The caller is
/// responsible for checking is_parity_check_for when using it as one.
inline BinaryMatrix weight_w_dual_matrix(const LinearCode& c, std::size_t w,
                                         std::size_t budget = std::size_t{1} << 28) {
    std::vector<BitRow> rows;
    if (w <= c.n()) rows = codewords_of_weight(dual_code(c), w, budget);
    BinaryMatrix out(rows.size(), c.n());
    for (std::size_t i = 0; i < rows.size(); ++i) out.set_row(i, rows[i]);
    return out;
}

/// n x n matrix with row j equal to c cyclically shifted by j:
/// H[j][i] = c[(i - j) mod n].
inline BinaryMatrix circulant(const std::vector<bool>& c) {
    std::size_t n = c.size();
    BinaryMatrix h(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (c[(i + n - j) % n]) h.set(j, i, true);
    return h;
}

/// Cyclic code of length n generated by g (g must divide x^n + 1).
/// Generator basis: x^i g for i < k; parity basis: shifts of the reciprocal
/// of h = (x^n + 1)/g, which generates the dual.
inline LinearCode cyclic_code(GF2Poly g, std::size_t n) {
    if (n < 2 || n > 63) throw DimensionGuard("cyclic_code: need 2 <= n <= 63");
    if (!poly_divides(g, poly_xn_plus_1(n)))
        throw Error("cyclic_code: g does not divide x^n + 1");
    int dg = g.degree();
    if (dg < 1 || static_cast<std::size_t>(dg) >= n)
        throw Error("cyclic_code: need 1 <= deg g <= n-1");
    std::size_t k = n - static_cast<std::size_t>(dg);
    GF2Poly h = poly_divmod(poly_xn_plus_1(n), g).quot;
    GF2Poly hstar = poly_reciprocal(h);

    BinaryMatrix gen(k, n), par(n - k, n);
    for (std::size_t i = 0; i < k; ++i) {
        BitRow row{g.bits << i};
        gen.set_row(i, row);
    }
    for (std::size_t i = 0; i < n - k; ++i) {
        BitRow row{hstar.bits << i};
        par.set_row(i, row);
    }
    return LinearCode(std::move(gen), std::move(par));
}

inline LinearCode hamming_code(std::size_t m) {
    return kernel_code(hamming_parity_check(m));
}

inline LinearCode simplex_code(std::size_t m) { return dual_code(hamming_code(m)); }

inline LinearCode repetition_code(std::size_t n) {
    if (n < 2) throw Error("repetition_code: n >= 2 required");
    BinaryMatrix gen(1, n);
    for (std::size_t i = 0; i < n; ++i) gen.set(0, i, true);
    return LinearCode(gen, kernel_basis(gen));
}

/// Append an overall parity bit as the last coordinate.
inline LinearCode extend_with_parity(const LinearCode& c) {
    std::size_t n = c.n();
    BinaryMatrix gen(c.k(), n + 1);
    for (std::size_t i = 0; i < c.k(); ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (c.generator_basis().get(i, j)) gen.set(i, j, true);
        gen.set(i, n, c.generator_basis().row_weight(i) % 2 != 0);
    }
    return code_from_generators(gen);
}

inline LinearCode extended_hamming_code(std::size_t m) {
    return extend_with_parity(hamming_code(m));
}

/// [23,12,7] Golay code as the cyclic code with generator
/// x^11 + x^9 + x^7 + x^6 + x^5 + x + 1; parameters are asserted at
/// construction time, so the choice of degree-11 factor is immaterial.
inline LinearCode golay23() {
    GF2Poly g(0b1010'1110'0011);
    LinearCode c = cyclic_code(g, 23);
    if (min_distance(c) != 7 || min_distance(dual_code(c)) != 8)
        throw Error("golay23: construction self-check failed");
    return c;
}

inline LinearCode golay24() {
    LinearCode c = extend_with_parity(golay23());
    if (min_distance(c) != 8) throw Error("golay24: construction self-check failed");
    return c;
}

/// Parse "hamming 3", "simplex 3", "extended_hamming 3", "repetition 5",
/// "cyclic 7 11" (generator as a bitmask), "golay23", "golay24".
inline LinearCode named_code(const std::string& spec) {
    std::istringstream in(spec);
    std::string name;
    in >> name;
    if (name == "golay23") return golay23();
    if (name == "golay24") return golay24();
    if (name == "cyclic") {
        std::size_t n = 0;
        std::uint64_t g = 0;
        if (!(in >> n >> g) || n < 1 || g < 2)
            throw ParseError("named_code: expected 'cyclic n g' in '" + spec + "'");
        return cyclic_code(GF2Poly(g), n);
    }
    long param = -1;
    if (!(in >> param) || param < 0) throw ParseError("named_code: missing parameter in '" + spec + "'");
    std::size_t p = static_cast<std::size_t>(param);
    if (name == "hamming") return hamming_code(p);
    if (name == "simplex") return simplex_code(p);
    if (name == "extended_hamming") return extended_hamming_code(p);
    if (name == "repetition") return repetition_code(p);
    throw ParseError("named_code: unknown code '" + spec + "'");
}

}  // namespace pwlab
