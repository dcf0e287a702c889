#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace pwlab;

TEST_CASE("hamming_parity_check") {
    BinaryMatrix h2 = hamming_parity_check(2);
    CHECK(h2 == BinaryMatrix::from_strings({"011", "101"}));
    CHECK(min_distance(kernel_code(h2)) == 3);

    BinaryMatrix h4 = hamming_parity_check(4);
    LinearCode c4 = kernel_code(h4);
    CHECK(c4.n() == 15);
    CHECK(c4.k() == 11);
    CHECK(min_distance(c4) == 3);
}

TEST_CASE("hamming kernels have distance 3 for m up to 7") {
    for (std::size_t m = 2; m <= 5; ++m)
        CHECK(min_distance(kernel_code(hamming_parity_check(m))) == 3);
    // beyond the enumeration budget, check via column dependencies: all
    // columns distinct and nonzero, and cols i ^ j ^ (i^j) = 0
    for (std::size_t m = 6; m <= 7; ++m) {
        BinaryMatrix h = hamming_parity_check(m);
        std::set<std::vector<bool>> cols;
        for (std::size_t i = 0; i < h.n_cols(); ++i) {
            std::vector<bool> col(m);
            bool nonzero = false;
            for (std::size_t r = 0; r < m; ++r) {
                col[r] = h.get(r, i);
                nonzero |= col[r];
            }
            CHECK(nonzero);
            cols.insert(col);
        }
        CHECK(cols.size() == h.n_cols());  // no weight-2 codeword
        LinearCode c = kernel_code(h);
        BitRow w(c.generator_basis().words_per_row(), 0);
        w[0] = 0b111;  // columns 1, 2, 3 = 1 + 2 = 3
        CHECK(c.contains(w));
    }
}

TEST_CASE("all_dual_codewords_matrix") {
    BinaryMatrix h = all_dual_codewords_matrix(hamming_code(3));
    CHECK(h.n_rows() == 7);
    CHECK(h.n_cols() == 7);
    for (std::size_t r = 0; r < 7; ++r) CHECK(h.row_weight(r) == 4);

    BinaryMatrix even = all_dual_codewords_matrix(kernel_code(BinaryMatrix::from_strings({"111"})));
    CHECK(even == BinaryMatrix::from_strings({"111"}));
}

TEST_CASE("weight_w_dual_matrix") {
    CHECK(weight_w_dual_matrix(simplex_code(3), 3).n_rows() == 7);
    CHECK(weight_w_dual_matrix(simplex_code(4), 3).n_rows() == 35);
    CHECK(weight_w_dual_matrix(hamming_code(3), 8).n_rows() == 0);
}

TEST_CASE("circulant") {
    CHECK(circulant({true, true, false}) ==
          BinaryMatrix::from_strings({"110", "011", "101"}));
    CHECK(rank(circulant({true, true, true, true})) == 1);

    std::vector<bool> e1(5, false);
    e1[0] = true;
    BinaryMatrix p = circulant(e1);
    CHECK(rank(p) == 5);
    for (std::size_t r = 0; r < 5; ++r) CHECK(p.row_weight(r) == 1);

    SUBCASE("w-regularity") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t n = 2 + rng() % 10;
            std::vector<bool> c(n);
            std::size_t w = 0;
            for (std::size_t i = 0; i < n; ++i) {
                c[i] = rng() & 1;
                w += c[i];
            }
            BinaryMatrix h = circulant(c);
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(h.row_weight(j) == w);
                CHECK(h.col_weight(j) == w);
            }
        }
    }
}

TEST_CASE("named codes") {
    LinearCode g23 = named_code("golay23");
    CHECK(g23.n() == 23);
    CHECK(g23.k() == 12);
    CHECK(min_distance(g23) == 7);
    CHECK(min_distance(dual_code(g23)) == 8);

    LinearCode g24 = named_code("golay24");
    CHECK(g24.n() == 24);
    CHECK(g24.k() == 12);
    CHECK(min_distance(g24) == 8);

    LinearCode eh = named_code("extended_hamming 3");
    CHECK(eh.n() == 8);
    CHECK(eh.k() == 4);
    CHECK(min_distance(eh) == 4);

    LinearCode rep = named_code("repetition 5");
    CHECK(rep.n() == 5);
    CHECK(rep.k() == 1);
    CHECK(min_distance(rep) == 5);

    LinearCode cyc = named_code("cyclic 7 11");  // x^3 + x + 1
    CHECK(cyc.n() == 7);
    CHECK(cyc.k() == 4);
    CHECK(min_distance(cyc) == 3);

    CHECK_THROWS_AS(named_code("mystery 3"), ParseError);
    CHECK_THROWS_AS(named_code("cyclic 7"), ParseError);
    CHECK_THROWS_AS(named_code("cyclic 7 12"), Error);  // not a divisor
}

TEST_CASE("shortened [6,3,3] helper used by the acceptance suite") {
    LinearCode c = pwtest::shortened_hamming6();
    CHECK(c.n() == 6);
    CHECK(c.k() == 3);
    CHECK(min_distance(c) == 3);
}
