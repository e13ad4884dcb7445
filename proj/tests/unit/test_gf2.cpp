#include "psalg/gf2.hpp"

#include <doctest.h>
#include "printing.hpp"

#include <random>

using namespace psalg;

TEST_SUITE("gf2") {

TEST_CASE("rank, rref and row space") {
    Gf2Matrix m(3);
    m.add_row({true, true, false});
    m.add_row({false, true, true});
    m.add_row({true, false, true});
    CHECK(m.rank() == 2);
    CHECK(m.rref().rows() == 2);
    CHECK(m.row_space().size() == 4);
    CHECK(m.row_space_contains({true, false, true}));
    CHECK_FALSE(m.row_space_contains({true, false, false}));
    CHECK(m.null_space().rank() == 1);
    CHECK(m.null_space().row(0) == Gf2Matrix::Bits{true, true, true});
}

TEST_CASE("relabel_columns") {
    Gf2Matrix m(3);
    m.add_row({true, false, false});
    std::vector<std::size_t> perm{2, 0, 1};
    CHECK(m.relabel_columns(perm).row(0) == Gf2Matrix::Bits{false, false, true});
}

TEST_CASE("same_row_space is basis independent") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t cols = 1 + rng() % 70;
        Gf2Matrix a(cols), b(cols);
        std::vector<Gf2Matrix::Bits> rows;
        for (int r = 0; r < 4; ++r) {
            Gf2Matrix::Bits bits(cols);
            for (auto&& bit : bits) bit = rng() & 1U;
            rows.push_back(bits);
            a.add_row(bits);
        }
        // b: pairwise sums plus one original row span the same space.
        b.add_row(rows[0]);
        for (int r = 1; r < 4; ++r) {
            Gf2Matrix::Bits s(cols);
            for (std::size_t c = 0; c < cols; ++c) s[c] = rows[r][c] != rows[r - 1][c];
            b.add_row(s);
        }
        CHECK(a.same_row_space(b));
        CHECK(a.rref() == b.rref());
        CHECK(a.rank() + a.null_space().rank() == cols);
    }
}

}
