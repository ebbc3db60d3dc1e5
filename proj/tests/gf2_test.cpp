#include <doctest.h>

#include <stdexcept>

#include "eic/gf2.hpp"

using namespace eic;

TEST_CASE("rank basics") {
    CHECK(rank(BitMatrix::identity(3)) == 3);
    CHECK(rank(BitMatrix::from_strings({"111", "111", "111"})) == 1);
    // third row is the XOR of the first two
    CHECK(rank(BitMatrix::from_strings({"110", "011", "101"})) == 2);
    CHECK(rank(BitMatrix(2, 3)) == 0);
}

TEST_CASE("row_reduce") {
    auto rr = row_reduce(BitMatrix::identity(3));
    CHECK(rr.reduced == BitMatrix::identity(3));
    CHECK(rr.pivot_columns == std::vector<std::size_t>{0, 1, 2});

    rr = row_reduce(BitMatrix(2, 3));
    CHECK(rr.reduced == BitMatrix(2, 3));
    CHECK(rr.pivot_columns.empty());

    rr = row_reduce(BitMatrix::from_strings({"110", "011", "101"}));
    CHECK(rr.reduced == BitMatrix::from_strings({"101", "011", "000"}));
    CHECK(rr.pivot_columns == std::vector<std::size_t>{0, 1});
}

TEST_CASE("express_in_rowspan") {
    auto c = express_in_rowspan(BitMatrix::identity(3), BitVector::from_string("010"));
    REQUIRE(c.has_value());
    CHECK(c->to_string() == "010");

    c = express_in_rowspan(BitMatrix::from_strings({"110", "011"}),
                           BitVector::from_string("101"));
    REQUIRE(c.has_value());
    CHECK(c->to_string() == "11");

    CHECK(!express_in_rowspan(BitMatrix::from_strings({"110"}),
                              BitVector::from_string("001")));

    CHECK_THROWS_AS(
        express_in_rowspan(BitMatrix::identity(3), BitVector::from_string("01")),
        std::invalid_argument);
}

TEST_CASE("round trip and helpers") {
    const BitMatrix m = BitMatrix::from_strings({"1101", "0110", "1011"});
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto c = express_in_rowspan(m, m.row(r));
        REQUIRE(c.has_value());
        CHECK(row_combination(*c, m) == m.row(r));
    }
    CHECK(vstack({m, BitMatrix::identity(4)}).rows() == 7);
    CHECK(diagonal(BitVector::from_string("101")) ==
          BitMatrix::from_strings({"100", "000", "001"}));
    CHECK(multiply(m, BitMatrix::identity(4)) == m);
}

TEST_CASE("bitvector ops") {
    BitVector v = BitVector::from_string("0110");
    CHECK(v.size() == 4);
    CHECK(v.popcount() == 2);
    CHECK(v.first_set() == 1);
    CHECK(v.any());
    v ^= v;
    CHECK(!v.any());
    CHECK(v.first_set() == 4);
    CHECK(BitVector::from_string("0110").to_string() == "0110");
}
