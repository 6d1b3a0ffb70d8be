#include <gtest/gtest.h>

#include "cylroman/errors.hpp"
#include "cylroman/oracle.hpp"
#include "cylroman/solver.hpp"

using namespace cylroman;
using namespace cylroman::oracle;

namespace {

RomanFunction constant(int m, int n, std::uint8_t v) {
    return {m, n, std::vector<std::uint8_t>(static_cast<std::size_t>(m * n), v)};
}

}  // namespace

TEST(CylinderGraph, Degrees) {
    const CylinderGraph g(3, 5);
    EXPECT_EQ(g.vertex_count(), 15);
    EXPECT_EQ(g.neighbors(g.index(0, 0)).size(), 3u);
    EXPECT_EQ(g.neighbors(g.index(1, 4)).size(), 4u);
    EXPECT_THROW(CylinderGraph(2, 2), std::invalid_argument);
}

TEST(ValidateRdf, ConstantFunctions) {
    const CylinderGraph g(3, 4);
    EXPECT_TRUE(validate_rdf(g, constant(3, 4, 2)));
    EXPECT_FALSE(validate_rdf(g, constant(3, 4, 0)));
    EXPECT_TRUE(validate_rdf(g, constant(3, 4, 1)));
    EXPECT_THROW(validate_rdf(g, constant(3, 5, 1)), std::invalid_argument);
}

TEST(ValidateRdf, WrapAroundNeighbour) {
    const CylinderGraph g(1, 3);
    const auto f = RomanFunction::from_grid("200\n");
    EXPECT_TRUE(validate_rdf(g, f));
    const CylinderGraph h(1, 4);
    EXPECT_FALSE(validate_rdf(h, RomanFunction::from_grid("2000")));
}

TEST(RomanFunction, GridRoundTrip) {
    const auto f = RomanFunction::from_grid("201\n012\n");
    EXPECT_EQ(f.m, 2);
    EXPECT_EQ(f.n, 3);
    EXPECT_EQ(f.weight(), 6);
    EXPECT_EQ(f.to_grid(), "201\n012\n");
    EXPECT_THROW(RomanFunction::from_grid("20\n1\n"), std::invalid_argument);
    EXPECT_THROW(RomanFunction::from_grid("23\n"), std::invalid_argument);
}

TEST(BruteForce, SmallValues) {
    EXPECT_EQ(brute_force_gamma_R(2, 3), 4);
    EXPECT_EQ(brute_force_gamma_R(2, 4), 4);
    EXPECT_EQ(brute_force_gamma_R(3, 3), 5);
    EXPECT_EQ(brute_force_gamma_R(3, 4), 6);
    EXPECT_EQ(brute_force_gamma_R(1, 5), 4);
}

TEST(BruteForce, ModesAgree) {
    for (int m = 1; m <= 4; ++m)
        for (int n = 3; m * n <= 14; ++n)  // the acceptance run covers up to 16 vertices
            EXPECT_EQ(brute_force_gamma_R(m, n, OracleMode::Exhaustive), brute_force_gamma_R(m, n, OracleMode::ColumnDP))
                << m << "x" << n;
}

TEST(BruteForce, CapacityLimits) {
    EXPECT_THROW(brute_force_gamma_R(4, 5, OracleMode::Exhaustive), CapacityError);
    EXPECT_THROW(brute_force_gamma_R(5, 5, OracleMode::ColumnDP), CapacityError);
    EXPECT_THROW(brute_force_gamma_R(2, 2), std::invalid_argument);
}

TEST(BruteForce, MonotoneInRows) {
    // Adding a row to the path cannot lower the Roman domination number.
    for (int n = 3; n <= 10; ++n)
        for (int m = 1; m < 4; ++m)
            EXPECT_LE(brute_force_gamma_R(m, n, OracleMode::ColumnDP), brute_force_gamma_R(m + 1, n, OracleMode::ColumnDP));
}

TEST(BorderLoss, ModesAgree) {
    EXPECT_EQ(twice_min_border_loss(3, OracleMode::Exhaustive), twice_min_border_loss(3, OracleMode::ColumnDP));
    EXPECT_EQ(twice_min_border_loss(4, OracleMode::Exhaustive), twice_min_border_loss(4, OracleMode::ColumnDP));
    EXPECT_EQ(twice_min_border_loss(3), 5);
    EXPECT_EQ(twice_min_border_loss(10), 10);
}

TEST(DiagonalPattern, Examples) {
    const auto f10 = diagonal_pattern(10, 10);
    EXPECT_EQ(f10.weight(), 44);
    EXPECT_TRUE(validate_rdf(CylinderGraph(10, 10), f10));

    const auto f4 = diagonal_pattern(4, 5);
    EXPECT_EQ(f4.weight(), 10);
    EXPECT_TRUE(validate_rdf(CylinderGraph(4, 5), f4));
    EXPECT_EQ(f4.weight(), roman_number(4, 5));

    const auto f12 = diagonal_pattern(12, 15);
    EXPECT_EQ(f12.weight(), 78);
    EXPECT_TRUE(validate_rdf(CylinderGraph(12, 15), f12));
}

TEST(DiagonalPattern, Preconditions) {
    EXPECT_THROW(diagonal_pattern(10, 12), std::invalid_argument);
    EXPECT_THROW(diagonal_pattern(3, 10), std::invalid_argument);
}

TEST(Certificates, SevenBySixHasWeightTwenty) {
    // Found by a row-by-row DP along the path; lower than the closed form
    // ceil(16n/5) + 1 gives at n = 6.
    const auto f = RomanFunction::from_grid(
        "202000\n"
        "000020\n"
        "020000\n"
        "000202\n"
        "020000\n"
        "000020\n"
        "202000\n");
    EXPECT_TRUE(validate_rdf(CylinderGraph(7, 6), f));
    EXPECT_EQ(f.weight(), 20);
    EXPECT_EQ(roman_number(7, 6), 20);
}

TEST(RowDp, AgreesWithOtherModes) {
    for (int m = 1; m <= 4; ++m)
        for (int n = 3; n <= 6; ++n) {
            EXPECT_EQ(brute_force_gamma_R(m, n, OracleMode::RowDP), brute_force_gamma_R(m, n, OracleMode::ColumnDP))
                << m << "x" << n;
            if (m * n <= 14)
                EXPECT_EQ(brute_force_gamma_R(m, n, OracleMode::RowDP), brute_force_gamma_R(m, n, OracleMode::Exhaustive))
                    << m << "x" << n;
        }
}

TEST(RowDp, AgreesWithTransferMatrix) {
    for (int m = 5; m <= 7; ++m) {
        const auto values = roman_numbers(m, 6);
        for (int n = 3; n <= 6; ++n) EXPECT_EQ(brute_force_gamma_R(m, n, OracleMode::RowDP), values[n]) << m << "x" << n;
    }
    EXPECT_EQ(brute_force_gamma_R(7, 6, OracleMode::RowDP), 20);
    EXPECT_EQ(brute_force_gamma_R(8, 3, OracleMode::RowDP), 13);
    EXPECT_THROW(brute_force_gamma_R(3, 8, OracleMode::RowDP), CapacityError);
    EXPECT_THROW(twice_min_border_loss(5, OracleMode::RowDP), std::invalid_argument);
}
