#include <filesystem>

#include <unistd.h>

#include <gtest/gtest.h>

#include "cylroman/errors.hpp"
#include "cylroman/matrix_io.hpp"
#include "cylroman/oracle.hpp"
#include "cylroman/solver.hpp"

using namespace cylroman;

namespace {

RecurrenceResult recurrence_for(int m, Variant variant = Variant::Standard, int k = kDefaultMaxPower) {
    return find_recurrence(build_transfer_matrix(m, variant).matrix, k);
}

}  // namespace

TEST(RomanNumber, Examples) {
    EXPECT_EQ(roman_number(2, 3), 4);
    EXPECT_EQ(roman_number(7, 5), 16);
    EXPECT_THROW(roman_number(3, 2), std::invalid_argument);
    EXPECT_THROW(roman_number(12, 5), CapacityError);
}

TEST(RomanNumber, AgreesWithColumnDp) {
    for (int m = 2; m <= 4; ++m) {
        const auto values = roman_numbers(m, 14);
        for (int n = 3; n <= 14; ++n) {
            EXPECT_EQ(values[n], oracle::brute_force_gamma_R(m, n, oracle::OracleMode::ColumnDP)) << m << "x" << n;
            EXPECT_EQ(values[n], roman_number(m, n)) << m << "x" << n;
        }
    }
}

TEST(RomanNumber, ThreadCountDoesNotMatter) {
    EXPECT_EQ(roman_numbers(5, 12, {1, kDefaultMemoryBudget}), roman_numbers(5, 12, {4, kDefaultMemoryBudget}));
}

TEST(RomanNumber, EightRowsSpotValues) {
    const auto values = roman_numbers(8, 6);
    EXPECT_EQ(values[5], 18);
    EXPECT_EQ(values[6], 23);
}

TEST(FindRecurrence, SmallCylinders) {
    const auto m2 = recurrence_for(2);
    ASSERT_TRUE(m2.found);
    EXPECT_EQ((std::tuple{m2.n0, m2.alpha, m2.beta}), (std::tuple{6, 4, 4}));
    EXPECT_EQ(m2.shift_confirmed_through, 46);

    const auto m3 = recurrence_for(3);
    ASSERT_TRUE(m3.found);
    EXPECT_EQ((std::tuple{m3.n0, m3.alpha, m3.beta}), (std::tuple{11, 4, 6}));

    const auto m5 = recurrence_for(5);
    ASSERT_TRUE(m5.found);
    EXPECT_EQ((std::tuple{m5.n0, m5.alpha, m5.beta}), (std::tuple{16, 5, 12}));
}

TEST(FindRecurrence, FourRowsSettlesToPeriodOne) {
    // From n = 16 on every power is a shift of the previous one, so the
    // smallest alpha is 1; the period-5 shift also holds from the same n0.
    const auto sys = build_transfer_matrix(4);
    MemoryPowerStore store;
    const auto rec = find_recurrence(sys.matrix, kDefaultMaxPower, &store);
    ASSERT_TRUE(rec.found);
    EXPECT_EQ((std::tuple{rec.n0, rec.alpha, rec.beta}), (std::tuple{16, 1, 2}));
    PowerStats s;
    EXPECT_EQ(shift_difference(store.load(21, s), store.load(16, s)), Tropical(10));
    EXPECT_FALSE(shift_difference(store.load(20, s), store.load(15, s)).has_value());
}

TEST(FindRecurrence, Border) {
    const auto rec = recurrence_for(4, Variant::Border);
    ASSERT_TRUE(rec.found);
    EXPECT_EQ((std::tuple{rec.n0, rec.alpha, rec.beta}), (std::tuple{30, 1, 1}));
}

TEST(FindRecurrence, NotFoundWithFewPowers) {
    const auto rec = recurrence_for(2, Variant::Standard, 5);
    EXPECT_FALSE(rec.found);
    EXPECT_EQ(rec.diagonal_minima.size(), 6u);
    EXPECT_EQ(rec.diagonal_minima[3], Tropical(4));
}

TEST(FindRecurrence, DiskCacheGivesTheSameAnswer) {
    const auto dir = std::filesystem::temp_directory_path() / ("cylroman_solver_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    const auto sys = build_transfer_matrix(3);
    const CacheKey key{3, "standard", sys.matrix.dim(), content_hash(sys.matrix)};
    RecurrenceResult cold, warm;
    {
        DiskPowerCache cache(dir, key);
        cold = find_recurrence(sys.matrix, 30, &cache);
    }
    {
        DiskPowerCache cache(dir, key);
        warm = find_recurrence(sys.matrix, 30, &cache);
    }
    std::filesystem::remove_all(dir);
    EXPECT_EQ(warm.stats.products, 0u);
    EXPECT_EQ(cold.stats.products, 29u);
    EXPECT_EQ((std::tuple{warm.n0, warm.alpha, warm.beta}), (std::tuple{cold.n0, cold.alpha, cold.beta}));
    EXPECT_EQ(warm.diagonal_minima, cold.diagonal_minima);
}

TEST(SolveFormula, MatchesDirectPowers) {
    for (int m = 2; m <= 5; ++m) {
        const auto rec = recurrence_for(m);
        const auto f = solve_formula(m, rec);
        const auto direct = roman_numbers(m, 60);
        for (int n = 3; n <= 60; ++n) {
            EXPECT_EQ(f.evaluate(n), direct[n]) << "m=" << m << " n=" << n;
            EXPECT_EQ(f.evaluate_ceiling_form(n), direct[n]) << "m=" << m << " n=" << n;
        }
        EXPECT_TRUE(f.ceiling_form_verified());
    }
}

TEST(SolveFormula, TwoRows) {
    const auto f = solve_formula(2, recurrence_for(2));
    EXPECT_EQ(f.render().substr(0, 2), "n ");
    EXPECT_EQ(f.evaluate(100), 100 + f.residue_offsets()[0]);
}

TEST(SolveFormula, Preconditions) {
    EXPECT_THROW(solve_formula(2, RecurrenceResult{}), std::invalid_argument);
    EXPECT_THROW(RomanFormula(2, 6, 4, 4, {{3, 4}}), std::invalid_argument);
    const RomanFormula f(2, 3, 1, 2, {{3, 6}});
    EXPECT_EQ(f.evaluate(10), 20);
    EXPECT_THROW(f.evaluate(2), std::invalid_argument);
}

TEST(LowerBound, Examples) {
    EXPECT_EQ(lower_bound(10, 10), 44);
    EXPECT_EQ(lower_bound(10, 11), 49);
    EXPECT_EQ(lower_bound(7, 5), 16);
    EXPECT_EQ(lower_bound(15, 13), 84);
}

TEST(LowerBound, NeverExceedsRomanNumber) {
    for (int m = 4; m <= 6; ++m) {
        const auto values = roman_numbers(m, 20);
        for (int n = 3; n <= 20; ++n) {
            EXPECT_LE(lower_bound(m, n), values[n]) << m << "x" << n;
            if (n % 5 == 0) EXPECT_EQ(lower_bound(m, n), values[n]) << m << "x" << n;
        }
    }
}

TEST(BorderLoss, BorderPowersMatchTheOracle) {
    const auto report = verify_loss_lemma(10, 30);
    ASSERT_EQ(report.rows.size(), 21u);
    for (const auto& row : report.rows) {
        ASSERT_TRUE(row.twice_min_loss.is_finite());
        EXPECT_GE(row.twice_min_loss.weight(), row.n);
        if (row.n <= 16) EXPECT_EQ(row.twice_min_loss.weight(), oracle::twice_min_border_loss(row.n)) << row.n;
    }
    EXPECT_EQ(report.rows[0].twice_min_loss, Tropical(10));
    EXPECT_EQ(report.rows[1].twice_min_loss, Tropical(12));
    for (std::size_t i = 2; i < report.rows.size(); ++i) EXPECT_TRUE(report.rows[i].equals_n) << report.rows[i].n;
    EXPECT_TRUE(report.recurrence.found);
    EXPECT_THROW(verify_loss_lemma(9, 12), std::invalid_argument);
}
