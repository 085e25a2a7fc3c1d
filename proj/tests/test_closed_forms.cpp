#include <gtest/gtest.h>

#include "youngcoho/closed_forms_p2.hpp"

using namespace youngcoho;

namespace {

const DataStore& store() {
    static const DataStore s(YOUNGCOHO_DEFAULT_DATA_DIR);
    return s;
}

Partition column(int n) { return Partition::rectangle(1, n); }

/// Sum of layers with the given 2-power weights.
Partition assemble(const std::vector<Partition>& layers) {
    PAdicExpansion e{2, layers};
    return e.reconstruct();
}

}  // namespace

TEST(StripRestricted, Examples) {
    EXPECT_EQ(strip_restricted(Partition{1, 1, 1} + Partition{4, 2}), (Partition{4, 2}));
    EXPECT_EQ(strip_restricted({17, 13, 13, 4}), (Partition{16, 12, 12, 4}));
    EXPECT_THROW(strip_restricted({2, 1, 1}), InvalidArgument);
    EXPECT_TRUE(strip_restricted({1, 1, 1}).empty());
    EXPECT_THROW(strip_restricted({4, 1, 1}), InvalidArgument);
}

TEST(H1, Examples) {
    EXPECT_EQ(h1_closed({17, 13, 13, 4}), 1);
    EXPECT_EQ(h1_closed({57, 41, 9, 8}), 2);
    EXPECT_EQ(h1_closed({5, 3}), 1);
    EXPECT_EQ(h1_closed({10, 6}), 0);
}

TEST(H2, TableCells) {
    // lambda_(1) = 1^{4a+2}, lambda_(s) = 1^{2b}: 7.
    EXPECT_EQ(h2_closed(assemble({{}, column(6), {}, column(2)})), 7);
    EXPECT_EQ(h2_closed(assemble({{}, column(2), column(4)})), 5);
    // lambda_(1) empty, lambda_(s) = (2,2,1^c): 1.
    EXPECT_EQ(h2_closed(assemble({{}, {}, {2, 2, 1}})), 1);
    // A layer other than 1 and s that is not a column kills H^2.
    EXPECT_EQ(h2_closed(assemble({{2, 1}, column(1), column(2)})), 0);
}

TEST(ClosedForms, AgreeWithEngineUpToTen) {
    for (int d = 1; d <= 10; ++d) {
        const auto& D = store().get(2, d);
        for (const auto& lambda : partition_list(d)) {
            EXPECT_EQ(h1_closed(lambda), h_young(2, d, lambda, 1, D)) << lambda;
            EXPECT_EQ(h2_closed(lambda), h_young(2, d, lambda, 2, D)) << lambda;
        }
    }
}

TEST(ClosedForms, StabilityAndBounds) {
    for (int d = 1; d <= 12; ++d)
        for (const auto& lambda : partition_list(d)) {
            EXPECT_EQ(h1_closed(lambda.scaled(2)), h1_closed(lambda.scaled(4))) << lambda;
            EXPECT_EQ(h2_closed(lambda.scaled(4)), h2_closed(lambda.scaled(8))) << lambda;
            EXPECT_LE(h1_closed(lambda), 2);
            EXPECT_GE(h1_closed(lambda), 0);
            EXPECT_LE(h2_closed(lambda), 8);
            EXPECT_GE(h2_closed(lambda), 0);
        }
}

TEST(ClosedForms, ProjectiveAndNonPrincipalGiveZero) {
    EXPECT_EQ(h1_closed({3, 2, 1}), 0);
    EXPECT_EQ(h2_closed({3, 2, 1}), 0);
    for (int d = 1; d <= 12; ++d)
        for (const auto& lambda : partition_list(d))
            if (is_projective_young(2, lambda) || vanishes_identically(2, lambda)) {
                EXPECT_EQ(h1_closed(lambda), 0) << lambda;
                EXPECT_EQ(h2_closed(lambda), 0) << lambda;
            }
}
