#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "support/oracles.hpp"
#include "youngcoho/gl_characters.hpp"
#include "youngcoho/sym_characters.hpp"

using namespace youngcoho;

TEST(Characters, TrivialAndSign) {
    for (int d = 1; d <= 7; ++d) {
        const auto& table = CharacterTable::get(d);
        for (std::size_t c = 0; c < table.partitions().size(); ++c) {
            const auto& rho = table.partitions()[c];
            EXPECT_EQ(irreducible_character(Partition{d})[c], 1);
            const int sign = (rho.size() - rho.length()) % 2 ? -1 : 1;
            EXPECT_EQ(irreducible_character(Partition::rectangle(1, d))[c], sign);
        }
    }
}

TEST(Characters, StandardRepresentationOfS3) {
    // The 2-dimensional representation: permutation matrices on {e1,e2,e3}
    // minus the trivial line, so chi = fixed points - 1.
    const auto& chi = irreducible_character({2, 1});
    EXPECT_EQ(chi.at({1, 1, 1}), 2);
    EXPECT_EQ(chi.at({2, 1}), 0);
    EXPECT_EQ(chi.at({3}), -1);
}

TEST(Characters, ClassSizes) {
    EXPECT_EQ(class_size({1, 1, 1}), 1);
    EXPECT_EQ(class_size({2, 1}), 3);
    for (int d = 1; d <= 12; ++d) {
        std::int64_t total = 0;
        for (const auto& rho : partition_list(d)) total += class_size(rho);
        EXPECT_EQ(total, factorial(d));
    }
}

TEST(Characters, DegreesCountStandardTableaux) {
    for (int d = 1; d <= 10; ++d) {
        std::int64_t squares = 0;
        for (const auto& lambda : partition_list(d)) {
            const auto deg = irreducible_character(lambda).at_identity();
            EXPECT_EQ(deg, oracle_ref::kostka(lambda, Partition::rectangle(1, d)));
            squares += deg * deg;
        }
        EXPECT_EQ(squares, factorial(d));
    }
}

TEST(Characters, OrthogonalityUpToTwelve) {
    for (int d = 1; d <= 12; ++d) {
        const auto& table = CharacterTable::get(d);
        const auto& ps = table.partitions();
        for (std::size_t a = 0; a < ps.size(); ++a)
            for (std::size_t b = a; b < ps.size(); ++b)
                ASSERT_EQ(inner_product(table.character(ps[a]), table.character(ps[b])), Rational(a == b ? 1 : 0))
                    << ps[a] << " " << ps[b];
    }
}

TEST(Characters, ColumnOrthogonality) {
    for (int d = 1; d <= 10; ++d) {
        const auto& table = CharacterTable::get(d);
        const auto n = table.partitions().size();
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t e = 0; e < n; ++e) {
                std::int64_t s = 0;
                for (const auto& lambda : table.partitions())
                    s += table.character(lambda)[c] * table.character(lambda)[e];
                EXPECT_EQ(s, c == e ? factorial(d) / table.class_sizes()[c] : 0);
            }
    }
}

TEST(Characters, YoungRuleAgainstFixedTabloids) {
    // chi(M^mu) = sum_lambda K_{lambda,mu} chi^lambda; the left side is counted
    // by brute force on tabloids, the Kostka numbers by SSYT enumeration.
    for (int d = 1; d <= 6; ++d)
        for (const auto& mu : partition_list(d))
            for (const auto& rho : partition_list(d)) {
                std::int64_t via_chars = 0;
                for (const auto& lambda : partition_list(d))
                    via_chars += oracle_ref::kostka(lambda, mu) * irreducible_character(lambda).at(rho);
                EXPECT_EQ(via_chars, oracle_ref::permutation_character(mu, oracle_ref::permutation_of_type(rho)))
                    << "mu=" << mu << " rho=" << rho;
            }
}

TEST(Characters, RemovalOrderIndependence) {
    std::mt19937 rng(7);
    for (int d = 2; d <= 9; ++d)
        for (const auto& lambda : partition_list(d))
            for (const auto& rho : partition_list(d)) {
                std::vector<int> order(static_cast<std::size_t>(rho.length()));
                std::iota(order.begin(), order.end(), 0);
                std::shuffle(order.begin(), order.end(), rng);
                EXPECT_EQ(murnaghan_nakayama(lambda, rho, order), murnaghan_nakayama(lambda, rho)) << lambda << " " << rho;
            }
}

TEST(Characters, InnerProductExampleAndDecomposition) {
    EXPECT_EQ(inner_product(irreducible_character({2, 1}), irreducible_character({2, 1})), Rational(1));
    const auto sq = pointwise_product(irreducible_character({2, 1}), irreducible_character({2, 1}));
    const auto m = irreducible_multiplicities(sq);
    EXPECT_EQ(m.at(Partition{3}), 1);
    EXPECT_EQ(m.at(Partition{2, 1}), 1);
    EXPECT_EQ(m.at(Partition{1, 1, 1}), 1);
}

TEST(Characters, MismatchedDegreesRejected) {
    EXPECT_THROW(inner_product(irreducible_character({2}), irreducible_character({3})), InvalidArgument);
    EXPECT_THROW(pointwise_product(irreducible_character({2}), irreducible_character({3})), InvalidArgument);
}
