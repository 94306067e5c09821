#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "pdom/canonical.hpp"
#include "pdom/enumerate.hpp"
#include "testutil.hpp"

using namespace pdom;

TEST(CanonicalCode, InvariantUnderRelabeling) {
    Graph p3 = testutil::path(3);
    Graph p3b = from_edge_list(3, {{2, 0}, {0, 1}});  // relabeled 2-0-1
    EXPECT_EQ(canonical_code(p3), canonical_code(p3b));
}

TEST(CanonicalCode, SeparatesNonIsomorphic) {
    EXPECT_NE(canonical_code(testutil::path(4)), canonical_code(testutil::star(3)));
}

TEST(CanonicalCode, RejectsNonTrees) {
    EXPECT_THROW(canonical_code(from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}})),
                 std::invalid_argument);
}

TEST(CanonicalCode, Centers) {
    EXPECT_EQ(tree_centers(testutil::path(4)), (std::vector<int>{1, 2}));
    EXPECT_EQ(tree_centers(testutil::path(5)), (std::vector<int>{2}));
    EXPECT_EQ(tree_centers(testutil::star(5)), (std::vector<int>{0}));
    EXPECT_EQ(tree_centers(Graph(1)), (std::vector<int>{0}));
}

// All 11 classes at n=7 get pairwise distinct codes; cross-checked against a
// permutation-scan isomorphism oracle.
TEST(CanonicalCode, DistinctAcrossClassesAtSeven) {
    auto trees = enumerate_trees(7);
    ASSERT_EQ(trees.size(), 11u);
    for (std::size_t i = 0; i < trees.size(); ++i) {
        for (std::size_t j = i + 1; j < trees.size(); ++j) {
            EXPECT_FALSE(oracle::isomorphic(trees[i], trees[j]));
            EXPECT_NE(canonical_code(trees[i]), canonical_code(trees[j]));
        }
    }
}

// 100 random relabelings per tree never change the code, for every class up
// to nine vertices.
TEST(CanonicalCode, RelabelingInvarianceUpToNine) {
    std::mt19937_64 rng(20240901);
    for (int n = 1; n <= 9; ++n) {
        for (const Graph& t : enumerate_trees(n)) {
            std::string code = canonical_code(t);
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            for (int rep = 0; rep < 100; ++rep) {
                for (int i = n - 1; i > 0; --i) {
                    int j = static_cast<int>(detail::uniform_below(
                        rng, static_cast<std::uint64_t>(i) + 1));
                    std::swap(perm[static_cast<std::size_t>(i)],
                              perm[static_cast<std::size_t>(j)]);
                }
                EXPECT_EQ(canonical_code(oracle::relabel(t, perm)), code);
            }
        }
    }
}
