#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pdom/domination.hpp"
#include "pdom/enumerate.hpp"
#include "pdom/family.hpp"
#include "testutil.hpp"

using namespace pdom;

namespace {
Graph f_gadget(int p) { return build_block(BlockKind::kF, p).graph; }
Graph ft_gadget(int p, int t) { return build_block(BlockKind::kFt, p, t).graph; }
}  // namespace

TEST(IsPDominating, Definition) {
    Graph p4 = testutil::path(4);
    EXPECT_TRUE(is_p_dominating(p4, 2, VertexSet::of(4, {0, 2, 3})));
    EXPECT_TRUE(is_p_dominating(p4, 2, VertexSet::full(4)));
    EXPECT_TRUE(is_p_dominating(testutil::star(3), 5, VertexSet::full(4)));
    EXPECT_FALSE(is_p_dominating(testutil::star(3), 2, VertexSet::of(4, {0})));
    EXPECT_FALSE(is_p_dominating(p4, 2, VertexSet::of(4, {0, 1})));
}

TEST(GammaP, SmallFrozenValues) {
    EXPECT_EQ(gamma_p(testutil::path(4), 2).value, 3);
    EXPECT_EQ(gamma_p(f_gadget(3), 3).value, 5);        // 2p-1 at p=3
    EXPECT_EQ(gamma_p(ft_gadget(3, 3), 3).value, 9);    // t*p at p=3, t=3
    EXPECT_EQ(gamma_p(Graph(1), 5).value, 1);
}

TEST(GammaP, WitnessIsLexSmallestMinimumSet) {
    auto cert = gamma_p(testutil::path(4), 2);
    EXPECT_EQ(cert.witness, VertexSet::of(4, {0, 1, 3}));
    EXPECT_FALSE(cert.unique);
}

TEST(GammaP, ExhaustiveGuard) {
    Graph big = testutil::path(30);
    EXPECT_NO_THROW(gamma_p(big, 2));  // tree: dynamic program, no guard
    Graph cyc = add_edges(big, {{0, 29}});
    EXPECT_THROW(gamma_p(cyc, 2), SizeGuardError);
}

TEST(AllMinimumSets, FrozenExamples) {
    auto sets = all_minimum_p_dominating_sets(testutil::path(4), 2);
    ASSERT_EQ(sets.size(), 2u);
    EXPECT_EQ(sets[0], VertexSet::of(4, {0, 1, 3}));
    EXPECT_EQ(sets[1], VertexSet::of(4, {0, 2, 3}));

    auto f2 = all_minimum_p_dominating_sets(f_gadget(3), 3);
    ASSERT_EQ(f2.size(), 1u);
    EXPECT_EQ(f2[0], VertexSet::of(7, {0, 3, 4, 5, 6}));  // center plus the four leaves

    auto k13 = all_minimum_p_dominating_sets(testutil::star(3), 3);
    ASSERT_EQ(k13.size(), 1u);
    EXPECT_EQ(k13[0], VertexSet::of(4, {1, 2, 3}));
}

TEST(AllMinimumSets, Guard) {
    EXPECT_THROW(all_minimum_p_dominating_sets(testutil::path(21), 2), SizeGuardError);
}

// The tree program must match the independent exhaustive oracle on value,
// uniqueness, and the lexicographic witness, for every tree up to 12 vertices.
TEST(GammaP, TreeProgramCrossValidation) {
    for (int n = 1; n <= 12; ++n) {
        for (const Graph& t : enumerate_trees(n)) {
            for (int p = 1; p <= 3; ++p) {
                auto cert = gamma_p(t, p);
                auto sets = oracle::all_minimum_sets(t, p);
                ASSERT_FALSE(sets.empty());
                EXPECT_EQ(cert.value, std::popcount(sets[0])) << "n=" << n << " p=" << p;
                EXPECT_EQ(cert.unique, sets.size() == 1) << "n=" << n << " p=" << p;
                EXPECT_TRUE(is_p_dominating(t, p, cert.witness));
                std::uint64_t lex_best = sets[0];
                for (std::uint64_t s : sets) {
                    std::uint64_t d = s ^ lex_best;
                    if (d && (s & (d & (~d + 1)))) lex_best = s;
                }
                EXPECT_EQ(cert.witness, detail::from_mask(n, lex_best))
                    << "n=" << n << " p=" << p;
            }
        }
    }
}

TEST(GammaP, GeneralGraphsAgainstOracle) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = oracle::random_connected_nontree(7, seed);
        for (int p = 1; p <= 3; ++p) {
            auto cert = gamma_p(g, p);
            auto sets = oracle::all_minimum_sets(g, p);
            EXPECT_EQ(cert.value, std::popcount(sets[0]));
            EXPECT_EQ(cert.unique, sets.size() == 1);
        }
    }
}

TEST(ForcedVertices, ObservationOneTwo) {
    for (int n = 1; n <= 8; ++n) {
        for (const Graph& t : enumerate_trees(n)) {
            for (int p = 1; p <= 3; ++p) {
                auto cert = gamma_p(t, p, SearchLimits{}, /*with_all_sets=*/true);
                VertexSet forced = forced_vertices(t, p);
                EXPECT_TRUE(forced.is_subset_of(cert.witness));
                for (const auto& d : *cert.all_min_sets) EXPECT_TRUE(forced.is_subset_of(d));
            }
        }
    }
}

TEST(PrivateNeighbors, FrozenExamples) {
    Graph p4 = testutil::path(4);
    EXPECT_EQ(private_neighbors(p4, 2, VertexSet::of(4, {0, 2, 3}), 0), VertexSet::of(4, {1}));
    EXPECT_TRUE(private_neighbors(p4, 2, VertexSet::full(4), 1).empty());
    Graph f2 = f_gadget(3);
    VertexSet d = VertexSet::of(7, {0, 3, 4, 5, 6});
    EXPECT_EQ(private_neighbors(f2, 3, d, 0), VertexSet::of(7, {1, 2}));
    EXPECT_THROW(private_neighbors(p4, 2, VertexSet::of(4, {0, 2, 3}), 1),
                 std::invalid_argument);
}

TEST(UniquenessReport, FrozenExamples) {
    Graph f2 = f_gadget(3);
    auto rep = uniqueness_report(f2, 3, VertexSet::of(7, {0, 3, 4, 5, 6}));
    EXPECT_TRUE(rep.unique);

    auto bad = uniqueness_report(testutil::path(4), 2, VertexSet::of(4, {0, 1, 3}));
    EXPECT_FALSE(bad.unique);
    EXPECT_EQ(bad.offending, std::optional<int>(1));

    Graph ds = testutil::double_star(2, 2);
    auto twin = uniqueness_report(ds, 3, VertexSet::of(6, {0, 2, 3, 4, 5}));
    EXPECT_FALSE(twin.unique);

    EXPECT_THROW(uniqueness_report(testutil::path(4), 2, VertexSet::of(4, {0, 1})),
                 std::invalid_argument);
    EXPECT_THROW(uniqueness_report(f2, 1, VertexSet::full(7)), std::invalid_argument);
}

// The criterion agrees with direct enumeration whenever D is a minimum set.
TEST(UniquenessReport, AgreesWithEnumeration) {
    for (int n = 2; n <= 10; ++n) {
        for (const Graph& t : enumerate_trees(n)) {
            for (int p = 2; p <= 3; ++p) {
                auto sets = oracle::all_minimum_sets(t, p);
                for (std::uint64_t mask : sets) {
                    auto rep = uniqueness_report(t, p, detail::from_mask(n, mask));
                    EXPECT_EQ(rep.unique, sets.size() == 1)
                        << "n=" << n << " p=" << p << " D=" << mask;
                }
            }
        }
    }
}

TEST(EllP, FrozenExamples) {
    EXPECT_EQ(ell_p(f_gadget(3), 3), 2);
    EXPECT_EQ(ell_p(testutil::star(3), 3), 1);  // the center
    // At t = p the gadget's center has exactly p dominators, so it is a
    // private neighbor too: the three tips plus the center.
    EXPECT_EQ(ell_p(ft_gadget(3, 3), 3), 4);
    EXPECT_EQ(ell_p(ft_gadget(3, 4), 3), 4);  // t = 4 > p: the four tips only
    EXPECT_THROW(ell_p(testutil::path(4), 2), std::invalid_argument);  // two minimum sets
}

// Count consistency: p * ell equals the total size of all private
// neighborhoods, over every small tree with a unique minimum set.
TEST(EllP, SumIdentity) {
    for (int n = 2; n <= 10; ++n) {
        for (const Graph& t : enumerate_trees(n)) {
            for (int p = 2; p <= 3; ++p) {
                auto sets = oracle::all_minimum_sets(t, p);
                if (sets.size() != 1) continue;
                VertexSet d = detail::from_mask(n, sets[0]);
                int sum = 0;
                for (int x : d.members()) sum += private_neighbors(t, p, d, x).size();
                EXPECT_EQ(sum % p, 0);
                EXPECT_EQ(ell_p(t, p), sum / p);
            }
        }
    }
}
