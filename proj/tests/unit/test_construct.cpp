#include "nullcs/construct.hpp"
#include "nullcs/errors.hpp"

#include "support/oracle.hpp"

#include <gtest/gtest.h>

using namespace nullcs;

namespace {

std::vector<int> column(const QarySequence& s) {
    return std::vector<int>(s.entries().begin(), s.entries().end());
}

}  // namespace

TEST(ChenCs, BaseFunctionMatchesDefiningSum) {
    oracle::Gen gen(3);
    for (int trial = 0; trial < 40; ++trial) {
        const int q = gen.pick(std::vector<int>{2, 4, 6});
        const int m = gen.uniform(2, 6);
        const int v = gen.uniform(1, m - 1);
        const auto p = gen.theorem2(q, m, v);
        const auto g = theorem2_base(p);
        for (std::uint64_t i = 0; i < (1ULL << m); ++i)
            EXPECT_EQ(g.evaluate(i), oracle::path_form(q, m, p.pi.images(), p.lambda, p.mu, p.mu0, i));
    }
}

TEST(ChenCs, OffsetsAreHalfQ) {
    const auto p = Theorem2Params::zeros(4, 4, 2);
    const auto g = theorem2_functions(p);
    for (std::uint64_t i = 0; i < 16; ++i) {
        const int xm = oracle::bit(i, 4), x1 = oracle::bit(i, p.pi(1));
        EXPECT_EQ(g[1].evaluate(i), (g[0].evaluate(i) + 2 * xm) % 4);
        EXPECT_EQ(g[2].evaluate(i), (g[0].evaluate(i) + 2 * x1) % 4);
        EXPECT_EQ(g[3].evaluate(i), (g[0].evaluate(i) + 2 * (x1 + xm)) % 4);
    }
}

TEST(ChenCs, LengthAndProperty) {
    const auto p = Theorem2Params::zeros(2, 7, 1);
    const auto cs = chen_cs(p);
    EXPECT_EQ(cs.size(), 4u);
    EXPECT_EQ(cs.length(), 66u);
    EXPECT_TRUE(is_complementary_set(cs).ok);
}

TEST(ChenCs, FullLambdaGivesSameSet) {
    oracle::Gen gen(8);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = gen.uniform(3, 6);
        const int v = gen.uniform(1, m - 2);
        auto p = gen.theorem2(4, m, v, true);
        EXPECT_EQ(chen_cs(p), chen_cs(p.reduced()));
    }
}

TEST(ChenCs, ValidatesParameters) {
    auto p = Theorem2Params::zeros(2, 4, 1);
    p.q = 3;
    EXPECT_THROW(chen_cs(p), InputError);
    p = Theorem2Params::zeros(2, 4, 1);
    p.mu.pop_back();
    EXPECT_THROW(chen_cs(p), InputError);
    p = Theorem2Params::zeros(2, 4, 1);
    p.lambda = {0, 0};
    EXPECT_THROW(chen_cs(p), InputError);
    p = Theorem2Params::zeros(2, 4, 1);
    p.mu0 = 2;
    EXPECT_THROW(chen_cs(p), InputError);
    EXPECT_THROW(Theorem2Params::zeros(2, 4, 4), InputError);
}

TEST(MocsPair, AddedTerms) {
    const auto p = Theorem2Params::zeros(2, 5, 2);
    const auto g = theorem2_functions(p);
    const auto f = theorem3_functions(p);
    for (int k = 0; k < 4; ++k)
        for (std::uint64_t i = 0; i < 32; ++i)
            EXPECT_EQ(f[k].evaluate(i), (g[k].evaluate(i) + oracle::bit(i, 4) + oracle::bit(i, 5) * oracle::bit(i, 2)) % 2);
}

TEST(MocsPair, Range) {
    EXPECT_THROW(theorem3_functions(Theorem2Params::zeros(2, 2, 1)), InputError);
    EXPECT_THROW(theorem3_functions(Theorem2Params::zeros(2, 4, 3)), InputError);
    EXPECT_THROW(mocs_pair(Theorem2Params::zeros(2, 4, 3)), InputError);
    EXPECT_TRUE(is_mocs(mocs_pair(Theorem2Params::zeros(2, 3, 1))).ok);
}

TEST(MocsPair, EveryPermutationGivesMocs) {
    for (int m = 3; m <= 6; ++m)
        for (int v = 1; v < m - 1; ++v)
            for (const auto& pi : enumerate_constrained_permutations(m, v)) {
                auto p = Theorem2Params::zeros(2, m, v);
                p.pi = pi;
                const auto f = theorem3_functions(p);
                const auto g = theorem2_functions(p);
                const int last = pi(m - 1);
                for (std::uint64_t i = 0; i < (std::uint64_t{1} << m); ++i)
                    ASSERT_EQ(f[0].evaluate(i),
                              (g[0].evaluate(i) + oracle::bit(i, last) + oracle::bit(i, m) * oracle::bit(i, pi(v))) % 2);
                EXPECT_TRUE(is_mocs(mocs_pair(p)).ok) << "m=" << m << " v=" << v << " pi=" << ::testing::PrintToString(pi.images());
            }
}

TEST(Concat, LengthAndNullPlacement) {
    const auto p = Theorem2Params::zeros(2, 4, 1);
    const auto cs = concat_cs(p, 3);
    EXPECT_EQ(cs.length(), 2u * 10u + 3u);
    const auto pair = mocs_pair(p);
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t i = 0; i < 10; ++i) {
            EXPECT_EQ(cs[j][i], pair[0][j][i]);
            EXPECT_EQ(cs[j][13 + i], pair[1][j][i]);
        }
        for (std::size_t i = 10; i < 13; ++i) EXPECT_TRUE(cs[j].is_null(i));
    }
    const auto flipped = concat_cs(p, 3, HalfOrder::f_first);
    EXPECT_EQ(flipped[0][0], pair[1][0][0]);
    EXPECT_TRUE(is_complementary_set(flipped).ok);
    EXPECT_TRUE(is_complementary_set(cs).ok);
}

TEST(Concat, WithNullsJoinsAndChecks) {
    const auto s = concat_with_nulls(from_bipolar({1, -1}), 2, from_bipolar({-1}));
    EXPECT_EQ(column(s), (std::vector<int>{0, 1, -1, -1, 1}));
    EXPECT_THROW(concat_with_nulls(QarySequence(2, {0}), 0, QarySequence(4, {0})), InputError);
}

TEST(ZeroInsertion, PrintedFirstIteration) {
    const auto w = oracle::bipolar_family(oracle::example_w());
    const auto w1 = zero_insert_step(w, 1);
    EXPECT_EQ(w1, oracle::bipolar_family(oracle::example_w1()));
}

TEST(ZeroInsertion, PrintedTwoStepPlan) {
    const auto w = oracle::bipolar_family(oracle::example_w());
    const auto out = iterate(w, {1, 2});
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0], oracle::bipolar_set(oracle::example_cs20()));
    EXPECT_EQ(iterated_length(4, {1, 2}), 20u);
}

TEST(ZeroInsertion, OddFamilyDropsLastSet) {
    const auto seed = seed_ccc(4);
    const MocsFamily three({seed[0], seed[1], seed[2]});
    const auto out = zero_insert_step(three, 2);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0][0], concat_with_nulls(seed[0][0], 2, seed[1][0]));
}

TEST(ZeroInsertion, SizeChecks) {
    const auto seed = seed_ccc(4);
    EXPECT_THROW(zero_insert_step(MocsFamily({seed[0]}), 1), InputError);
    EXPECT_THROW(iterate(seed, {0, 0, 0}), InputError);
    EXPECT_NO_THROW(iterate(seed, {0, 0}));
    EXPECT_EQ(iterate(seed, {}), seed);
}

TEST(ZeroInsertion, LengthBookkeeping) {
    EXPECT_EQ(iterated_length(9, {}), 9u);
    EXPECT_EQ(iterated_length(4, {1, 2, 3}), 8u * 4u + 4u * 1u + 2u * 2u + 3u);
    EXPECT_EQ(inserted_null_count({1, 2, 3}), 4u + 4u + 3u);
}

TEST(Seed, CompleteComplementaryCode) {
    for (std::size_t n : {2u, 4u, 8u, 16u}) {
        const auto c = seed_ccc(n);
        EXPECT_EQ(c.size(), n);
        EXPECT_EQ(c.set_size(), n);
        EXPECT_EQ(c.length(), n);
        EXPECT_TRUE(is_mocs(c).ok) << n;
    }
    EXPECT_THROW(seed_ccc(3), InputError);
    EXPECT_THROW(seed_ccc(32), InputError);
}

// Random draws across both theorems.
TEST(ConstructProperty, ChenSetsAndPairs) {
    oracle::Gen gen(20260501);
    for (int trial = 0; trial < 120; ++trial) {
        const int q = gen.pick(std::vector<int>{2, 4, 6, 8});
        const int m = gen.uniform(3, 6);
        const auto p2 = gen.theorem2(q, m, gen.uniform(1, m - 1), gen.coin());
        EXPECT_TRUE(is_complementary_set(chen_cs(p2)).ok) << "q=" << q << " m=" << m << " v=" << p2.v;
        const auto p3 = gen.theorem2(q, m, gen.uniform(1, m - 2));
        const auto pair = mocs_pair(p3);
        EXPECT_TRUE(is_mocs(pair).ok) << "q=" << q << " m=" << m << " v=" << p3.v;
        EXPECT_TRUE(is_complementary_set(concat_cs(p3, static_cast<std::size_t>(gen.uniform(0, 9)))).ok);
    }
}

TEST(ConstructProperty, IteratedFamiliesStayOrthogonal) {
    oracle::Gen gen(4242);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = gen.pick(std::vector<std::size_t>{2, 4, 8});
        const auto seed = seed_ccc(n);
        int steps = 0;
        while ((std::size_t{1} << (steps + 1)) <= n) ++steps;
        steps = gen.uniform(0, steps);
        ZeroInsertionPlan plan;
        for (int s = 0; s < steps; ++s) plan.push_back(static_cast<std::size_t>(gen.uniform(0, 2 * static_cast<int>(n))));
        const auto out = iterate(seed, plan);
        EXPECT_EQ(out.length(), iterated_length(n, plan));
        EXPECT_EQ(out.size(), n >> plan.size());
        EXPECT_TRUE(is_mocs(out).ok);
        for (const auto& set : out) EXPECT_EQ(set[0].size() - set[0].energy(), inserted_null_count(plan));
    }
}
