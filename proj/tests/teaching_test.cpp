// Copyright 2026 The rtdkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <future>
#include <random>

#include "rtdkit/gadget.hpp"
#include "rtdkit/teaching.hpp"
#include "test_support.hpp"

using namespace rtdkit;

namespace {

ConceptClass point_class()
{
    return ConceptClass::from_bitstrings({"100", "010", "001", "000"});
}

ConceptClass hypercube(std::size_t n)
{
    std::vector<std::string> rows;
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
        std::string r(n, '0');
        for (std::size_t i = 0; i < n; ++i)
            if (m >> i & 1u)
                r[i] = '1';
        rows.push_back(r);
    }
    return ConceptClass::from_bitstrings(std::span<const std::string>(rows));
}

/// Gadget k=1 with the all-one concept listed first.
ConceptClass gadget1_with_ones()
{
    std::vector<Concept> cs;
    cs.push_back(Concept{"ones", BitVector::ones(3)});
    auto g = build_gadget(1);
    for (const auto& c : g.klass.concepts())
        cs.push_back(c);
    return ConceptClass(ConceptClass::default_domain_labels(3), std::move(cs));
}

/// Strip a uniformly random qualifying concept each round.
bool random_order_decision(const ConceptClass& klass, std::size_t k, std::mt19937_64& rng)
{
    auto remaining = oracle::iota_members(klass.size());
    while (!remaining.empty()) {
        std::vector<std::size_t> ok;
        for (std::size_t pos = 0; pos < remaining.size(); ++pos)
            if (teaching_set_within(klass, remaining, remaining[pos], k))
                ok.push_back(pos);
        if (ok.empty())
            return false;
        remaining.erase(remaining.begin() + static_cast<long>(ok[rng() % ok.size()]));
    }
    return true;
}

} // namespace

TEST(HittingSet, LexFirstMinimum)
{
    std::vector<BitVector> sets{BitVector::from_string("0110"), BitVector::from_string("0011"),
                                BitVector::from_string("1001")};
    auto r = HittingSetSearch(sets, 4).minimum(4);
    ASSERT_TRUE(r);
    // No single point hits all three; {0,2} is the first size-2 hitting set.
    EXPECT_EQ(*r, (IndexSet{0, 2}));
    EXPECT_FALSE(HittingSetSearch(sets, 4).minimum(1));
}

TEST(HittingSet, EmptySetIsUnhittable)
{
    std::vector<BitVector> sets{BitVector(3)};
    EXPECT_FALSE(HittingSetSearch(sets, 3).minimum(3));
    EXPECT_EQ(HittingSetSearch({}, 3).minimum(3), IndexSet{});
}

TEST(MinTeachingSet, GadgetK2)
{
    auto g = build_gadget(2);
    auto r = min_teaching_set(g.klass.at(g.klass.index_of("11000")), g.klass);
    EXPECT_EQ(r.size, 2u);
    EXPECT_EQ(r.witness, (IndexSet{0, 1}));
}

TEST(MinTeachingSet, SingletonAndAllZero)
{
    auto one = ConceptClass::from_bitstrings({"101"});
    EXPECT_EQ(min_teaching_set(one, 0).size, 0u);
    EXPECT_TRUE(min_teaching_set(one, 0).witness.empty());

    auto pc = point_class();
    auto r = min_teaching_set(pc, pc.index_of("000"));
    EXPECT_EQ(r.size, 3u);
    EXPECT_EQ(r.witness, (IndexSet{0, 1, 2}));
}

TEST(MinTeachingSet, ForeignConceptThrows)
{
    auto pc = point_class();
    EXPECT_THROW(min_teaching_set(Concept{"x", BitVector::from_string("111")}, pc),
                 std::invalid_argument);
}

TEST(MinTeachingSet, EmptyDomain)
{
    ConceptClass c({}, {Concept{"A", BitVector()}});
    EXPECT_EQ(min_teaching_set(c, 0).size, 0u);
    EXPECT_EQ(rtd(c).value, 0u);
}

TEST(MinTeachingSet, MatchesBruteForceIncludingTieBreak)
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        auto klass = oracle::random_class(rng, 12, 9);
        auto m = oracle::to_matrix(klass);
        auto mem = oracle::iota_members(klass.size());
        for (std::size_t c = 0; c < klass.size(); ++c) {
            auto want = oracle::brute_ts(m, mem, c);
            auto got = min_teaching_set(klass, c);
            ASSERT_EQ(got.size, want.size);
            ASSERT_EQ(got.witness, want.witness);
            ASSERT_TRUE(is_teaching_set(klass, c, got.witness));
        }
    }
}

TEST(TeachingDim, Examples)
{
    auto td = teaching_dim(point_class());
    EXPECT_EQ(td.value, 3u);
    EXPECT_EQ(td.label, "000");

    auto g = build_gadget(2);
    auto tg = teaching_dim(g.klass);
    EXPECT_EQ(tg.value, 2u);
    EXPECT_EQ(tg.label, g.klass.label(0));

    EXPECT_EQ(teaching_dim(hypercube(3)).value, 3u);
}

TEST(TdMin, Examples)
{
    auto t = td_min(point_class());
    EXPECT_EQ(t.value, 1u);
    EXPECT_EQ(t.label, "100");

    auto g1 = td_min(gadget1_with_ones());
    EXPECT_EQ(g1.value, 2u);
    EXPECT_EQ(g1.label, "ones");

    auto one = ConceptClass::from_bitstrings({"01"});
    EXPECT_EQ(td_min(one).value, 0u);
    EXPECT_EQ(td_min(one).label, "01");
}

TEST(RtdDecision, Examples)
{
    auto pc = point_class();
    auto d = rtd_decision(pc, 1);
    ASSERT_TRUE(d.accepted);
    EXPECT_EQ(check_plan(pc, d.plan), 1u);

    EXPECT_FALSE(rtd_decision(gadget1_with_ones(), 1).accepted);

    auto one = ConceptClass::from_bitstrings({"110"});
    auto d0 = rtd_decision(one, 0);
    ASSERT_TRUE(d0.accepted);
    EXPECT_EQ(check_plan(one, d0.plan), 0u);
}

TEST(Rtd, Examples)
{
    auto pc = point_class();
    auto r = rtd(pc);
    EXPECT_EQ(r.value, 1u);
    EXPECT_EQ(check_plan(pc, r.plan), 1u);

    EXPECT_EQ(rtd(build_gadget(1).klass).value, 1u);
    EXPECT_EQ(rtd(ConceptClass::from_bitstrings({"1"})).value, 0u);
}

TEST(RtdOracle, Examples)
{
    EXPECT_EQ(rtd_oracle_subsets(gadget1_with_ones()), 2u);
    EXPECT_EQ(rtd_oracle_subsets(point_class()), 1u);
    EXPECT_EQ(rtd_oracle_subsets(ConceptClass::from_bitstrings({"0"})), 0u);
}

TEST(RtdOracle, CapacityError)
{
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < 20; ++i) {
        std::string r(5, '0');
        for (std::size_t b = 0; b < 5; ++b)
            r[b] = (i >> b & 1u) ? '1' : '0';
        rows.push_back(r);
    }
    auto big = ConceptClass::from_bitstrings(std::span<const std::string>(rows));
    EXPECT_THROW(rtd_oracle_subsets(big), CapacityError);
    EXPECT_NO_THROW(rtd_oracle_subsets(ConceptClass::from_bitstrings({"0", "1"}), 2));
}

TEST(Rtd, AgreesWithBruteForceAndOracle)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        auto klass = oracle::random_class(rng, 9, 6);
        std::size_t brute = oracle::brute_rtd(oracle::to_matrix(klass));
        auto r = rtd(klass);
        ASSERT_EQ(r.value, brute) << serialize_class(klass);
        ASSERT_EQ(rtd_oracle_subsets(klass), brute);
        ASSERT_EQ(check_plan(klass, r.plan), r.value);
    }
}

TEST(Rtd, InvariantsOnRandomClasses)
{
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        auto klass = oracle::random_class(rng, 10, 8);
        auto r = rtd(klass);
        EXPECT_LE(r.value, teaching_dim(klass).value);
        EXPECT_LE(r.value, ceil_log2(klass.size()));
        // Witness validity for every k at or above the RTD.
        for (std::size_t k = r.value; k <= r.value + 1; ++k) {
            auto d = rtd_decision(klass, k);
            ASSERT_TRUE(d.accepted);
            EXPECT_LE(check_plan(klass, d.plan), k);
        }
        if (r.value > 0) {
            EXPECT_FALSE(rtd_decision(klass, r.value - 1).accepted);
        }
    }
}

TEST(Teaching, SubclassMonotonicity)
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        auto klass = oracle::random_class(rng, 10, 7);
        std::vector<std::size_t> sub;
        for (std::size_t i = 0; i < klass.size(); ++i)
            if (rng() % 2)
                sub.push_back(i);
        for (std::size_t c : sub)
            EXPECT_LE(min_teaching_set_within(klass, sub, c).size,
                      min_teaching_set(klass, c).size);
    }
}

TEST(RtdDecision, OutcomeIndependentOfStripOrder)
{
    std::mt19937_64 rng(31337);
    for (int cls = 0; cls < 50; ++cls) {
        auto klass = oracle::random_class(rng, 10, 7);
        for (std::size_t k = 0; k <= 3; ++k) {
            bool expected = rtd_decision(klass, k).accepted;
            for (int order = 0; order < 100; ++order)
                ASSERT_EQ(random_order_decision(klass, k, rng), expected);
        }
    }
}

TEST(Teaching, ConcurrentReadOnlyUse)
{
    auto g = build_gadget(3).klass;
    auto expected = rtd(g);
    std::vector<std::future<RtdResult>> futures;
    for (int t = 0; t < 4; ++t)
        futures.push_back(std::async(std::launch::async, [&g] { return rtd(g); }));
    for (auto& f : futures) {
        auto r = f.get();
        EXPECT_EQ(r.value, expected.value);
        EXPECT_EQ(r.plan, expected.plan);
    }
}
