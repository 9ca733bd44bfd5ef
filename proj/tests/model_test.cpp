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

#include <random>

#include "rtdkit/model.hpp"
#include "test_support.hpp"

using namespace rtdkit;

namespace {

Concept bits(const std::string& label, const std::string& s)
{
    return {label, BitVector::from_string(s)};
}

ConceptClass point_class()
{
    return ConceptClass::from_bitstrings({"100", "010", "001", "000"});
}

} // namespace

TEST(BitVector, StringRoundTripAndBitOps)
{
    auto v = BitVector::from_string("0110010");
    EXPECT_EQ(v.to_string(), "0110010");
    EXPECT_EQ(v.count(), 3u);
    EXPECT_EQ(v.highest(), 5u);
    EXPECT_EQ(v.indices(), (IndexSet{1, 2, 5}));
    EXPECT_TRUE(BitVector::ones(70).all());
    EXPECT_EQ(BitVector::ones(70).count(), 70u);
    auto f = BitVector(65).flip();
    EXPECT_EQ(f.count(), 65u);
    EXPECT_FALSE(BitVector(10).highest().has_value());
    EXPECT_THROW(BitVector::from_string("01x"), std::invalid_argument);
}

TEST(Restrict, DefinitionUnrolled)
{
    auto c = bits("c", "101");
    EXPECT_EQ(restrict(c, IndexSet{0, 2}), (Restriction{{0, true}, {2, true}}));
    EXPECT_TRUE(restrict(c, IndexSet{}).empty());
    auto d = bits("d", "0110");
    EXPECT_EQ(restrict(d, IndexSet{1, 2, 3}),
              (Restriction{{1, true}, {2, true}, {3, false}}));
}

TEST(Restrict, OutOfRangeIndexThrows)
{
    EXPECT_THROW(restrict(bits("c", "101"), IndexSet{3}), std::invalid_argument);
}

TEST(Restrict, CompositionProperty)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 40;
        BitVector v(n);
        for (std::size_t i = 0; i < n; ++i)
            v.set(i, rng() & 1u);
        Concept c{"c", v};
        IndexSet s, t;
        for (std::size_t i = 0; i < n; ++i) {
            if (rng() % 3 == 0)
                s.push_back(i);
            if (rng() % 3 == 0)
                t.push_back(i);
        }
        IndexSet u = s;
        u.insert(u.end(), t.begin(), t.end());
        Restriction whole = restrict(c, u);
        Restriction narrowed;
        for (auto [i, b] : whole)
            if (std::binary_search(s.begin(), s.end(), i))
                narrowed.emplace_back(i, b);
        EXPECT_EQ(narrowed, restrict(c, s));
    }
}

TEST(ConceptClass, RejectsDuplicateRows)
{
    EXPECT_THROW(ConceptClass::from_bitstrings({"10", "01", "10"}), std::invalid_argument);
    EXPECT_THROW(ConceptClass({"a", "b"}, {bits("A", "10"), bits("B", "10")}),
                 std::invalid_argument);
}

TEST(ConceptClass, RejectsDuplicateLabels)
{
    EXPECT_THROW(ConceptClass({"a", "b"}, {bits("A", "10"), bits("A", "01")}),
                 std::invalid_argument);
    EXPECT_THROW(ConceptClass({"a", "a"}, {bits("A", "10")}), std::invalid_argument);
}

TEST(ConceptClass, EmptyDomainAllowsOneConcept)
{
    ConceptClass one({}, {bits("A", "")});
    EXPECT_EQ(one.size(), 1u);
    EXPECT_THROW(ConceptClass({}, {bits("A", ""), bits("B", "")}), std::invalid_argument);
}

TEST(ConceptClass, RejectsLengthMismatchAndEmptyClass)
{
    EXPECT_THROW(ConceptClass({"a", "b"}, {bits("A", "101")}), std::invalid_argument);
    EXPECT_THROW(ConceptClass({"a"}, {}), std::invalid_argument);
}

TEST(IsTeachingSet, GadgetExamples)
{
    auto g = ConceptClass::from_bitstrings({"100", "010", "001"});
    EXPECT_TRUE(is_teaching_set(g.at(0), g, IndexSet{0}));
    // 001 agrees with 100 on index 1.
    EXPECT_FALSE(is_teaching_set(g.at(0), g, IndexSet{1}));
}

TEST(IsTeachingSet, SingletonNeedsNothing)
{
    auto one = ConceptClass::from_bitstrings({"0110"});
    EXPECT_TRUE(is_teaching_set(one.at(0), one, IndexSet{}));
}

TEST(IsTeachingSet, ForeignConceptThrows)
{
    auto g = ConceptClass::from_bitstrings({"100", "010"});
    EXPECT_THROW(is_teaching_set(bits("z", "111"), g, IndexSet{0}), std::invalid_argument);
}

TEST(IsTeachingSet, MonotoneInPointSet)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto klass = oracle::random_class(rng, 8, 7);
        std::size_t x = klass.domain_size();
        for (std::size_t c = 0; c < klass.size(); ++c) {
            IndexSet s, bigger;
            for (std::size_t i = 0; i < x; ++i) {
                bool in_s = rng() % 2 == 0;
                if (in_s)
                    s.push_back(i);
                if (in_s || rng() % 2 == 0)
                    bigger.push_back(i);
            }
            if (is_teaching_set(klass, c, s)) {
                EXPECT_TRUE(is_teaching_set(klass, c, bigger));
            }
        }
    }
}

TEST(CheckPlan, PointFunctionsFirst)
{
    auto klass = point_class();
    TeachingPlan plan{{{"100", {0}}, {"010", {1}}, {"001", {2}}, {"000", {}}}};
    EXPECT_EQ(check_plan(klass, plan), 1u);
}

TEST(CheckPlan, SingletonPlan)
{
    auto one = ConceptClass::from_bitstrings({"11"});
    EXPECT_EQ(check_plan(one, TeachingPlan{{{"11", {}}}}), 0u);
}

TEST(CheckPlan, AllZeroFirstIsRejectedWithWitness)
{
    auto klass = point_class();
    TeachingPlan plan{{{"000", {0}}, {"100", {0}}, {"010", {1}}, {"001", {2}}}};
    try {
        check_plan(klass, plan);
        FAIL() << "plan should be rejected";
    } catch (const InvalidPlan& e) {
        EXPECT_EQ(e.step(), 0u);
        EXPECT_EQ(e.concept_label(), "000");
        // Any later concept that is 0 at index 0 is a valid witness.
        EXPECT_TRUE(e.witness_label() == "010" || e.witness_label() == "001");
    }
}

TEST(CheckPlan, PermutingAnAcceptedPlanMayBreakIt)
{
    auto klass = point_class();
    TeachingPlan ok{{{"100", {0}}, {"010", {1}}, {"001", {2}}, {"000", {}}}};
    EXPECT_NO_THROW(check_plan(klass, ok));
    TeachingPlan swapped{{{"000", {}}, {"010", {1}}, {"001", {2}}, {"100", {0}}}};
    EXPECT_THROW(check_plan(klass, swapped), InvalidPlan);
}

TEST(CheckPlan, MalformedPlans)
{
    auto klass = point_class();
    TeachingPlan missing{{{"100", {0}}, {"010", {1}}, {"001", {2}}}};
    EXPECT_THROW(check_plan(klass, missing), MalformedPlan);
    TeachingPlan dup{{{"100", {0}}, {"100", {0}}, {"001", {2}}, {"000", {}}}};
    EXPECT_THROW(check_plan(klass, dup), MalformedPlan);
    TeachingPlan unknown{{{"100", {0}}, {"011", {1}}, {"001", {2}}, {"000", {}}}};
    EXPECT_THROW(check_plan(klass, unknown), MalformedPlan);
    TeachingPlan range{{{"100", {7}}, {"010", {1}}, {"001", {2}}, {"000", {}}}};
    EXPECT_THROW(check_plan(klass, range), MalformedPlan);
}

TEST(CheckPlan, AcceptsIffEverySuffixCheckPasses)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto klass = oracle::random_class(rng, 6, 5);
        auto order = oracle::iota_members(klass.size());
        std::shuffle(order.begin(), order.end(), rng);
        TeachingPlan plan;
        bool expect_ok = true;
        for (std::size_t s = 0; s < order.size(); ++s) {
            IndexSet pts;
            for (std::size_t i = 0; i < klass.domain_size(); ++i)
                if (rng() % 2)
                    pts.push_back(i);
            std::vector<std::size_t> suffix(order.begin() + static_cast<long>(s), order.end());
            expect_ok = expect_ok && is_teaching_set_within(klass, suffix, order[s], pts);
            plan.steps.push_back(PlanStep{std::string(klass.label(order[s])), pts});
        }
        if (expect_ok)
            EXPECT_EQ(check_plan(klass, plan), plan.width());
        else
            EXPECT_THROW(check_plan(klass, plan), InvalidPlan);
    }
}
