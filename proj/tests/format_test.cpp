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

#include "rtdkit/format.hpp"
#include "test_support.hpp"

using namespace rtdkit;

TEST(ParseClass, Basic)
{
    auto c = parse_class("2 3\nA 101\nB 010");
    EXPECT_EQ(c.size(), 2u);
    EXPECT_EQ(c.domain_size(), 3u);
    EXPECT_EQ(c.label(1), "B");
    EXPECT_EQ(c.row(0).to_string(), "101");
    EXPECT_EQ(c.domain()[2].label, "x2");
}

TEST(ParseClass, EmptyDomainSingleton)
{
    auto c = parse_class("1 0\nA ");
    EXPECT_EQ(c.size(), 1u);
    EXPECT_EQ(c.domain_size(), 0u);
    EXPECT_EQ(serialize_class(c), "1 0\nA\n");
}

TEST(ParseClass, DuplicateRowReportsLine)
{
    try {
        parse_class("2 2\nA 10\nB 10");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(ParseClass, LabelsCommentsAndBlankLines)
{
    auto c = parse_class("# a class\n2 2   # header\n\nlabels: p q\nA 10 # first\nB 01\n");
    EXPECT_EQ(c.domain()[0].label, "p");
    EXPECT_EQ(c.domain()[1].label, "q");
    EXPECT_EQ(serialize_class(c), "2 2\nlabels: p q\nA 10\nB 01\n");
}

TEST(ParseClass, Errors)
{
    auto line_of = [](const char* text) -> std::size_t {
        try {
            parse_class(text);
        } catch (const ParseError& e) {
            return e.line() ? e.line() : 999;
        }
        return 0;
    };
    EXPECT_EQ(line_of(""), 999u);
    EXPECT_EQ(line_of("2\nA 1"), 1u);
    EXPECT_EQ(line_of("x 2\nA 10"), 1u);
    EXPECT_EQ(line_of("1 2\nA 102"), 2u);
    EXPECT_EQ(line_of("1 2\nA 1"), 2u);
    EXPECT_EQ(line_of("2 2\nA 10\nA 01"), 3u);
    EXPECT_EQ(line_of("1 2\nA 10\nB 01"), 3u);
    EXPECT_EQ(line_of("2 2\nA 10"), 2u);
    EXPECT_EQ(line_of("1 2\nlabels: a\nA 10"), 2u);
    EXPECT_EQ(line_of("1 2\nlabels: a a\nA 10"), 2u);
    EXPECT_EQ(line_of("1 2\nA 10\nlabels: a b"), 3u);
    EXPECT_EQ(line_of("1 2\nA 10 extra"), 2u);
}

TEST(SerializeClass, RoundTripIsIdentity)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto c = oracle::random_class(rng, 12, 70);
        std::string text = serialize_class(c);
        EXPECT_EQ(parse_class(text), c);
        EXPECT_EQ(serialize_class(parse_class(text)), text);
        // No trailing whitespace on any line.
        EXPECT_EQ(text.find(" \n"), std::string::npos);
    }
}

TEST(Plan, ParseAndSerialize)
{
    auto plan = parse_plan("# plan\n100 0\n010 1\n000\n");
    ASSERT_EQ(plan.steps.size(), 3u);
    EXPECT_EQ(plan.steps[2].concept_label, "000");
    EXPECT_TRUE(plan.steps[2].points.empty());
    EXPECT_EQ(serialize_plan(plan), "100 0\n010 1\n000\n");
    EXPECT_THROW(parse_plan("a -1\n"), ParseError);
}
