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

// format.hpp -- text formats for concept classes and teaching plans
//
// Class format:
//
//     <numConcepts> <numPoints>
//     labels: <p0> <p1> ...          (optional)
//     <label> <bitstring>            (one per concept)
//
// Plan format, one step per line in teaching order:
//
//     <concept-label> <point-index> <point-index> ...
//
// Tokens are whitespace separated, '#' starts a comment that runs to the
// end of the line, blank lines are ignored.

#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rtdkit/error.hpp"
#include "rtdkit/model.hpp"

namespace rtdkit {

namespace detail {

struct TextLine
{
    std::size_t number;
    std::vector<std::string_view> tokens;
};

/// Splits text into non-empty, comment-stripped, tokenized lines.
inline std::vector<TextLine> tokenize_lines(std::string_view text)
{
    std::vector<TextLine> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        TextLine tl{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                ++j;
            if (j > i)
                tl.tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (!tl.tokens.empty())
            out.push_back(std::move(tl));
        if (end == text.size())
            break;
        pos = end + 1;
    }
    return out;
}

inline std::size_t parse_count(std::string_view tok, std::size_t line, const char* what)
{
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("expected a non-negative integer for ") +
                                   what + ", got '" + std::string(tok) + "'");
    return v;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace detail

inline ConceptClass parse_class(std::string_view text)
{
    auto lines = detail::tokenize_lines(text);
    if (lines.empty())
        throw ParseError(0, "empty input: missing '<numConcepts> <numPoints>' header");

    const auto& header = lines.front();
    if (header.tokens.size() != 2)
        throw ParseError(header.number, "header must be '<numConcepts> <numPoints>'");
    std::size_t num_concepts = detail::parse_count(header.tokens[0], header.number, "numConcepts");
    std::size_t num_points = detail::parse_count(header.tokens[1], header.number, "numPoints");

    std::size_t next = 1;
    std::vector<std::string> domain_labels;
    if (next < lines.size() && lines[next].tokens.front() == "labels:") {
        const auto& ll = lines[next];
        if (ll.tokens.size() - 1 != num_points)
            throw ParseError(ll.number, "labels line names " +
                                            std::to_string(ll.tokens.size() - 1) +
                                            " points, header says " +
                                            std::to_string(num_points));
        std::unordered_set<std::string_view> seen;
        for (std::size_t i = 1; i < ll.tokens.size(); ++i) {
            if (!seen.insert(ll.tokens[i]).second)
                throw ParseError(ll.number, "duplicate domain label '" +
                                                std::string(ll.tokens[i]) + "'");
            domain_labels.emplace_back(ll.tokens[i]);
        }
        ++next;
    } else {
        domain_labels = ConceptClass::default_domain_labels(num_points);
    }

    std::vector<Concept> concepts;
    std::unordered_map<std::string, std::size_t> label_line;
    std::unordered_map<std::string, std::size_t> row_line;
    for (; next < lines.size(); ++next) {
        const auto& l = lines[next];
        if (concepts.size() == num_concepts)
            throw ParseError(l.number, "more concept rows than the header's " +
                                           std::to_string(num_concepts));
        std::size_t expected = num_points == 0 ? 1 : 2;
        if (l.tokens.size() != expected)
            throw ParseError(l.number, num_points == 0
                                           ? "row must be '<label>' for an empty domain"
                                           : "row must be '<label> <bitstring>'");
        std::string label(l.tokens[0]);
        std::string bits = num_points == 0 ? std::string() : std::string(l.tokens[1]);
        if (label == "labels:")
            throw ParseError(l.number, "labels line must directly follow the header");
        if (bits.size() != num_points)
            throw ParseError(l.number, "bitstring has length " + std::to_string(bits.size()) +
                                           ", expected " + std::to_string(num_points));
        if (bits.find_first_not_of("01") != std::string::npos)
            throw ParseError(l.number, "bitstring may only contain 0 and 1");
        if (auto [it, fresh] = label_line.emplace(label, l.number); !fresh)
            throw ParseError(l.number, "duplicate concept label '" + label +
                                           "' (first on line " + std::to_string(it->second) + ")");
        if (auto [it, fresh] = row_line.emplace(bits, l.number); !fresh)
            throw ParseError(l.number, "duplicate row " + bits + " (first on line " +
                                           std::to_string(it->second) + ")");
        concepts.push_back({std::move(label), BitVector::from_string(bits)});
    }
    if (concepts.size() != num_concepts)
        throw ParseError(lines.back().number, "expected " + std::to_string(num_concepts) +
                                                  " concept rows, found " +
                                                  std::to_string(concepts.size()));
    try {
        return ConceptClass(std::move(domain_labels), std::move(concepts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

/// Canonical text form. The labels line is emitted only when the domain
/// labels differ from the x0, x1, ... defaults.
inline std::string serialize_class(const ConceptClass& klass)
{
    std::string out = std::to_string(klass.size()) + " " +
                      std::to_string(klass.domain_size()) + "\n";
    auto labels = klass.domain_labels();
    if (labels != ConceptClass::default_domain_labels(labels.size())) {
        out += "labels:";
        for (const auto& l : labels)
            out += " " + l;
        out += "\n";
    }
    for (const auto& c : klass.concepts()) {
        out += c.label;
        if (klass.domain_size() > 0)
            out += " " + c.values.to_string();
        out += "\n";
    }
    return out;
}

inline ConceptClass read_class_file(const std::string& path)
{
    return parse_class(detail::read_file(path));
}

inline TeachingPlan parse_plan(std::string_view text)
{
    TeachingPlan plan;
    for (const auto& l : detail::tokenize_lines(text)) {
        PlanStep step{std::string(l.tokens[0]), {}};
        for (std::size_t i = 1; i < l.tokens.size(); ++i)
            step.points.push_back(detail::parse_count(l.tokens[i], l.number, "point index"));
        plan.steps.push_back(std::move(step));
    }
    return plan;
}

inline std::string serialize_plan(const TeachingPlan& plan)
{
    std::string out;
    for (const auto& s : plan.steps) {
        out += s.concept_label;
        for (std::size_t p : s.points)
            out += " " + std::to_string(p);
        out += "\n";
    }
    return out;
}

inline TeachingPlan read_plan_file(const std::string& path)
{
    return parse_plan(detail::read_file(path));
}

} // namespace rtdkit
