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

// model.hpp -- concepts, concept classes and teaching plans

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rtdkit/bitvec.hpp"
#include "rtdkit/combinatorics.hpp"
#include "rtdkit/error.hpp"

namespace rtdkit {

struct DomainPoint
{
    std::size_t index;
    std::string label;
};

/// A boolean labeling of the domain; `values[i]` is the label of point i.
struct Concept
{
    std::string label;
    BitVector values;

    friend bool operator==(const Concept&, const Concept&) = default;
};

/// Point index -> bit pairs in increasing index order.
using Restriction = std::vector<std::pair<std::size_t, bool>>;

namespace detail {

inline bool valid_label(std::string_view s)
{
    if (s.empty())
        return false;
    for (char ch : s)
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '#')
            return false;
    return true;
}

inline IndexSet normalized(std::span<const std::size_t> points)
{
    IndexSet s(points.begin(), points.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

/// True iff `a` and `b` agree on every point selected by `mask`.
inline bool agree_on(const BitVector& a, const BitVector& b, const BitVector& mask)
{
    const auto& wa = a.words();
    const auto& wb = b.words();
    const auto& wm = mask.words();
    for (std::size_t i = 0; i < wm.size(); ++i)
        if ((wa[i] ^ wb[i]) & wm[i])
            return false;
    return true;
}

} // namespace detail

/// An explicitly given concept class: a 0/1 matrix with one row per concept
/// and one column per domain point.
///
/// Rows are pairwise distinct, concept labels are distinct, domain labels
/// are distinct. At least one concept is required, and an empty domain
/// admits exactly one. Immutable once built; safe for concurrent reads.
class ConceptClass
{
public:
    ConceptClass(std::vector<std::string> domain_labels,
                 std::vector<Concept> concepts)
      : _concepts(std::move(concepts))
    {
        if (_concepts.empty())
            throw std::invalid_argument("a concept class needs at least one concept");

        _domain.reserve(domain_labels.size());
        std::unordered_set<std::string> seen;
        for (std::size_t i = 0; i < domain_labels.size(); ++i) {
            if (!detail::valid_label(domain_labels[i]))
                throw std::invalid_argument("invalid domain label '" +
                                            domain_labels[i] + "'");
            if (!seen.insert(domain_labels[i]).second)
                throw std::invalid_argument("duplicate domain label '" +
                                            domain_labels[i] + "'");
            _domain.push_back({i, std::move(domain_labels[i])});
        }

        for (std::size_t i = 0; i < _concepts.size(); ++i) {
            const Concept& c = _concepts[i];
            if (!detail::valid_label(c.label))
                throw std::invalid_argument("invalid concept label '" + c.label + "'");
            if (c.values.size() != _domain.size())
                throw std::invalid_argument(
                    "concept '" + c.label + "' has " +
                    std::to_string(c.values.size()) + " values, domain has " +
                    std::to_string(_domain.size()));
            if (!_by_label.emplace(c.label, i).second)
                throw std::invalid_argument("duplicate concept label '" + c.label + "'");
            auto [it, fresh] = _by_row.emplace(c.values, i);
            if (!fresh)
                throw std::invalid_argument("concepts '" + _concepts[it->second].label +
                                            "' and '" + c.label +
                                            "' have identical values");
        }
    }

    /// Domain labels default to x0, x1, ...
    static std::vector<std::string> default_domain_labels(std::size_t n)
    {
        std::vector<std::string> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            out.push_back("x" + std::to_string(i));
        return out;
    }

    /// Builds a class from bit strings, labelling each concept by its string.
    static ConceptClass from_bitstrings(std::span<const std::string> rows)
    {
        if (rows.empty())
            throw std::invalid_argument("a concept class needs at least one concept");
        std::vector<Concept> cs;
        for (const auto& r : rows)
            cs.push_back({r, BitVector::from_string(r)});
        return ConceptClass(default_domain_labels(rows.front().size()), std::move(cs));
    }

    static ConceptClass from_bitstrings(std::initializer_list<std::string> rows)
    {
        std::vector<std::string> v(rows);
        return from_bitstrings(std::span<const std::string>(v));
    }

    std::size_t size() const noexcept { return _concepts.size(); }
    std::size_t domain_size() const noexcept { return _domain.size(); }

    const std::vector<DomainPoint>& domain() const noexcept { return _domain; }
    const std::vector<Concept>& concepts() const noexcept { return _concepts; }

    const Concept& at(std::size_t i) const { return _concepts.at(i); }
    const BitVector& row(std::size_t i) const { return _concepts[i].values; }
    const std::string& label(std::size_t i) const { return _concepts[i].label; }

    std::optional<std::size_t> find(std::string_view label) const
    {
        auto it = _by_label.find(std::string(label));
        if (it == _by_label.end())
            return std::nullopt;
        return it->second;
    }

    std::optional<std::size_t> find_row(const BitVector& values) const
    {
        auto it = _by_row.find(values);
        if (it == _by_row.end())
            return std::nullopt;
        return it->second;
    }

    /// Index of the concept with this label; throws std::invalid_argument.
    std::size_t index_of(std::string_view label) const
    {
        if (auto i = find(label))
            return *i;
        throw std::invalid_argument("no concept labelled '" + std::string(label) + "'");
    }

    /// Index of the concept equal to `c` (by values); throws
    /// std::invalid_argument when `c` is not a member.
    std::size_t index_of(const Concept& c) const
    {
        if (auto i = find_row(c.values))
            return *i;
        throw std::invalid_argument("concept '" + c.label + "' is not in the class");
    }

    /// The class restricted to the given concept indices, in the given order.
    ConceptClass subclass(std::span<const std::size_t> members) const
    {
        std::vector<Concept> cs;
        cs.reserve(members.size());
        for (std::size_t i : members)
            cs.push_back(_concepts.at(i));
        return ConceptClass(domain_labels(), std::move(cs));
    }

    ConceptClass with_concept(Concept c) const
    {
        std::vector<Concept> cs = _concepts;
        cs.push_back(std::move(c));
        return ConceptClass(domain_labels(), std::move(cs));
    }

    std::vector<std::string> domain_labels() const
    {
        std::vector<std::string> out;
        out.reserve(_domain.size());
        for (const auto& d : _domain)
            out.push_back(d.label);
        return out;
    }

    /// Mask with the given point indices set; throws on out-of-range indices.
    BitVector mask(std::span<const std::size_t> points) const
    {
        BitVector m(_domain.size());
        for (std::size_t i : points) {
            if (i >= _domain.size())
                throw std::invalid_argument("point index " + std::to_string(i) +
                                            " out of range for domain of size " +
                                            std::to_string(_domain.size()));
            m.set(i);
        }
        return m;
    }

    friend bool operator==(const ConceptClass& a, const ConceptClass& b)
    {
        return a.domain_labels() == b.domain_labels() && a._concepts == b._concepts;
    }

private:
    std::vector<DomainPoint> _domain;
    std::vector<Concept> _concepts;
    std::unordered_map<std::string, std::size_t> _by_label;
    std::unordered_map<BitVector, std::size_t, BitVectorHash> _by_row;
};

/// Restriction of `c` to the points in `points`.
inline Restriction restrict(const Concept& c, std::span<const std::size_t> points)
{
    Restriction out;
    for (std::size_t i : detail::normalized(points)) {
        if (i >= c.values.size())
            throw std::invalid_argument("point index " + std::to_string(i) +
                                        " out of range for concept '" + c.label + "'");
        out.emplace_back(i, c.values[i]);
    }
    return out;
}

/// The first concept among `members` (other than `target`) that agrees with
/// `target` on every point in `points`, or nullopt if `points` teaches
/// `target` against `members`.
inline std::optional<std::size_t> first_conflict(const ConceptClass& klass,
                                                 std::span<const std::size_t> members,
                                                 std::size_t target,
                                                 std::span<const std::size_t> points)
{
    BitVector m = klass.mask(points);
    const BitVector& t = klass.row(target);
    for (std::size_t j : members)
        if (j != target && detail::agree_on(t, klass.row(j), m))
            return j;
    return std::nullopt;
}

/// True iff `points` is a teaching set of concept `target` against the
/// subclass `members` (which is expected to contain `target`).
inline bool is_teaching_set_within(const ConceptClass& klass,
                                   std::span<const std::size_t> members,
                                   std::size_t target,
                                   std::span<const std::size_t> points)
{
    return !first_conflict(klass, members, target, points).has_value();
}

inline std::vector<std::size_t> all_members(const ConceptClass& klass)
{
    std::vector<std::size_t> v(klass.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = i;
    return v;
}

inline bool is_teaching_set(const ConceptClass& klass, std::size_t target,
                            std::span<const std::size_t> points)
{
    if (target >= klass.size())
        throw std::invalid_argument("concept index out of range");
    auto members = all_members(klass);
    return is_teaching_set_within(klass, members, target, points);
}

/// Throws std::invalid_argument when `c` is not a member of `klass`.
inline bool is_teaching_set(const Concept& c, const ConceptClass& klass,
                            std::span<const std::size_t> points)
{
    return is_teaching_set(klass, klass.index_of(c), points);
}

struct PlanStep
{
    std::string concept_label;
    IndexSet points;

    friend bool operator==(const PlanStep&, const PlanStep&) = default;
};

/// Ordered (concept, point set) steps. Each step's set must separate its
/// concept from every concept taught at that step or later.
struct TeachingPlan
{
    std::vector<PlanStep> steps;

    /// Largest point-set size (the plan's cost); 0 for an empty plan.
    std::size_t width() const noexcept
    {
        std::size_t w = 0;
        for (const auto& s : steps)
            w = std::max(w, s.points.size());
        return w;
    }

    friend bool operator==(const TeachingPlan&, const TeachingPlan&) = default;
};

/// Validates `plan` against `klass` and returns its width.
///
/// Throws MalformedPlan if the steps are not a permutation of the class's
/// concepts (or a point index is out of range or repeated), and InvalidPlan
/// naming the first step whose set fails against the untaught suffix.
inline std::size_t check_plan(const ConceptClass& klass, const TeachingPlan& plan)
{
    if (plan.steps.size() != klass.size())
        throw MalformedPlan("plan has " + std::to_string(plan.steps.size()) +
                            " steps, class has " + std::to_string(klass.size()) +
                            " concepts");
    std::vector<std::size_t> order;
    order.reserve(plan.steps.size());
    std::vector<bool> used(klass.size(), false);
    for (const auto& step : plan.steps) {
        auto idx = klass.find(step.concept_label);
        if (!idx)
            throw MalformedPlan("plan names unknown concept '" + step.concept_label + "'");
        if (used[*idx])
            throw MalformedPlan("plan lists concept '" + step.concept_label + "' twice");
        used[*idx] = true;
        for (std::size_t p : step.points)
            if (p >= klass.domain_size())
                throw MalformedPlan("plan step for '" + step.concept_label +
                                    "' uses out-of-range point " + std::to_string(p));
        if (detail::normalized(step.points).size() != step.points.size())
            throw MalformedPlan("plan step for '" + step.concept_label +
                                "' repeats a point");
        order.push_back(*idx);
    }

    for (std::size_t s = 0; s < order.size(); ++s) {
        std::span<const std::size_t> suffix(order.data() + s, order.size() - s);
        if (auto bad = first_conflict(klass, suffix, order[s], plan.steps[s].points))
            throw InvalidPlan(s, klass.label(order[s]), klass.label(*bad));
    }
    return plan.width();
}

} // namespace rtdkit
