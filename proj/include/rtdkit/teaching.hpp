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

// teaching.hpp -- exact teaching sets, TD, TD_min and recursive teaching
// dimension of explicitly given concept classes.
//
// A set S teaches concept c against a class iff S hits the difference set
// {x : c(x) != c'(x)} of every other member c'. All searches here are exact
// minimum hitting set searches over those difference sets.
//
// Plan width is measured as the cardinality of each step's point set.

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtdkit/combinatorics.hpp"
#include "rtdkit/error.hpp"
#include "rtdkit/hitting_set.hpp"
#include "rtdkit/model.hpp"

namespace rtdkit {

/// Minimum teaching set: its size and the lexicographically first witness.
struct TsResult
{
    std::size_t size = 0;
    IndexSet witness;
};

/// A maximum or minimum of TS over a class, with the first concept (in
/// class order) attaining it.
struct DimResult
{
    std::size_t value = 0;
    std::size_t index = 0;
    std::string label;
};

struct DecisionResult
{
    bool accepted = false;
    /// Steps taught so far; the full plan when `accepted`.
    TeachingPlan plan;
};

struct RtdResult
{
    std::size_t value = 0;
    TeachingPlan plan;
};

/// Default cap on the class size accepted by rtd_oracle_subsets.
inline constexpr std::size_t default_oracle_cap = 15;

/// Smallest teaching set of `target` against `members` with at most
/// `max_size` points, or nullopt if none exists.
inline std::optional<IndexSet> teaching_set_within(const ConceptClass& klass,
                                                   std::span<const std::size_t> members,
                                                   std::size_t target,
                                                   std::size_t max_size)
{
    std::vector<BitVector> diffs;
    diffs.reserve(members.size());
    const BitVector& t = klass.row(target);
    for (std::size_t j : members)
        if (j != target)
            diffs.push_back(t ^ klass.row(j));
    return HittingSetSearch(diffs, klass.domain_size()).minimum(max_size);
}

inline TsResult min_teaching_set_within(const ConceptClass& klass,
                                        std::span<const std::size_t> members,
                                        std::size_t target)
{
    // Rows are distinct, so the whole domain always teaches.
    auto w = teaching_set_within(klass, members, target, klass.domain_size());
    if (!w)
        throw std::logic_error("no teaching set found: class rows are not distinct");
    return {w->size(), std::move(*w)};
}

inline TsResult min_teaching_set(const ConceptClass& klass, std::size_t target)
{
    if (target >= klass.size())
        throw std::invalid_argument("concept index out of range");
    auto members = all_members(klass);
    return min_teaching_set_within(klass, members, target);
}

/// Throws std::invalid_argument when `c` is not a member of `klass`.
inline TsResult min_teaching_set(const Concept& c, const ConceptClass& klass)
{
    return min_teaching_set(klass, klass.index_of(c));
}

inline DimResult teaching_dim(const ConceptClass& klass)
{
    DimResult best;
    auto members = all_members(klass);
    for (std::size_t i = 0; i < klass.size(); ++i) {
        std::size_t s = min_teaching_set_within(klass, members, i).size;
        if (i == 0 || s > best.value)
            best = {s, i, klass.label(i)};
    }
    return best;
}

inline DimResult td_min_within(const ConceptClass& klass,
                               std::span<const std::size_t> members)
{
    if (members.empty())
        throw std::invalid_argument("TD_min of an empty subclass is undefined");
    DimResult best{std::numeric_limits<std::size_t>::max(), 0, {}};
    for (std::size_t i : members) {
        if (best.value == 0)
            break;
        // Only an improvement matters, so bound the search below the best so far.
        auto w = teaching_set_within(klass, members, i,
                                     std::min(best.value - 1, klass.domain_size()));
        if (w)
            best = {w->size(), i, klass.label(i)};
    }
    return best;
}

inline DimResult td_min(const ConceptClass& klass)
{
    auto members = all_members(klass);
    return td_min_within(klass, members);
}

/// Decides RTD(klass) <= k by stripping, one at a time, the first concept
/// in class order whose teaching set against the remaining concepts has at
/// most k points.
inline DecisionResult rtd_decision(const ConceptClass& klass, std::size_t k)
{
    DecisionResult result;
    std::vector<std::size_t> remaining = all_members(klass);
    while (!remaining.empty()) {
        bool stripped = false;
        for (std::size_t pos = 0; pos < remaining.size(); ++pos) {
            std::size_t i = remaining[pos];
            if (auto w = teaching_set_within(klass, remaining, i, k)) {
                result.plan.steps.push_back({klass.label(i), std::move(*w)});
                remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pos));
                stripped = true;
                break;
            }
        }
        if (!stripped)
            return result;
    }
    result.accepted = true;
    return result;
}

/// Exact RTD with a witness plan: the smallest k with an accepting
/// decision. Never probes above ceil(log2 |C|).
inline RtdResult rtd(const ConceptClass& klass)
{
    std::size_t bound = ceil_log2(klass.size());
    for (std::size_t k = 0; k <= bound; ++k) {
        auto d = rtd_decision(klass, k);
        if (d.accepted)
            return {k, std::move(d.plan)};
    }
    throw std::logic_error("RTD exceeds ceil(log2 |C|); the decision procedure is broken");
}

/// RTD as the maximum TD_min over all nonempty subclasses.
///
/// Enumerates all 2^|C| - 1 subclasses and decides each one by plain
/// subset enumeration (independent of the hitting-set search used by
/// rtd()). Throws CapacityError when |C| exceeds `cap`.
inline std::size_t rtd_oracle_subsets(const ConceptClass& klass,
                                      std::size_t cap = default_oracle_cap)
{
    if (klass.size() > cap)
        throw CapacityError("subset oracle is capped at " + std::to_string(cap) +
                            " concepts, class has " + std::to_string(klass.size()));
    if (cap >= 63)
        throw CapacityError("subset oracle cap must stay below 63");

    const std::size_t n = klass.size();
    const std::size_t x = klass.domain_size();
    std::size_t best = 0;
    std::vector<std::size_t> members;

    // True iff some member has a teaching set of size <= limit.
    auto some_member_within = [&](std::size_t limit) {
        for (std::size_t size = 0; size <= std::min(limit, x); ++size) {
            bool found = for_each_combination(x, size, [&](const IndexSet& s) {
                for (std::size_t i : members)
                    if (is_teaching_set_within(klass, members, i, s))
                        return true;
                return false;
            });
            if (found)
                return true;
        }
        return false;
    };

    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        members.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u)
                members.push_back(i);
        // TD_min(subclass) > best iff no member is taught with best points.
        while (!some_member_within(best))
            ++best;
    }
    return best;
}

} // namespace rtdkit
