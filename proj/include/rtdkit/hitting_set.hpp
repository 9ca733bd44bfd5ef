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

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "rtdkit/bitvec.hpp"
#include "rtdkit/combinatorics.hpp"

namespace rtdkit {

/// Exact minimum hitting set over a universe {0..n-1}.
///
/// Among all minimum-size hitting sets the search returns the one that is
/// lexicographically smallest as a sorted index list. Sizes are tried in
/// increasing order and each size is explored as a depth-first walk over
/// strictly increasing index sequences, so the first leaf reached is the
/// lexicographic minimum. Two prunings keep that order intact:
///
///  - the next index may not exceed the smallest maximum element among the
///    sets still unhit, since every later index would miss that set;
///  - an index that hits no unhit set is skipped, since a minimum hitting
///    set never contains an element that is redundant for its prefix.
class HittingSetSearch
{
public:
    HittingSetSearch(std::span<const BitVector> sets, std::size_t universe)
      : _sets(sets), _universe(universe)
    {
        _max.reserve(sets.size());
        for (const auto& s : sets) {
            auto h = s.highest();
            _max.push_back(h ? *h : npos);
        }
    }

    /// Smallest lexicographically-first hitting set of size <= max_size.
    std::optional<IndexSet> minimum(std::size_t max_size) const
    {
        for (std::size_t s : _max)
            if (s == npos)
                return std::nullopt; // empty set: nothing hits it
        for (std::size_t size = 0; size <= max_size && size <= _universe; ++size) {
            std::vector<std::size_t> unhit(_sets.size());
            for (std::size_t i = 0; i < unhit.size(); ++i)
                unhit[i] = i;
            IndexSet chosen;
            chosen.reserve(size);
            if (dfs(0, size, unhit, chosen))
                return chosen;
        }
        return std::nullopt;
    }

private:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    bool dfs(std::size_t start, std::size_t remaining,
             const std::vector<std::size_t>& unhit, IndexSet& chosen) const
    {
        if (unhit.empty()) {
            if (_universe - start < remaining)
                return false;
            for (std::size_t i = 0; i < remaining; ++i)
                chosen.push_back(start + i);
            return true;
        }
        if (remaining == 0)
            return false;

        std::size_t bound = npos;
        for (std::size_t s : unhit)
            bound = std::min(bound, _max[s]);
        if (bound < start)
            return false;

        std::vector<std::size_t> next;
        next.reserve(unhit.size());
        for (std::size_t j = start; j <= bound && j + remaining <= _universe; ++j) {
            next.clear();
            for (std::size_t s : unhit)
                if (!_sets[s].test(j))
                    next.push_back(s);
            if (next.size() == unhit.size())
                continue;
            chosen.push_back(j);
            if (dfs(j + 1, remaining - 1, next, chosen))
                return true;
            chosen.pop_back();
        }
        return false;
    }

    std::span<const BitVector> _sets;
    std::size_t _universe;
    std::vector<std::size_t> _max;
};

} // namespace rtdkit
