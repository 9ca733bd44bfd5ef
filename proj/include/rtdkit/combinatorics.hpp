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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace rtdkit {

/// Sorted list of domain point (or vertex) indices.
using IndexSet = std::vector<std::size_t>;

/// Exact binomial coefficient; throws std::overflow_error past 64 bits.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        std::uint64_t num = n - k + i;
        std::uint64_t g = std::gcd(r, i);
        std::uint64_t rr = r / g;
        std::uint64_t den = i / g;
        std::uint64_t nn = num / den;
        if (rr > std::numeric_limits<std::uint64_t>::max() / nn)
            throw std::overflow_error("binomial coefficient overflows 64 bits");
        r = rr * nn;
    }
    return r;
}

/// ceil(log2(n)) for n >= 1; 0 for n <= 1.
constexpr std::size_t ceil_log2(std::size_t n) noexcept
{
    return n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1));
}

/// Advances `comb` (a strictly increasing k-subset of {0..n-1}) to the next
/// subset in lexicographic order. Returns false once the last is passed.
inline bool next_combination(IndexSet& comb, std::size_t n)
{
    std::size_t k = comb.size();
    for (std::size_t i = k; i-- > 0;) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j)
                comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Visits every k-subset of {0..n-1} in lexicographic order. `f` returns
/// true to stop early; the function then returns true as well.
template <class F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f)
{
    if (k > n)
        return false;
    IndexSet comb(k);
    std::iota(comb.begin(), comb.end(), std::size_t{0});
    do {
        if (f(static_cast<const IndexSet&>(comb)))
            return true;
    } while (next_combination(comb, n));
    return false;
}

} // namespace rtdkit
