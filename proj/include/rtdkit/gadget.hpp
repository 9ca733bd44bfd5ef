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

// gadget.hpp -- the weight-k gadget class over a (2k+1)-point domain
//
// The gadget H_k holds every labeling of Z = {z0..z_{2k}} with exactly k
// ones. It has three properties the reduction relies on:
//
//   1. every h has TS(h, H_k) = k;
//   2. every k-point teaching set S of h shows only ones (h|S = 1);
//   3. adding the all-one concept pushes every TS(h, .) to at least k+1.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtdkit/combinatorics.hpp"
#include "rtdkit/model.hpp"
#include "rtdkit/teaching.hpp"

namespace rtdkit {

inline constexpr std::size_t default_gadget_cap = 6;

struct Gadget
{
    std::size_t k;
    std::size_t p; ///< |Z| = 2k + 1
    std::size_t q; ///< |H| = C(2k+1, k)
    ConceptClass klass;

    /// Support (ones) of gadget concept `h`; this is its canonical k-point
    /// teaching set.
    IndexSet support(std::size_t h) const { return klass.row(h).indices(); }
};

/// Builds H_k. Concepts are ordered by their supports in lexicographic
/// order (100, 010, 001 for k = 1) and labelled by their bit strings;
/// domain labels are z0..z{p-1}.
inline Gadget build_gadget(std::size_t k, std::size_t cap = default_gadget_cap)
{
    if (k == 0)
        throw std::invalid_argument("gadget requires k >= 1");
    if (k > cap)
        throw std::invalid_argument("gadget k = " + std::to_string(k) +
                                    " exceeds the cap of " + std::to_string(cap));
    const std::size_t p = 2 * k + 1;
    std::vector<Concept> concepts;
    for_each_combination(p, k, [&](const IndexSet& support) {
        BitVector v(p);
        for (std::size_t i : support)
            v.set(i);
        concepts.push_back({v.to_string(), std::move(v)});
        return false;
    });
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < p; ++i)
        labels.push_back("z" + std::to_string(i));
    std::size_t q = concepts.size();
    return {k, p, q, ConceptClass(std::move(labels), std::move(concepts))};
}

struct GadgetCounterexample
{
    std::string concept_label;
    IndexSet points;
};

struct PropertyCheck
{
    bool pass = true;
    std::optional<GadgetCounterexample> counterexample;
};

struct GadgetReport
{
    /// Indexed 0..2 for properties 1..3.
    std::array<PropertyCheck, 3> property;

    bool all_pass() const
    {
        return property[0].pass && property[1].pass && property[2].pass;
    }
};

/// Exhaustively checks the three gadget properties for parameter `k` on an
/// arbitrary class (so mutated gadgets can be examined). Each property
/// records the first counterexample in (concept, point set) order.
///
///  1. a TS witness whose size differs from k;
///  2. a k-point teaching set on which the concept shows a zero;
///  3. a teaching set of at most k points against klass + all-one.
inline GadgetReport verify_gadget_class(std::size_t k, const ConceptClass& klass)
{
    GadgetReport report;
    const std::size_t p = klass.domain_size();
    auto members = all_members(klass);

    for (std::size_t h = 0; h < klass.size(); ++h) {
        auto ts = min_teaching_set_within(klass, members, h);
        if (ts.size != k && report.property[0].pass)
            report.property[0] = {false, GadgetCounterexample{klass.label(h), ts.witness}};

        if (report.property[1].pass) {
            for_each_combination(p, k, [&](const IndexSet& s) {
                if (!is_teaching_set_within(klass, members, h, s))
                    return false;
                for (std::size_t i : s)
                    if (!klass.row(h)[i]) {
                        report.property[1] = {false, GadgetCounterexample{klass.label(h), s}};
                        return true;
                    }
                return false;
            });
        }
    }

    BitVector ones = BitVector::ones(p);
    if (!klass.find_row(ones)) {
        std::string label = "ones";
        while (klass.find(label))
            label += "_";
        ConceptClass extended = klass.with_concept({label, ones});
        auto ext_members = all_members(extended);
        for (std::size_t h = 0; h < klass.size() && report.property[2].pass; ++h)
            if (auto w = teaching_set_within(extended, ext_members, h, k))
                report.property[2] = {false, GadgetCounterexample{klass.label(h), *w}};
    } else {
        // The all-one concept is already present: property 3 concerns a
        // class that cannot be formed, report it as failing on that concept.
        report.property[2] = {false, GadgetCounterexample{klass.label(*klass.find_row(ones)), {}}};
    }
    return report;
}

inline GadgetReport verify_gadget(const Gadget& g)
{
    return verify_gadget_class(g.k, g.klass);
}

} // namespace rtdkit
