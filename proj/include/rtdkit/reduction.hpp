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

// reduction.hpp -- dominating set to teaching-set and RTD reductions
//
// Two constructions live here:
//
//  * shinohara_reduce: domain V, one concept per vertex u that is 0 exactly
//    on the vertices dominating u, plus the all-one concept c*. A point set
//    teaches c* iff it is a dominating set.
//
//  * domset_to_rtd: domain (V x Z) + (Z x V) with Z the gadget domain. For
//    every gadget concept h a constraint concept c_h, and for every vertex u
//    a family of vertex concepts c_{u,h}:
//
//        c_h(v, z)     = h(z)                 c_h(z, v)     = 1
//        c_{u,h}(v, z) = [v does not dom. u]  c_{u,h}(z, v) = [h(z) = 1 and u = v]
//
//    G has a dominating set of size k iff the class has RTD <= k.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rtdkit/combinatorics.hpp"
#include "rtdkit/error.hpp"
#include "rtdkit/gadget.hpp"
#include "rtdkit/graph.hpp"
#include "rtdkit/model.hpp"
#include "rtdkit/teaching.hpp"

namespace rtdkit {

/// Positional zip of two equally sized sequences. Both projections of the
/// result are onto.
template <class A, class B>
std::vector<std::pair<A, B>> nu_pairing(std::span<const A> a, std::span<const B> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("nu_pairing needs equally sized sets (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    std::vector<std::pair<A, B>> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.emplace_back(a[i], b[i]);
    return out;
}

// ---------------------------------------------------------------------------
// Teaching-set reduction
// ---------------------------------------------------------------------------

struct ShinoharaMerge
{
    std::size_t kept;   ///< vertex whose concept stays in the class
    std::size_t merged; ///< vertex with an identical row, dropped
};

struct ShinoharaOutput
{
    ConceptClass klass;
    std::size_t star;                        ///< index of c* (always last)
    std::vector<std::size_t> concept_of;     ///< vertex -> concept index
    std::vector<ShinoharaMerge> merges;
};

inline ShinoharaOutput shinohara_reduce(const Graph& g)
{
    if (g.size() == 0)
        throw std::invalid_argument("teaching-set reduction needs a nonempty graph");
    const std::size_t n = g.size();
    std::vector<std::string> domain;
    for (std::size_t v = 0; v < n; ++v)
        domain.push_back(Graph::vertex_label(v));

    std::vector<Concept> concepts;
    std::vector<std::size_t> concept_of(n);
    std::vector<std::size_t> owner;
    std::vector<ShinoharaMerge> merges;
    for (std::size_t u = 0; u < n; ++u) {
        BitVector row = g.closed_neighborhood(u);
        row.flip(); // 0 exactly where v dominates u
        if (row[u])
            throw std::logic_error("vertex concept is 1 on its own vertex");
        auto same = std::find_if(concepts.begin(), concepts.end(),
                                 [&](const Concept& c) { return c.values == row; });
        if (same != concepts.end()) {
            std::size_t idx = static_cast<std::size_t>(same - concepts.begin());
            concept_of[u] = idx;
            merges.push_back({owner[idx], u});
            continue;
        }
        concept_of[u] = concepts.size();
        owner.push_back(u);
        concepts.push_back({"c[" + Graph::vertex_label(u) + "]", std::move(row)});
    }
    std::size_t star = concepts.size();
    concepts.push_back({"c*", BitVector::ones(n)});
    return {ConceptClass(std::move(domain), std::move(concepts)), star,
            std::move(concept_of), std::move(merges)};
}

// ---------------------------------------------------------------------------
// RTD reduction
// ---------------------------------------------------------------------------

enum class Block { VZ, ZV };

struct PointTag
{
    Block block;
    std::size_t vertex;
    std::size_t z;

    friend bool operator==(const PointTag&, const PointTag&) = default;
};

enum class Family { Constraint, Vertex };

struct ConceptTag
{
    Family family;
    std::size_t h;                    ///< gadget concept index
    std::optional<std::size_t> vertex; ///< set for vertex concepts

    friend bool operator==(const ConceptTag&, const ConceptTag&) = default;
};

struct ReductionParams
{
    std::size_t k;
    std::size_t N;
    std::size_t p;
    std::size_t q;
};

/// Reduced instance plus the maps naming every point and concept.
///
/// Point layout: V x Z first, (v, z) at v*p + z; then Z x V, (z, v) at
/// p*N + z*N + v. Concept layout: the q constraint concepts in gadget
/// order, then vertex concepts grouped by vertex, each group in gadget
/// order.
struct ReductionOutput
{
    ConceptClass klass;
    ReductionParams params;
    std::vector<PointTag> point_map;
    std::vector<ConceptTag> concept_map;
    Gadget gadget;
    Graph graph;

    std::size_t vz_point(std::size_t v, std::size_t z) const { return v * params.p + z; }
    std::size_t zv_point(std::size_t z, std::size_t v) const
    {
        return params.p * params.N + z * params.N + v;
    }
    std::size_t constraint_concept(std::size_t h) const { return h; }
    std::size_t vertex_concept(std::size_t u, std::size_t h) const
    {
        return params.q + u * params.q + h;
    }

    std::vector<std::size_t> constraint_members() const
    {
        std::vector<std::size_t> m(params.q);
        for (std::size_t h = 0; h < params.q; ++h)
            m[h] = constraint_concept(h);
        return m;
    }

    std::vector<std::size_t> vertex_members(std::size_t u) const
    {
        std::vector<std::size_t> m(params.q);
        for (std::size_t h = 0; h < params.q; ++h)
            m[h] = vertex_concept(u, h);
        return m;
    }
};

inline std::string vz_label(std::size_t v, std::size_t z)
{
    return "(" + Graph::vertex_label(v) + ",z" + std::to_string(z) + ")";
}

inline std::string zv_label(std::size_t z, std::size_t v)
{
    return "(z" + std::to_string(z) + "," + Graph::vertex_label(v) + ")";
}

/// Throws std::invalid_argument unless 1 <= k <= N and N >= 2.
inline ReductionOutput domset_to_rtd(const Graph& g, std::size_t k,
                                     std::size_t gadget_cap = default_gadget_cap)
{
    const std::size_t n = g.size();
    if (n < 2)
        throw std::invalid_argument("RTD reduction needs at least 2 vertices, got " +
                                    std::to_string(n));
    if (k < 1 || k > n)
        throw std::invalid_argument("RTD reduction needs 1 <= k <= N (k = " +
                                    std::to_string(k) + ", N = " + std::to_string(n) + ")");

    Gadget gadget = build_gadget(k, gadget_cap);
    const std::size_t p = gadget.p;
    const std::size_t q = gadget.q;
    ReductionParams params{k, n, p, q};
    const std::size_t width = 2 * p * n;

    std::vector<std::string> domain(width);
    std::vector<PointTag> point_map(width);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t z = 0; z < p; ++z) {
            std::size_t i = v * p + z;
            domain[i] = vz_label(v, z);
            point_map[i] = {Block::VZ, v, z};
        }
    for (std::size_t z = 0; z < p; ++z)
        for (std::size_t v = 0; v < n; ++v) {
            std::size_t i = p * n + z * n + v;
            domain[i] = zv_label(z, v);
            point_map[i] = {Block::ZV, v, z};
        }

    std::vector<Concept> concepts;
    std::vector<ConceptTag> concept_map;
    concepts.reserve(q * (n + 1));

    for (std::size_t h = 0; h < q; ++h) {
        const BitVector& hv = gadget.klass.row(h);
        BitVector row(width);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t z = 0; z < p; ++z)
                row.set(v * p + z, hv[z]);
        for (std::size_t i = p * n; i < width; ++i)
            row.set(i);
        concepts.push_back({"c[" + gadget.klass.label(h) + "]", std::move(row)});
        concept_map.push_back({Family::Constraint, h, std::nullopt});
    }

    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t h = 0; h < q; ++h) {
            const BitVector& hv = gadget.klass.row(h);
            BitVector row(width);
            for (std::size_t z = 0; z < p; ++z)
                row.set(p * n + z * n + u, hv[z]);
            for (std::size_t v = 0; v < n; ++v)
                if (!g.dominates(v, u))
                    for (std::size_t z = 0; z < p; ++z)
                        row.set(v * p + z);
            concepts.push_back({"c[" + Graph::vertex_label(u) + "," +
                                    gadget.klass.label(h) + "]",
                                std::move(row)});
            concept_map.push_back({Family::Vertex, h, u});
        }

    ConceptClass klass(std::move(domain), std::move(concepts));
    return {std::move(klass), params, std::move(point_map), std::move(concept_map),
            std::move(gadget), g};
}

/// Explicit plan of width k for a reduced instance, built from a dominating
/// set T with |T| = k.
///
/// Constraint concepts come first, c_h taught by nu(T, supp h) inside V x Z;
/// then each vertex concept c_{u,h} is taught by supp(h) x {u} inside Z x V.
inline TeachingPlan witness_plan(const ReductionOutput& out, std::span<const std::size_t> t)
{
    const auto& prm = out.params;
    IndexSet sorted(t.begin(), t.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("dominating set has a repeated vertex");
    if (sorted.size() != prm.k)
        throw std::invalid_argument("witness plan needs |T| = k = " + std::to_string(prm.k) +
                                    ", got " + std::to_string(sorted.size()));
    for (std::size_t v : sorted)
        if (v >= prm.N)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    if (!out.graph.is_dominating(sorted))
        throw std::invalid_argument("T is not a dominating set");

    TeachingPlan plan;
    for (std::size_t h = 0; h < prm.q; ++h) {
        IndexSet support = out.gadget.support(h);
        IndexSet points;
        for (auto [v, z] : nu_pairing<std::size_t, std::size_t>(sorted, support))
            points.push_back(out.vz_point(v, z));
        std::sort(points.begin(), points.end());
        plan.steps.push_back({out.klass.label(out.constraint_concept(h)), std::move(points)});
    }
    for (std::size_t u = 0; u < prm.N; ++u)
        for (std::size_t h = 0; h < prm.q; ++h) {
            IndexSet points;
            for (std::size_t z : out.gadget.support(h))
                points.push_back(out.zv_point(z, u));
            std::sort(points.begin(), points.end());
            plan.steps.push_back({out.klass.label(out.vertex_concept(u, h)), std::move(points)});
        }
    return plan;
}

/// pi_1(S intersected with V x Z): the vertices named by the V x Z points of S.
inline IndexSet vz_vertices(const ReductionOutput& out, std::span<const std::size_t> s)
{
    IndexSet r;
    for (std::size_t i : s) {
        const PointTag& t = out.point_map.at(i);
        if (t.block == Block::VZ)
            r.push_back(t.vertex);
    }
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

/// pi_2(S intersected with V x Z), as gadget domain indices.
inline IndexSet vz_gadget_points(const ReductionOutput& out, std::span<const std::size_t> s)
{
    IndexSet r;
    for (std::size_t i : s) {
        const PointTag& t = out.point_map.at(i);
        if (t.block == Block::VZ)
            r.push_back(t.z);
    }
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

/// pi_1(S intersected with Z x {u}), as gadget domain indices.
inline IndexSet zv_gadget_points(const ReductionOutput& out, std::span<const std::size_t> s,
                                 std::size_t u)
{
    IndexSet r;
    for (std::size_t i : s) {
        const PointTag& t = out.point_map.at(i);
        if (t.block == Block::ZV && t.vertex == u)
            r.push_back(t.z);
    }
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

/// Recovers a dominating set from a teaching set S (|S| <= k) of the
/// constraint concept c_h against the whole reduced class: T = pi_1(S).
///
/// Throws SoundnessViolation if S does not teach c_h, is too large, leaves
/// the V x Z block, shows a zero of c_h, or projects to a non-dominating set.
inline IndexSet extract_domset(const ReductionOutput& out, std::size_t h,
                               std::span<const std::size_t> s)
{
    const auto& prm = out.params;
    if (h >= prm.q)
        throw std::invalid_argument("gadget concept index out of range");
    const std::size_t c = out.constraint_concept(h);
    IndexSet points = detail::normalized(s);
    if (points.size() > prm.k)
        throw SoundnessViolation("point set has " + std::to_string(points.size()) +
                                 " points, more than k = " + std::to_string(prm.k));
    if (!is_teaching_set(out.klass, c, points))
        throw SoundnessViolation("point set does not teach " + out.klass.label(c) +
                                 " against the reduced class");
    for (std::size_t i : points) {
        if (out.point_map[i].block != Block::VZ)
            throw SoundnessViolation("teaching set of " + out.klass.label(c) +
                                     " touches the Z x V block at " +
                                     out.klass.domain()[i].label);
        if (!out.klass.row(c)[i])
            throw SoundnessViolation(out.klass.label(c) + " is 0 on teaching point " +
                                     out.klass.domain()[i].label);
    }
    IndexSet t = vz_vertices(out, points);
    if (!out.graph.is_dominating(t))
        throw SoundnessViolation("projected vertex set is not dominating");
    return t;
}

struct ObservationCounterexample
{
    int observation; ///< 1: constraint family, 2: vertex family
    std::string concept_label;
    IndexSet points;
    bool teaches_in_class;  ///< teaching status in the reduced family
    bool teaches_in_gadget; ///< teaching status of the projection in H
};

struct ObservationReport
{
    std::size_t sets_checked = 0;
    bool exhaustive = true;
    bool constraint_holds = true;
    bool vertex_holds = true;
    std::optional<ObservationCounterexample> counterexample;

    bool holds() const { return constraint_holds && vertex_holds; }
};

struct ObservationOptions
{
    /// Largest |S| examined; defaults to k + 1 when unset.
    std::optional<std::size_t> max_size;
    /// Above this many candidate sets, a seeded sample of this size is used.
    std::size_t max_sets = 200000;
    std::uint64_t seed = 0;
};

/// Checks, for point sets S up to a size bound, that teaching inside each
/// reduced family matches teaching the projection inside the gadget:
///
///   S teaches c_h against {c_h'}       iff pi_2(S & VxZ)   teaches h against H
///   S teaches c_{u,h} against {c_u,h'}  iff pi_1(S & Zx{u}) teaches h against H
inline ObservationReport check_observations(const ReductionOutput& out,
                                            const ObservationOptions& opts = {})
{
    const auto& prm = out.params;
    const std::size_t x = out.klass.domain_size();
    const std::size_t max_size = std::min(opts.max_size.value_or(prm.k + 1), x);
    const auto gadget_members = all_members(out.gadget.klass);
    const auto constraint = out.constraint_members();
    std::vector<std::vector<std::size_t>> vertex(prm.N);
    for (std::size_t u = 0; u < prm.N; ++u)
        vertex[u] = out.vertex_members(u);

    ObservationReport report;

    auto check = [&](const IndexSet& s) {
        ++report.sets_checked;
        IndexSet z2 = vz_gadget_points(out, s);
        for (std::size_t h = 0; h < prm.q; ++h) {
            bool lhs = is_teaching_set_within(out.klass, constraint, out.constraint_concept(h), s);
            bool rhs = is_teaching_set_within(out.gadget.klass, gadget_members, h, z2);
            if (lhs != rhs && report.constraint_holds) {
                report.constraint_holds = false;
                if (!report.counterexample)
                    report.counterexample = {1, out.klass.label(out.constraint_concept(h)), s,
                                             lhs, rhs};
            }
        }
        for (std::size_t u = 0; u < prm.N; ++u) {
            IndexSet z1 = zv_gadget_points(out, s, u);
            for (std::size_t h = 0; h < prm.q; ++h) {
                bool lhs = is_teaching_set_within(out.klass, vertex[u], out.vertex_concept(u, h), s);
                bool rhs = is_teaching_set_within(out.gadget.klass, gadget_members, h, z1);
                if (lhs != rhs && report.vertex_holds) {
                    report.vertex_holds = false;
                    if (!report.counterexample)
                        report.counterexample = {2, out.klass.label(out.vertex_concept(u, h)),
                                                 s, lhs, rhs};
                }
            }
        }
    };

    std::uint64_t total = 0;
    bool overflow = false;
    for (std::size_t size = 0; size <= max_size && !overflow; ++size) {
        try {
            total += binomial(x, size);
        } catch (const std::overflow_error&) {
            overflow = true;
        }
        if (total > opts.max_sets)
            overflow = true;
    }

    if (!overflow) {
        for (std::size_t size = 0; size <= max_size; ++size)
            for_each_combination(x, size, [&](const IndexSet& s) {
                check(s);
                return false;
            });
        return report;
    }

    report.exhaustive = false;
    std::mt19937_64 rng(opts.seed);
    std::vector<std::size_t> pool(x);
    for (std::size_t i = 0; i < x; ++i)
        pool[i] = i;
    for (std::size_t n = 0; n < opts.max_sets; ++n) {
        std::size_t size = static_cast<std::size_t>(rng() % (max_size + 1));
        // Partial Fisher-Yates for a uniform size-`size` subset.
        for (std::size_t i = 0; i < size; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng() % (x - i));
            std::swap(pool[i], pool[j]);
        }
        IndexSet s(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
        std::sort(s.begin(), s.end());
        check(s);
    }
    return report;
}

} // namespace rtdkit
