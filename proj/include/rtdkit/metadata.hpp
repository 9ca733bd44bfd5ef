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

// metadata.hpp -- JSON sidecar documents for reduced instances

#pragma once

#include <string>

#include "json.hpp"
#include "rtdkit/reduction.hpp"

namespace rtdkit {

/// Sidecar for an RTD reduction:
///
///     {"variant": "rtd", "k", "N", "p", "q",
///      "points":   [{"index", "label", "block": "VZ"|"ZV", "vertex", "z"}],
///      "concepts": [{"index", "label", "family": "constraint"|"vertex",
///                    "h", "vertex"?}]}
///
/// Vertex and z fields are 0-based indices; labels carry the printed names.
inline nlohmann::json reduction_metadata(const ReductionOutput& out)
{
    nlohmann::json doc;
    doc["variant"] = "rtd";
    doc["k"] = out.params.k;
    doc["N"] = out.params.N;
    doc["p"] = out.params.p;
    doc["q"] = out.params.q;
    auto& points = doc["points"] = nlohmann::json::array();
    for (std::size_t i = 0; i < out.point_map.size(); ++i) {
        const auto& t = out.point_map[i];
        points.push_back({{"index", i},
                          {"label", out.klass.domain()[i].label},
                          {"block", t.block == Block::VZ ? "VZ" : "ZV"},
                          {"vertex", t.vertex},
                          {"z", t.z}});
    }
    auto& concepts = doc["concepts"] = nlohmann::json::array();
    for (std::size_t i = 0; i < out.concept_map.size(); ++i) {
        const auto& t = out.concept_map[i];
        nlohmann::json c = {{"index", i},
                            {"label", out.klass.label(i)},
                            {"family", t.family == Family::Constraint ? "constraint" : "vertex"},
                            {"h", out.gadget.klass.label(t.h)}};
        if (t.vertex)
            c["vertex"] = *t.vertex;
        concepts.push_back(std::move(c));
    }
    return doc;
}

/// Sidecar for the teaching-set reduction: the distinguished concept and
/// any vertices whose rows were merged.
inline nlohmann::json shinohara_metadata(const ShinoharaOutput& out)
{
    nlohmann::json doc;
    doc["variant"] = "shinohara";
    doc["N"] = out.klass.domain_size();
    doc["star"] = out.klass.label(out.star);
    auto& merges = doc["merged"] = nlohmann::json::array();
    for (const auto& m : out.merges)
        merges.push_back({{"kept", Graph::vertex_label(m.kept)},
                          {"merged", Graph::vertex_label(m.merged)}});
    auto& vc = doc["vertex_concepts"] = nlohmann::json::object();
    for (std::size_t v = 0; v < out.concept_of.size(); ++v)
        vc[Graph::vertex_label(v)] = out.klass.label(out.concept_of[v]);
    return doc;
}

} // namespace rtdkit
