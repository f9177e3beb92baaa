#include "hurwitz/multigraph.hpp"

#include <algorithm>
#include <deque>

#include "hurwitz/errors.hpp"

namespace hurwitz {

void validate(const std::set<VertexId>& vertices, const std::map<EdgeId, Endpoints>& edges) {
    if (vertices.empty()) fail("EmptyGraph", "a graph needs at least one vertex");
    for (const auto& v : vertices)
        if (v.empty()) fail("BadId", "empty vertex id");
    for (const auto& [e, ends] : edges) {
        if (e.empty()) fail("BadId", "empty edge id");
        if (!vertices.count(ends.first))
            fail("DanglingEndpoint", "edge '" + e + "' references undeclared vertex '" + ends.first + "'");
        if (!vertices.count(ends.second))
            fail("DanglingEndpoint", "edge '" + e + "' references undeclared vertex '" + ends.second + "'");
    }

    // BFS from the least vertex.
    std::set<VertexId> seen{*vertices.begin()};
    std::deque<VertexId> work{*vertices.begin()};
    std::map<VertexId, std::vector<VertexId>> adjacency;
    for (const auto& [e, ends] : edges) {
        adjacency[ends.first].push_back(ends.second);
        adjacency[ends.second].push_back(ends.first);
    }
    while (!work.empty()) {
        VertexId v = work.front();
        work.pop_front();
        for (const auto& u : adjacency[v])
            if (seen.insert(u).second) work.push_back(u);
    }
    if (seen.size() != vertices.size()) {
        // count components for the error payload
        long long components = 1;
        std::set<VertexId> remaining;
        for (const auto& v : vertices)
            if (!seen.count(v)) remaining.insert(v);
        while (!remaining.empty()) {
            ++components;
            std::deque<VertexId> q{*remaining.begin()};
            remaining.erase(remaining.begin());
            while (!q.empty()) {
                VertexId v = q.front();
                q.pop_front();
                for (const auto& u : adjacency[v]) {
                    auto it = remaining.find(u);
                    if (it != remaining.end()) {
                        remaining.erase(it);
                        q.push_back(u);
                    }
                }
            }
        }
        fail("Disconnected", "graph has " + std::to_string(components) + " components");
    }
}

Multigraph::Multigraph(std::set<VertexId> vertices, std::map<EdgeId, Endpoints> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    validate(vertices_, edges_);
    for (const auto& [e, ends] : edges_) {
        incidence_[ends.first].push_back(e);
        if (!ends.is_loop()) incidence_[ends.second].push_back(e);
    }
}

const Endpoints& Multigraph::endpoints(const EdgeId& e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) fail("UnknownEdge", "no edge '" + e + "'");
    return it->second;
}

long long Multigraph::valency(const VertexId& v) const {
    if (!has_vertex(v)) fail("UnknownVertex", "no vertex '" + v + "'");
    long long count = 0;
    auto it = incidence_.find(v);
    if (it == incidence_.end()) return 0;
    for (const auto& e : it->second) count += edges_.at(e).is_loop() ? 2 : 1;
    return count;
}

std::vector<EdgeId> Multigraph::incident_edges(const VertexId& v) const {
    if (!has_vertex(v)) fail("UnknownVertex", "no vertex '" + v + "'");
    auto it = incidence_.find(v);
    return it == incidence_.end() ? std::vector<EdgeId>{} : it->second;
}

bool Multigraph::has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const auto& kv) { return kv.second.is_loop(); });
}

long long Multigraph::genus() const {
    return static_cast<long long>(edges_.size()) - static_cast<long long>(vertices_.size()) + 1;
}

LoopSubdivision subdivide_loops(const Multigraph& g) {
    std::set<VertexId> vertices = g.vertices();
    std::map<EdgeId, Endpoints> edges;
    std::map<EdgeId, VertexId> midpoints;
    for (const auto& [e, ends] : g.edges()) {
        if (!ends.is_loop()) {
            edges.emplace(e, ends);
            continue;
        }
        VertexId mid = "loopmid:" + e;
        vertices.insert(mid);
        midpoints.emplace(e, mid);
        edges.emplace(e + ":a", Endpoints(ends.first, mid));
        edges.emplace(e + ":b", Endpoints(ends.first, mid));
    }
    return {Multigraph(std::move(vertices), std::move(edges)), std::move(midpoints)};
}

}  // namespace hurwitz
