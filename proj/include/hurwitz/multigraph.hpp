#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

using VertexId = std::string;
using EdgeId = std::string;

/// Unordered pair of endpoints, stored with first <= second. Equal endpoints
/// mean a loop-edge.
struct Endpoints {
    VertexId first;
    VertexId second;

    Endpoints() = default;
    Endpoints(VertexId a, VertexId b) {
        if (b < a) std::swap(a, b);
        first = std::move(a);
        second = std::move(b);
    }

    bool is_loop() const { return first == second; }
    bool touches(const VertexId& v) const { return first == v || second == v; }
    VertexId other(const VertexId& v) const { return first == v ? second : first; }

    bool operator==(const Endpoints&) const = default;
};

/// Finite connected multigraph with loops. Vertices and edges carry stable
/// string ids; edge identity matters because morphisms are maps on edge sets.
/// Immutable after construction.
class Multigraph {
public:
    Multigraph(std::set<VertexId> vertices, std::map<EdgeId, Endpoints> edges);

    const std::set<VertexId>& vertices() const { return vertices_; }
    const std::map<EdgeId, Endpoints>& edges() const { return edges_; }

    bool has_vertex(const VertexId& v) const { return vertices_.count(v) != 0; }
    bool has_edge(const EdgeId& e) const { return edges_.count(e) != 0; }
    const Endpoints& endpoints(const EdgeId& e) const;

    /// Edge-endpoint incidences at v; a loop at v contributes 2.
    long long valency(const VertexId& v) const;

    /// Edges incident to v, each listed once (loops included once).
    std::vector<EdgeId> incident_edges(const VertexId& v) const;

    bool has_loops() const;

    /// First Betti number |E| - |V| + 1.
    long long genus() const;

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool operator==(const Multigraph&) const = default;

private:
    std::set<VertexId> vertices_;
    std::map<EdgeId, Endpoints> edges_;
    std::map<VertexId, std::vector<EdgeId>> incidence_;
};

/// Throws DanglingEndpoint / Disconnected / EmptyGraph / BadId unless the data
/// describes a finite connected multigraph. A single vertex with no edges
/// counts as connected.
void validate(const std::set<VertexId>& vertices, const std::map<EdgeId, Endpoints>& edges);

/// Result of loop subdivision: the loopless graph plus the loop -> inserted
/// midpoint vertex map.
struct LoopSubdivision {
    Multigraph graph;
    std::map<EdgeId, VertexId> midpoints;
};

/// Inserts one vertex ("loopmid:"+edge id) in the interior of every loop-edge,
/// turning each loop into two parallel edges (ids e+":a" and e+":b"). Genus
/// and original valencies are unchanged; idempotent on loopless graphs.
LoopSubdivision subdivide_loops(const Multigraph& g);

}  // namespace hurwitz
