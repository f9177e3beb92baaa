#pragma once

#include <map>

#include "hurwitz/divisor.hpp"
#include "hurwitz/multigraph.hpp"

namespace hurwitz {

/// Vertex-weighted graph (G, w): loopless connected multigraph plus a
/// nonnegative weight at each vertex (absent means 0). Loops in the input are
/// rejected; convert each loop to +1 weight at its base vertex instead.
class WeightedGraph {
public:
    WeightedGraph(Multigraph graph, std::map<VertexId, long long> weights);

    const Multigraph& graph() const { return graph_; }
    const std::map<VertexId, long long>& weights() const { return weights_; }
    long long weight(const VertexId& v) const;

    long long total_weight() const;

    bool operator==(const WeightedGraph&) const = default;

private:
    Multigraph graph_;
    std::map<VertexId, long long> weights_;  // nonzero entries only
};

/// The virtual weightless graph G^w: w(v) fresh loops ("vloop:"+v+":"+k)
/// attached at every vertex. genus(G^w) = genus_weighted(wg).
Multigraph virtual_graph(const WeightedGraph& wg);

/// g(G, w) = b1(G) + sum_v w(v).
long long genus_weighted(const WeightedGraph& wg);

/// K_(G,w): coefficient 2w(v) - 2 + val(v) at each vertex; degree 2g - 2.
VertexDivisor canonical_divisor_weighted(const WeightedGraph& wg);

}  // namespace hurwitz
