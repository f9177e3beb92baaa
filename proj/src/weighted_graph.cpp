#include "hurwitz/weighted_graph.hpp"

#include "hurwitz/errors.hpp"

namespace hurwitz {

WeightedGraph::WeightedGraph(Multigraph graph, std::map<VertexId, long long> weights)
    : graph_(std::move(graph)) {
    for (const auto& [e, ends] : graph_.edges())
        if (ends.is_loop())
            fail("LoopInWeightedGraph",
                 "edge '" + e + "' is a loop; convert it to +1 weight at '" + ends.first + "'");
    for (auto& [v, w] : weights) {
        if (!graph_.has_vertex(v)) fail("UnknownVertex", "weight on undeclared vertex '" + v + "'");
        if (w < 0) fail("NegativeWeight", "weight of '" + v + "' is negative");
        if (w != 0) weights_.emplace(v, w);
    }
}

long long WeightedGraph::weight(const VertexId& v) const {
    if (!graph_.has_vertex(v)) fail("UnknownVertex", "no vertex '" + v + "'");
    auto it = weights_.find(v);
    return it == weights_.end() ? 0 : it->second;
}

long long WeightedGraph::total_weight() const {
    long long sum = 0;
    for (const auto& [v, w] : weights_) sum += w;
    return sum;
}

Multigraph virtual_graph(const WeightedGraph& wg) {
    std::set<VertexId> vertices = wg.graph().vertices();
    std::map<EdgeId, Endpoints> edges = wg.graph().edges();
    for (const auto& [v, w] : wg.weights())
        for (long long k = 1; k <= w; ++k)
            edges.emplace("vloop:" + v + ":" + std::to_string(k), Endpoints(v, v));
    return Multigraph(std::move(vertices), std::move(edges));
}

long long genus_weighted(const WeightedGraph& wg) {
    return wg.graph().genus() + wg.total_weight();
}

VertexDivisor canonical_divisor_weighted(const WeightedGraph& wg) {
    VertexDivisor k;
    for (const auto& v : wg.graph().vertices())
        k.add(v, 2 * wg.weight(v) - 2 + wg.graph().valency(v));
    return k;
}

}  // namespace hurwitz
