#include "hurwitz/metric_graph.hpp"

#include <algorithm>

#include "hurwitz/errors.hpp"

namespace hurwitz {

MetricModel::MetricModel(Multigraph graph, std::map<EdgeId, Rational> lengths)
    : graph_(std::move(graph)), lengths_(std::move(lengths)) {
    for (const auto& [e, ends] : graph_.edges()) {
        auto it = lengths_.find(e);
        if (it == lengths_.end()) fail("MissingLength", "edge '" + e + "' has no length");
        if (it->second <= 0) fail("NonPositiveLength", "edge '" + e + "' has non-positive length");
    }
    for (const auto& [e, len] : lengths_)
        if (!graph_.has_edge(e)) fail("UnknownEdge", "length on undeclared edge '" + e + "'");
}

const Rational& MetricModel::length(const EdgeId& e) const {
    auto it = lengths_.find(e);
    if (it == lengths_.end()) fail("UnknownEdge", "no edge '" + e + "'");
    return it->second;
}

Rational MetricModel::total_length() const {
    Rational sum = 0;
    for (const auto& [e, len] : lengths_) sum += len;
    return sum;
}

MetricModel refine(const MetricModel& m, const EdgeId& e, const Rational& at) {
    const Rational& len = m.length(e);
    if (at <= 0 || at >= len)
        fail("OutOfRange", "split point " + format_rational(at) + " not inside (0, " +
                               format_rational(len) + ") on edge '" + e + "'");
    Endpoints ends = m.graph().endpoints(e);
    VertexId mid = "sub:" + e + ":" + format_rational(at);

    std::set<VertexId> vertices = m.graph().vertices();
    vertices.insert(mid);
    std::map<EdgeId, Endpoints> edges = m.graph().edges();
    std::map<EdgeId, Rational> lengths = m.lengths();
    edges.erase(e);
    lengths.erase(e);
    edges.emplace(e + ":a", Endpoints(ends.first, mid));
    lengths.emplace(e + ":a", at);
    edges.emplace(e + ":b", Endpoints(mid, ends.second));
    lengths.emplace(e + ":b", len - at);
    return MetricModel(Multigraph(std::move(vertices), std::move(edges)), std::move(lengths));
}

MetricModel canonical_model(const MetricModel& m) {
    bool all_two_valent = true;
    for (const auto& v : m.graph().vertices())
        if (m.graph().valency(v) != 2) {
            all_two_valent = false;
            break;
        }
    if (all_two_valent)
        fail("IsCircle", "the metric graph is a circle; keep at least one marked vertex");

    std::set<VertexId> vertices = m.graph().vertices();
    std::map<EdgeId, Endpoints> edges = m.graph().edges();
    std::map<EdgeId, Rational> lengths = m.lengths();

    auto valency_of = [&](const VertexId& v) {
        long long count = 0;
        for (const auto& [e, ends] : edges)
            if (ends.touches(v)) count += ends.is_loop() ? 2 : 1;
        return count;
    };

    // Suppress 2-valent vertices until none remain. A 2-valent vertex whose
    // two incidences come from one loop cannot occur here: that component
    // would be a circle, excluded above by connectivity.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& v : vertices) {
            if (valency_of(v) != 2) continue;
            std::vector<EdgeId> inc;
            for (const auto& [e, ends] : edges)
                if (ends.touches(v) && !ends.is_loop()) inc.push_back(e);
            if (inc.size() != 2) continue;
            EdgeId e1 = inc[0], e2 = inc[1];
            VertexId u1 = edges.at(e1).other(v);
            VertexId u2 = edges.at(e2).other(v);
            Rational merged_len = lengths.at(e1) + lengths.at(e2);
            EdgeId merged_id = std::min(e1, e2);
            edges.erase(e1);
            edges.erase(e2);
            lengths.erase(e1);
            lengths.erase(e2);
            edges.emplace(merged_id, Endpoints(u1, u2));
            lengths.emplace(merged_id, merged_len);
            vertices.erase(v);
            changed = true;
            break;
        }
    }
    return MetricModel(Multigraph(std::move(vertices), std::move(edges)), std::move(lengths));
}

MetricModel loopless_canonical_model(const MetricModel& m) {
    MetricModel canon = canonical_model(m);
    std::set<VertexId> vertices = canon.graph().vertices();
    std::map<EdgeId, Endpoints> edges;
    std::map<EdgeId, Rational> lengths;
    for (const auto& [e, ends] : canon.graph().edges()) {
        if (!ends.is_loop()) {
            edges.emplace(e, ends);
            lengths.emplace(e, canon.length(e));
            continue;
        }
        VertexId mid = "loopmid:" + e;
        vertices.insert(mid);
        Rational half = canon.length(e) / 2;
        edges.emplace(e + ":a", Endpoints(ends.first, mid));
        lengths.emplace(e + ":a", half);
        edges.emplace(e + ":b", Endpoints(ends.first, mid));
        lengths.emplace(e + ":b", half);
    }
    return MetricModel(Multigraph(std::move(vertices), std::move(edges)), std::move(lengths));
}

long long genus_metric(const MetricModel& m) { return m.graph().genus(); }

VertexDivisor canonical_divisor_metric(const MetricModel& m) {
    return canonical_divisor(m.graph());
}

WeightedMetricGraph::WeightedMetricGraph(MetricModel model, std::map<VertexId, long long> weights)
    : model_(std::move(model)) {
    if (model_.graph().has_loops())
        fail("LoopInWeightedGraph",
             "weighted metric graphs use loopless models; split loops at their midpoints first");
    for (auto& [v, w] : weights) {
        if (!model_.graph().has_vertex(v))
            fail("UnknownVertex", "weight on undeclared vertex '" + v + "'");
        if (w < 0) fail("NegativeWeight", "weight of '" + v + "' is negative");
        if (w != 0) weights_.emplace(v, w);
    }
}

long long WeightedMetricGraph::weight(const VertexId& v) const {
    if (!model_.graph().has_vertex(v)) fail("UnknownVertex", "no vertex '" + v + "'");
    auto it = weights_.find(v);
    return it == weights_.end() ? 0 : it->second;
}

long long WeightedMetricGraph::total_weight() const {
    long long sum = 0;
    for (const auto& [v, w] : weights_) sum += w;
    return sum;
}

PseudoMetricGraph::PseudoMetricGraph(Multigraph graph, std::map<EdgeId, Rational> pseudo_lengths)
    : graph_(std::move(graph)), pseudo_lengths_(std::move(pseudo_lengths)) {
    for (const auto& [e, ends] : graph_.edges()) {
        auto it = pseudo_lengths_.find(e);
        if (it == pseudo_lengths_.end()) fail("MissingLength", "edge '" + e + "' has no length");
        if (it->second < 0) fail("NonPositiveLength", "edge '" + e + "' has negative length");
        if (it->second == 0 && !ends.is_loop())
            fail("ZeroLengthNonLoop", "edge '" + e + "' has length 0 but is not a loop");
    }
    for (const auto& [e, len] : pseudo_lengths_)
        if (!graph_.has_edge(e)) fail("UnknownEdge", "length on undeclared edge '" + e + "'");
}

PseudoMetricGraph pseudo_metric_graph(const WeightedMetricGraph& wmg) {
    WeightedGraph wg(wmg.model().graph(), wmg.weights());
    Multigraph gw = virtual_graph(wg);
    std::map<EdgeId, Rational> lengths = wmg.model().lengths();
    for (const auto& [e, ends] : gw.edges())
        if (!lengths.count(e)) lengths.emplace(e, 0);
    return PseudoMetricGraph(std::move(gw), std::move(lengths));
}

WeightedMetricGraph from_pseudo_metric(const PseudoMetricGraph& p) {
    std::set<VertexId> vertices = p.graph().vertices();
    std::map<EdgeId, Endpoints> edges;
    std::map<EdgeId, Rational> lengths;
    std::map<VertexId, long long> weights;
    for (const auto& [e, ends] : p.graph().edges()) {
        const Rational& len = p.pseudo_lengths().at(e);
        if (len == 0) {
            if (!ends.is_loop())
                fail("ZeroLengthNonLoop", "edge '" + e + "' has length 0 but is not a loop");
            ++weights[ends.first];
        } else {
            edges.emplace(e, ends);
            lengths.emplace(e, len);
        }
    }
    return WeightedMetricGraph(
        MetricModel(Multigraph(std::move(vertices), std::move(edges)), std::move(lengths)),
        std::move(weights));
}

MetricModel epsilon_metric_graph(const WeightedMetricGraph& wmg, const Rational& eps) {
    if (eps <= 0) fail("OutOfRange", "epsilon must be positive");
    PseudoMetricGraph p = pseudo_metric_graph(wmg);
    std::map<EdgeId, Rational> lengths;
    for (const auto& [e, len] : p.pseudo_lengths()) lengths.emplace(e, len == 0 ? eps : len);
    return MetricModel(p.graph(), std::move(lengths));
}

long long genus_weighted_metric(const WeightedMetricGraph& wmg) {
    return genus_metric(wmg.model()) + wmg.total_weight();
}

VertexDivisor canonical_divisor_weighted_metric(const WeightedMetricGraph& wmg) {
    VertexDivisor k;
    for (const auto& v : wmg.model().graph().vertices())
        k.add(v, wmg.model().graph().valency(v) - 2 + 2 * wmg.weight(v));
    return k;
}

}  // namespace hurwitz
