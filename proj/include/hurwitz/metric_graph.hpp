#pragma once

#include <map>

#include "hurwitz/divisor.hpp"
#include "hurwitz/multigraph.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/weighted_graph.hpp"

namespace hurwitz {

/// Model (G, l) of a metric graph: every edge carries an exact positive
/// rational length. All length arithmetic is exact; slopes of metric
/// morphisms must be integers, which floating point cannot certify.
class MetricModel {
public:
    MetricModel(Multigraph graph, std::map<EdgeId, Rational> lengths);

    const Multigraph& graph() const { return graph_; }
    const std::map<EdgeId, Rational>& lengths() const { return lengths_; }
    const Rational& length(const EdgeId& e) const;

    Rational total_length() const;

    bool operator==(const MetricModel&) const = default;

private:
    Multigraph graph_;
    std::map<EdgeId, Rational> lengths_;
};

/// Splits edge e at distance `at` from its lexicographically smaller endpoint
/// (for loops, from the base along the serialized orientation). The fresh
/// vertex is "sub:"+e+":"+at; the halves are e+":a" / e+":b". Genus and total
/// length are preserved. Requires 0 < at < l(e).
MetricModel refine(const MetricModel& m, const EdgeId& e, const Rational& at);

/// The model whose vertices are exactly the points of valence != 2: suppresses
/// every 2-valent vertex, merging its two incident edges (summing lengths,
/// keeping the lexicographically smaller edge id). Fails with IsCircle when
/// every vertex is 2-valent (the metric graph is a circle and needs a marked
/// vertex).
MetricModel canonical_model(const MetricModel& m);

/// canonical_model followed by midpoint insertion on each remaining loop.
MetricModel loopless_canonical_model(const MetricModel& m);

/// Genus of the underlying multigraph; invariant under refine.
long long genus_metric(const MetricModel& m);

/// K_Gamma restricted to model vertices: coefficient val(v) - 2 (2-valent
/// model vertices get 0, matching the point-supported sum over Gamma).
VertexDivisor canonical_divisor_metric(const MetricModel& m);

/// Vertex-weighted metric graph (Gamma, w) = (G, w, l) with a loopless model.
class WeightedMetricGraph {
public:
    WeightedMetricGraph(MetricModel model, std::map<VertexId, long long> weights);

    const MetricModel& model() const { return model_; }
    const std::map<VertexId, long long>& weights() const { return weights_; }
    long long weight(const VertexId& v) const;
    long long total_weight() const;

    bool operator==(const WeightedMetricGraph&) const = default;

private:
    MetricModel model_;
    std::map<VertexId, long long> weights_;  // nonzero entries only
};

/// Pseudo-metric graph: lengths may vanish, but only on loop-edges.
class PseudoMetricGraph {
public:
    PseudoMetricGraph(Multigraph graph, std::map<EdgeId, Rational> pseudo_lengths);

    const Multigraph& graph() const { return graph_; }
    const std::map<EdgeId, Rational>& pseudo_lengths() const { return pseudo_lengths_; }

    bool operator==(const PseudoMetricGraph&) const = default;

private:
    Multigraph graph_;
    std::map<EdgeId, Rational> pseudo_lengths_;
};

/// (G^w, l^w): attach w(v) virtual loops of length 0 at each vertex, keep the
/// original lengths elsewhere. Inverse of from_pseudo_metric.
PseudoMetricGraph pseudo_metric_graph(const WeightedMetricGraph& wmg);

/// Recovers the unique (G, w, l) with G^w = p: zero-length loops at v become
/// weight w(v). Fails with ZeroLengthNonLoop if a non-loop edge has length 0
/// (already impossible for a validated PseudoMetricGraph; rechecked anyway).
WeightedMetricGraph from_pseudo_metric(const PseudoMetricGraph& p);

/// Gamma_eps^w: virtual loops get length eps > 0, original edges keep their
/// lengths. genus_metric of the result equals genus_weighted_metric(wmg).
MetricModel epsilon_metric_graph(const WeightedMetricGraph& wmg, const Rational& eps);

/// g(Gamma, w) = g(Gamma) + sum_v w(v).
long long genus_weighted_metric(const WeightedMetricGraph& wmg);

/// K_(Gamma,w): coefficient val(v) - 2 + 2w(v); degree 2g(Gamma,w) - 2.
VertexDivisor canonical_divisor_weighted_metric(const WeightedMetricGraph& wmg);

}  // namespace hurwitz
