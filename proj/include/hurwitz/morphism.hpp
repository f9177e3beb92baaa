#pragma once

#include <map>
#include <optional>
#include <string>

#include "hurwitz/divisor.hpp"
#include "hurwitz/metric_graph.hpp"
#include "hurwitz/multigraph.hpp"
#include "hurwitz/weighted_graph.hpp"

namespace hurwitz {

/// Image of an edge under a morphism: either a target edge (horizontal) or a
/// target vertex (vertical).
struct EdgeImage {
    bool to_edge = true;
    std::string id;

    static EdgeImage edge(EdgeId e) { return {true, std::move(e)}; }
    static EdgeImage vertex(VertexId v) { return {false, std::move(v)}; }

    bool operator==(const EdgeImage&) const = default;
};

/// Morphism of finite graphs: phi(V) within V', and each edge either maps onto
/// an edge joining the images of its endpoints or collapses to the common
/// image vertex. Structural conditions are enforced at construction.
class GraphMorphism {
public:
    GraphMorphism(Multigraph source, Multigraph target,
                  std::map<VertexId, VertexId> vertex_map,
                  std::map<EdgeId, EdgeImage> edge_map);

    const Multigraph& source() const { return source_; }
    const Multigraph& target() const { return target_; }
    const std::map<VertexId, VertexId>& vertex_map() const { return vertex_map_; }
    const std::map<EdgeId, EdgeImage>& edge_map() const { return edge_map_; }

    const VertexId& apply(const VertexId& v) const;
    const EdgeImage& apply_edge(const EdgeId& e) const;
    bool is_vertical(const EdgeId& e) const { return !apply_edge(e).to_edge; }

    bool operator==(const GraphMorphism&) const = default;

private:
    Multigraph source_;
    Multigraph target_;
    std::map<VertexId, VertexId> vertex_map_;
    std::map<EdgeId, EdgeImage> edge_map_;
};

/// Loop removal for morphisms: subdivides every loop of source and target and
/// extends the morphism over the midpoints. The renaming maps record which
/// loop produced which midpoint.
struct Desingularized {
    GraphMorphism morphism;
    std::map<EdgeId, VertexId> source_midpoints;
    std::map<EdgeId, VertexId> target_midpoints;
};

Desingularized desingularize(const GraphMorphism& m);

/// Witness that the per-vertex fiber sums disagree over two target edges.
struct MultiplicityWitness {
    VertexId vertex;
    EdgeId edge_a;
    long long sum_a = 0;
    EdgeId edge_b;
    long long sum_b = 0;
};

/// Per-vertex multiplicity data. `balanced` means the harmonicity counting
/// condition holds at every vertex; otherwise `failure` names the least
/// failing vertex. `horizontal` is M_phi (0 when the target has no edges),
/// `vertical` is V_phi (finite category only).
struct HarmonicityCertificate {
    bool balanced = false;
    std::map<VertexId, long long> horizontal;
    std::map<VertexId, long long> vertical;
    std::optional<MultiplicityWitness> failure;
};

/// Number of vertical-edge incidences at v (a vertical loop counts twice).
long long vertical_multiplicity(const GraphMorphism& m, const VertexId& v);

/// The common fiber count at v, or the witness of disagreement. Requires a
/// loopless morphism (desingularize first).
struct HorizontalMultiplicity {
    std::optional<long long> value;
    std::optional<MultiplicityWitness> failure;
};
HorizontalMultiplicity horizontal_multiplicity(const GraphMorphism& m, const VertexId& v);

/// Harmonicity of a finite-graph morphism. Loops are subdivided away
/// automatically; the certificate is stated on the subdivided vertex set.
HarmonicityCertificate is_harmonic_finite(const GraphMorphism& m);

/// Edge-fiber count, verified constant over every target edge and equal to
/// sum of M_phi over every vertex fiber; 0 when the target has one vertex.
/// Throws NotHarmonic / InconsistentDegree.
long long degree_finite(const GraphMorphism& m);

/// phi^*(D')(v) = M_phi(v) * D'(phi(v)). Generic over categories: callers
/// supply the M map from the relevant certificate.
VertexDivisor pullback(const std::map<VertexId, VertexId>& vertex_map,
                       const std::map<VertexId, long long>& horizontal,
                       const VertexDivisor& d);

VertexDivisor pullback(const GraphMorphism& m, const VertexDivisor& d);

/// phi_*(D) = sum_v D(v)(phi(v)). No harmonicity required.
VertexDivisor pushforward(const GraphMorphism& m, const VertexDivisor& d);

/// Indexed morphism of loopless vertex-weighted graphs: each edge carries a
/// nonnegative index r_phi(e), zero exactly on vertical edges.
class IndexedMorphism {
public:
    IndexedMorphism(WeightedGraph source, WeightedGraph target,
                    std::map<VertexId, VertexId> vertex_map,
                    std::map<EdgeId, EdgeImage> edge_map,
                    std::map<EdgeId, long long> indices);

    const WeightedGraph& source() const { return source_; }
    const WeightedGraph& target() const { return target_; }
    const GraphMorphism& base() const { return base_; }
    const std::map<EdgeId, long long>& indices() const { return indices_; }
    long long index(const EdgeId& e) const { return indices_.at(e); }

    bool operator==(const IndexedMorphism&) const = default;

private:
    WeightedGraph source_;
    WeightedGraph target_;
    GraphMorphism base_;
    std::map<EdgeId, long long> indices_;
};

/// Pseudo-harmonicity: the index-weighted fiber sums at each vertex agree
/// over all target edges at the image vertex.
HarmonicityCertificate is_pseudo_harmonic_indexed(const IndexedMorphism& m);

/// Index-weighted degree, verified over all edge fibers and vertex fibers.
long long degree_indexed(const IndexedMorphism& m);

/// Per-vertex harmonicity slack 2(M - 1 + w - M w') - sum_{e at v}(r - 1);
/// harmonic iff every slack is >= 0. The sum runs over edges incident to the
/// vertex, as the degree-identity form of the inequality requires.
struct HarmonicSlack {
    bool harmonic = false;
    std::map<VertexId, long long> slack;
};
HarmonicSlack is_harmonic_indexed(const IndexedMorphism& m);

VertexDivisor pullback(const IndexedMorphism& m, const VertexDivisor& d);

/// Morphism of loopless metric models; for every horizontal edge the length
/// ratio l'(phi(e)) / l(e) must be a positive integer (the slope U_phi(e)).
class MetricMorphism {
public:
    MetricMorphism(MetricModel source, MetricModel target,
                   std::map<VertexId, VertexId> vertex_map,
                   std::map<EdgeId, EdgeImage> edge_map);

    const MetricModel& source() const { return source_; }
    const MetricModel& target() const { return target_; }
    const GraphMorphism& base() const { return base_; }
    const std::map<EdgeId, long long>& slopes() const { return slopes_; }

    bool operator==(const MetricMorphism&) const = default;

private:
    MetricModel source_;
    MetricModel target_;
    GraphMorphism base_;
    std::map<EdgeId, long long> slopes_;  // 0 on vertical edges
};

long long slope(const MetricMorphism& m, const EdgeId& e);

HarmonicityCertificate is_harmonic_metric(const MetricMorphism& m);

/// Slope-weighted degree over any target edge; 0 if the target has no edges.
long long degree_metric(const MetricMorphism& m);

VertexDivisor pullback(const MetricMorphism& m, const VertexDivisor& d);

/// Refines target edge e at distance `at` from its smaller endpoint and every
/// horizontal preimage at the matching parameter, extending the morphism.
/// M_phi, the degree, and all Riemann-Hurwitz data are invariant.
MetricMorphism common_refinement(const MetricMorphism& m, const EdgeId& target_edge,
                                 const Rational& at);

/// Morphism of loopless vertex-weighted metric graphs (a metric morphism of
/// the underlying models, with weights along for the harmonicity inequality).
class WeightedMetricMorphism {
public:
    WeightedMetricMorphism(WeightedMetricGraph source, WeightedMetricGraph target,
                           std::map<VertexId, VertexId> vertex_map,
                           std::map<EdgeId, EdgeImage> edge_map);

    const WeightedMetricGraph& source() const { return source_; }
    const WeightedMetricGraph& target() const { return target_; }
    const MetricMorphism& metric() const { return metric_; }

    bool operator==(const WeightedMetricMorphism&) const = default;

private:
    WeightedMetricGraph source_;
    WeightedMetricGraph target_;
    MetricMorphism metric_;
};

HarmonicityCertificate is_pseudo_harmonic_weighted_metric(const WeightedMetricMorphism& m);

/// Slack 2(M - 1 + w - M w') - sum_{e at v}(U - 1) per vertex.
HarmonicSlack is_harmonic_weighted_metric(const WeightedMetricMorphism& m);

long long degree_weighted_metric(const WeightedMetricMorphism& m);

VertexDivisor pullback(const WeightedMetricMorphism& m, const VertexDivisor& d);

}  // namespace hurwitz
