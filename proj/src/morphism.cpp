#include "hurwitz/morphism.hpp"

#include <functional>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

/// Shared balance check: at each source vertex, the weight-summed fiber over
/// every target edge incident to the image vertex must be one common value.
/// The weight is 1 (finite), r_phi (indexed) or U_phi (metric).
HarmonicityCertificate balance_certificate(const GraphMorphism& m,
                                           const std::function<long long(const EdgeId&)>& weight,
                                           bool fill_vertical) {
    HarmonicityCertificate cert;
    cert.balanced = true;
    for (const auto& v : m.source().vertices()) {
        if (fill_vertical) cert.vertical[v] = vertical_multiplicity(m, v);
        const VertexId& image = m.apply(v);
        std::vector<EdgeId> target_edges = m.target().incident_edges(image);
        if (target_edges.empty()) {
            // Connected loopless target with an isolated vertex is a single
            // vertex; the paper's convention sets M to 0 there.
            cert.horizontal[v] = 0;
            continue;
        }
        std::map<EdgeId, long long> sums;
        for (const auto& e : target_edges) sums[e] = 0;
        for (const auto& e : m.source().incident_edges(v)) {
            const EdgeImage& img = m.apply_edge(e);
            if (img.to_edge) {
                auto it = sums.find(img.id);
                if (it != sums.end()) it->second += weight(e);
            }
        }
        long long common = sums.begin()->second;
        bool ok = true;
        for (const auto& [e, s] : sums) {
            if (s != common) {
                if (cert.balanced) {
                    cert.balanced = false;
                    cert.failure = MultiplicityWitness{v, sums.begin()->first, common, e, s};
                }
                ok = false;
                break;
            }
        }
        if (ok) cert.horizontal[v] = common;
    }
    return cert;
}

/// Degree from edge fibers, cross-checked against the vertex-fiber sums of M.
long long checked_degree(const GraphMorphism& m,
                         const std::function<long long(const EdgeId&)>& weight,
                         const HarmonicityCertificate& cert) {
    if (!cert.balanced)
        fail("NotHarmonic", "morphism is not harmonic at vertex '" + cert.failure->vertex + "'");
    if (m.target().edges().empty()) {
        for (const auto& [v, mv] : cert.horizontal)
            if (mv != 0) fail("InconsistentDegree", "nonzero multiplicity over edgeless target");
        return 0;
    }
    std::map<EdgeId, long long> fibers;
    for (const auto& [e1, img] : m.target().edges()) fibers[e1] = 0;
    for (const auto& [e, img] : m.edge_map())
        if (img.to_edge) fibers[img.id] += weight(e);
    long long degree = fibers.begin()->second;
    for (const auto& [e1, s] : fibers)
        if (s != degree)
            fail("InconsistentDegree", "edge fibers of '" + fibers.begin()->first + "' and '" + e1 +
                                           "' differ (" + std::to_string(degree) + " vs " +
                                           std::to_string(s) + ")");
    std::map<VertexId, long long> vertex_fibers;
    for (const auto& v1 : m.target().vertices()) vertex_fibers[v1] = 0;
    for (const auto& [v, mv] : cert.horizontal) vertex_fibers[m.apply(v)] += mv;
    for (const auto& [v1, s] : vertex_fibers)
        if (s != degree)
            fail("InconsistentDegree", "multiplicities over vertex '" + v1 + "' sum to " +
                                           std::to_string(s) + ", expected " +
                                           std::to_string(degree));
    return degree;
}

void require_loopless(const Multigraph& g, const char* which) {
    if (g.has_loops())
        fail("LoopyModel", std::string(which) +
                               " graph has loops; subdivide them (loopless model) first");
}

}  // namespace

GraphMorphism::GraphMorphism(Multigraph source, Multigraph target,
                             std::map<VertexId, VertexId> vertex_map,
                             std::map<EdgeId, EdgeImage> edge_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)) {
    for (const auto& v : source_.vertices()) {
        auto it = vertex_map_.find(v);
        if (it == vertex_map_.end()) fail("IncompleteMap", "vertex '" + v + "' has no image");
        if (!target_.has_vertex(it->second))
            fail("UnknownVertex", "image '" + it->second + "' of '" + v + "' is not a target vertex");
    }
    for (const auto& [v, img] : vertex_map_)
        if (!source_.has_vertex(v)) fail("UnknownVertex", "map on undeclared vertex '" + v + "'");
    for (const auto& [e, ends] : source_.edges()) {
        auto it = edge_map_.find(e);
        if (it == edge_map_.end()) fail("IncompleteMap", "edge '" + e + "' has no image");
        const EdgeImage& img = it->second;
        const VertexId& a = vertex_map_.at(ends.first);
        const VertexId& b = vertex_map_.at(ends.second);
        if (img.to_edge) {
            if (!target_.has_edge(img.id))
                fail("UnknownEdge", "image '" + img.id + "' of '" + e + "' is not a target edge");
            if (Endpoints(a, b) != target_.endpoints(img.id))
                fail("BadMorphism", "edge '" + e + "' maps onto '" + img.id +
                                        "' but its endpoints do not map onto that edge's endpoints");
        } else {
            if (!target_.has_vertex(img.id))
                fail("UnknownVertex", "image '" + img.id + "' of '" + e + "' is not a target vertex");
            if (a != img.id || b != img.id)
                fail("BadMorphism", "edge '" + e + "' collapses to '" + img.id +
                                        "' but its endpoints map elsewhere");
        }
    }
    for (const auto& [e, img] : edge_map_)
        if (!source_.has_edge(e)) fail("UnknownEdge", "map on undeclared edge '" + e + "'");
}

const VertexId& GraphMorphism::apply(const VertexId& v) const {
    auto it = vertex_map_.find(v);
    if (it == vertex_map_.end()) fail("UnknownVertex", "no vertex '" + v + "'");
    return it->second;
}

const EdgeImage& GraphMorphism::apply_edge(const EdgeId& e) const {
    auto it = edge_map_.find(e);
    if (it == edge_map_.end()) fail("UnknownEdge", "no edge '" + e + "'");
    return it->second;
}

Desingularized desingularize(const GraphMorphism& m) {
    LoopSubdivision src = subdivide_loops(m.source());
    LoopSubdivision tgt = subdivide_loops(m.target());
    std::map<VertexId, VertexId> vertex_map = m.vertex_map();
    std::map<EdgeId, EdgeImage> edge_map;
    for (const auto& [e, ends] : m.source().edges()) {
        const EdgeImage& img = m.apply_edge(e);
        bool source_loop = ends.is_loop();
        bool onto_target_loop = img.to_edge && m.target().endpoints(img.id).is_loop();
        if (!source_loop && !onto_target_loop) {
            edge_map.emplace(e, img);
            continue;
        }
        if (source_loop && !img.to_edge) {
            // vertical loop: both halves collapse, midpoint joins the fiber
            vertex_map.emplace(src.midpoints.at(e), img.id);
            edge_map.emplace(e + ":a", img);
            edge_map.emplace(e + ":b", img);
            continue;
        }
        // Horizontal onto a target loop (the source edge may itself be a loop
        // or a non-loop edge whose endpoints share an image). The target loop
        // was split into img.id+":a"/":b"; split the source edge to match. A
        // non-loop source edge onto a loop has no given midpoint, so insert
        // one now.
        VertexId source_mid;
        if (source_loop) {
            source_mid = src.midpoints.at(e);
        } else {
            source_mid = "loopmid:" + e;
            auto vertices = src.graph.vertices();
            vertices.insert(source_mid);
            auto edges = src.graph.edges();
            edges.erase(e);
            edges.emplace(e + ":a", Endpoints(ends.first, source_mid));
            edges.emplace(e + ":b", Endpoints(source_mid, ends.second));
            src.graph = Multigraph(std::move(vertices), std::move(edges));
            src.midpoints.emplace(e, source_mid);
        }
        vertex_map.emplace(source_mid, tgt.midpoints.at(img.id));
        edge_map.emplace(e + ":a", EdgeImage::edge(img.id + ":a"));
        edge_map.emplace(e + ":b", EdgeImage::edge(img.id + ":b"));
    }
    return {GraphMorphism(src.graph, tgt.graph, std::move(vertex_map), std::move(edge_map)),
            std::move(src.midpoints), std::move(tgt.midpoints)};
}

long long vertical_multiplicity(const GraphMorphism& m, const VertexId& v) {
    if (!m.source().has_vertex(v)) fail("UnknownVertex", "no vertex '" + v + "'");
    long long count = 0;
    for (const auto& e : m.source().incident_edges(v))
        if (m.is_vertical(e)) count += m.source().endpoints(e).is_loop() ? 2 : 1;
    return count;
}

HorizontalMultiplicity horizontal_multiplicity(const GraphMorphism& m, const VertexId& v) {
    if (!m.source().has_vertex(v)) fail("UnknownVertex", "no vertex '" + v + "'");
    GraphMorphism loopless =
        (m.source().has_loops() || m.target().has_loops()) ? desingularize(m).morphism : m;
    const VertexId& image = loopless.apply(v);
    std::vector<EdgeId> target_edges = loopless.target().incident_edges(image);
    if (target_edges.empty()) return {0, std::nullopt};
    std::map<EdgeId, long long> sums;
    for (const auto& e : target_edges) sums[e] = 0;
    for (const auto& e : loopless.source().incident_edges(v)) {
        const EdgeImage& img = loopless.apply_edge(e);
        if (img.to_edge) {
            auto it = sums.find(img.id);
            if (it != sums.end()) ++it->second;
        }
    }
    long long common = sums.begin()->second;
    for (const auto& [e, s] : sums)
        if (s != common)
            return {std::nullopt, MultiplicityWitness{v, sums.begin()->first, common, e, s}};
    return {common, std::nullopt};
}

HarmonicityCertificate is_harmonic_finite(const GraphMorphism& m) {
    GraphMorphism loopless =
        (m.source().has_loops() || m.target().has_loops()) ? desingularize(m).morphism : m;
    return balance_certificate(loopless, [](const EdgeId&) { return 1; }, true);
}

long long degree_finite(const GraphMorphism& m) {
    GraphMorphism loopless =
        (m.source().has_loops() || m.target().has_loops()) ? desingularize(m).morphism : m;
    HarmonicityCertificate cert =
        balance_certificate(loopless, [](const EdgeId&) { return 1; }, false);
    return checked_degree(loopless, [](const EdgeId&) { return 1; }, cert);
}

VertexDivisor pullback(const std::map<VertexId, VertexId>& vertex_map,
                       const std::map<VertexId, long long>& horizontal, const VertexDivisor& d) {
    VertexDivisor out;
    for (const auto& [v, image] : vertex_map) out.add(v, horizontal.at(v) * d.at(image));
    return out;
}

VertexDivisor pullback(const GraphMorphism& m, const VertexDivisor& d) {
    GraphMorphism loopless =
        (m.source().has_loops() || m.target().has_loops()) ? desingularize(m).morphism : m;
    HarmonicityCertificate cert = is_harmonic_finite(loopless);
    if (!cert.balanced)
        fail("NotHarmonic", "morphism is not harmonic at vertex '" + cert.failure->vertex + "'");
    return pullback(loopless.vertex_map(), cert.horizontal, d);
}

VertexDivisor pushforward(const GraphMorphism& m, const VertexDivisor& d) {
    VertexDivisor out;
    for (const auto& [v, c] : d.coefficients()) out.add(m.apply(v), c);
    return out;
}

IndexedMorphism::IndexedMorphism(WeightedGraph source, WeightedGraph target,
                                 std::map<VertexId, VertexId> vertex_map,
                                 std::map<EdgeId, EdgeImage> edge_map,
                                 std::map<EdgeId, long long> indices)
    : source_(std::move(source)),
      target_(std::move(target)),
      base_(source_.graph(), target_.graph(), std::move(vertex_map), std::move(edge_map)),
      indices_(std::move(indices)) {
    for (const auto& [e, ends] : source_.graph().edges()) {
        auto it = indices_.find(e);
        if (it == indices_.end()) fail("IncompleteMap", "edge '" + e + "' has no index");
        if (it->second < 0) fail("BadIndex", "negative index on edge '" + e + "'");
        bool vertical = base_.is_vertical(e);
        if (vertical != (it->second == 0))
            fail("IndexVerticalMismatch",
                 "edge '" + e + "' has index " + std::to_string(it->second) +
                     (vertical ? " but is vertical" : " but is horizontal"));
    }
    for (const auto& [e, r] : indices_)
        if (!source_.graph().has_edge(e)) fail("UnknownEdge", "index on undeclared edge '" + e + "'");
}

HarmonicityCertificate is_pseudo_harmonic_indexed(const IndexedMorphism& m) {
    return balance_certificate(m.base(), [&](const EdgeId& e) { return m.index(e); }, false);
}

long long degree_indexed(const IndexedMorphism& m) {
    HarmonicityCertificate cert = is_pseudo_harmonic_indexed(m);
    return checked_degree(m.base(), [&](const EdgeId& e) { return m.index(e); }, cert);
}

HarmonicSlack is_harmonic_indexed(const IndexedMorphism& m) {
    HarmonicityCertificate cert = is_pseudo_harmonic_indexed(m);
    if (!cert.balanced)
        fail("NotHarmonic",
             "morphism is not pseudo-harmonic at vertex '" + cert.failure->vertex + "'");
    HarmonicSlack out;
    out.harmonic = true;
    for (const auto& v : m.source().graph().vertices()) {
        long long mv = cert.horizontal.at(v);
        long long excess = 0;
        for (const auto& e : m.source().graph().incident_edges(v)) excess += m.index(e) - 1;
        long long slack =
            2 * (mv - 1 + m.source().weight(v) - mv * m.target().weight(m.base().apply(v))) - excess;
        out.slack[v] = slack;
        if (slack < 0) out.harmonic = false;
    }
    return out;
}

VertexDivisor pullback(const IndexedMorphism& m, const VertexDivisor& d) {
    HarmonicityCertificate cert = is_pseudo_harmonic_indexed(m);
    if (!cert.balanced)
        fail("NotHarmonic",
             "morphism is not pseudo-harmonic at vertex '" + cert.failure->vertex + "'");
    return pullback(m.base().vertex_map(), cert.horizontal, d);
}

MetricMorphism::MetricMorphism(MetricModel source, MetricModel target,
                               std::map<VertexId, VertexId> vertex_map,
                               std::map<EdgeId, EdgeImage> edge_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      base_(source_.graph(), target_.graph(), std::move(vertex_map), std::move(edge_map)) {
    require_loopless(source_.graph(), "source");
    require_loopless(target_.graph(), "target");
    for (const auto& [e, ends] : source_.graph().edges()) {
        const EdgeImage& img = base_.apply_edge(e);
        if (!img.to_edge) {
            slopes_.emplace(e, 0);
            continue;
        }
        Rational ratio = target_.length(img.id) / source_.length(e);
        if (denominator(ratio) != 1)
            fail("NonIntegralSlope", "l'(" + img.id + ")/l(" + e + ") = " +
                                         format_rational(ratio) + " is not an integer");
        slopes_.emplace(e, static_cast<long long>(numerator(ratio)));
    }
}

long long slope(const MetricMorphism& m, const EdgeId& e) {
    auto it = m.slopes().find(e);
    if (it == m.slopes().end()) fail("UnknownEdge", "no edge '" + e + "'");
    return it->second;
}

HarmonicityCertificate is_harmonic_metric(const MetricMorphism& m) {
    return balance_certificate(m.base(), [&](const EdgeId& e) { return m.slopes().at(e); }, false);
}

long long degree_metric(const MetricMorphism& m) {
    HarmonicityCertificate cert = is_harmonic_metric(m);
    return checked_degree(m.base(), [&](const EdgeId& e) { return m.slopes().at(e); }, cert);
}

VertexDivisor pullback(const MetricMorphism& m, const VertexDivisor& d) {
    HarmonicityCertificate cert = is_harmonic_metric(m);
    if (!cert.balanced)
        fail("NotHarmonic", "morphism is not harmonic at vertex '" + cert.failure->vertex + "'");
    return pullback(m.base().vertex_map(), cert.horizontal, d);
}

MetricMorphism common_refinement(const MetricMorphism& m, const EdgeId& target_edge,
                                 const Rational& at) {
    const Endpoints target_ends = m.target().graph().endpoints(target_edge);
    MetricModel new_target = refine(m.target(), target_edge, at);

    MetricModel new_source = m.source();
    std::map<VertexId, VertexId> vertex_map = m.base().vertex_map();
    std::map<EdgeId, EdgeImage> edge_map;
    VertexId target_mid = "sub:" + target_edge + ":" + format_rational(at);

    for (const auto& [e, img] : m.base().edge_map()) {
        if (!img.to_edge || img.id != target_edge) {
            edge_map.emplace(e, img);
            continue;
        }
        // e maps onto target_edge with slope U; split it at the parameter
        // matching `at`. Offsets are measured from the smaller endpoint of
        // each edge, so flip when the orientations disagree.
        long long u = m.slopes().at(e);
        Endpoints ends = m.source().graph().endpoints(e);
        bool aligned = vertex_map.at(ends.first) == target_ends.first;
        // Horizontal edges between distinct images onto a loopless target:
        // endpoints are unambiguous (phi(first) != phi(second)).
        Rational split = aligned ? Rational(at / u) : Rational(m.source().length(e) - at / u);
        VertexId source_mid = "sub:" + e + ":" + format_rational(split);
        new_source = refine(new_source, e, split);
        vertex_map.emplace(source_mid, target_mid);
        edge_map.emplace(e + ":a", EdgeImage::edge(target_edge + (aligned ? ":a" : ":b")));
        edge_map.emplace(e + ":b", EdgeImage::edge(target_edge + (aligned ? ":b" : ":a")));
    }
    return MetricMorphism(std::move(new_source), std::move(new_target), std::move(vertex_map),
                          std::move(edge_map));
}

WeightedMetricMorphism::WeightedMetricMorphism(WeightedMetricGraph source,
                                               WeightedMetricGraph target,
                                               std::map<VertexId, VertexId> vertex_map,
                                               std::map<EdgeId, EdgeImage> edge_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      metric_(source_.model(), target_.model(), std::move(vertex_map), std::move(edge_map)) {}

HarmonicityCertificate is_pseudo_harmonic_weighted_metric(const WeightedMetricMorphism& m) {
    return is_harmonic_metric(m.metric());
}

HarmonicSlack is_harmonic_weighted_metric(const WeightedMetricMorphism& m) {
    HarmonicityCertificate cert = is_pseudo_harmonic_weighted_metric(m);
    if (!cert.balanced)
        fail("NotHarmonic",
             "morphism is not pseudo-harmonic at vertex '" + cert.failure->vertex + "'");
    HarmonicSlack out;
    out.harmonic = true;
    const GraphMorphism& base = m.metric().base();
    for (const auto& v : m.source().model().graph().vertices()) {
        long long mv = cert.horizontal.at(v);
        long long excess = 0;
        for (const auto& e : m.source().model().graph().incident_edges(v))
            excess += m.metric().slopes().at(e) - 1;
        long long slack =
            2 * (mv - 1 + m.source().weight(v) - mv * m.target().weight(base.apply(v))) - excess;
        out.slack[v] = slack;
        if (slack < 0) out.harmonic = false;
    }
    return out;
}

long long degree_weighted_metric(const WeightedMetricMorphism& m) {
    return degree_metric(m.metric());
}

VertexDivisor pullback(const WeightedMetricMorphism& m, const VertexDivisor& d) {
    return pullback(m.metric(), d);
}

}  // namespace hurwitz
