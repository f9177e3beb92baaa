#include "hurwitz/generators.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

std::map<VertexId, VertexId> identity_vertex_map(const Multigraph& g) {
    std::map<VertexId, VertexId> out;
    for (const auto& v : g.vertices()) out.emplace(v, v);
    return out;
}

std::map<EdgeId, EdgeImage> identity_edge_map(const Multigraph& g) {
    std::map<EdgeId, EdgeImage> out;
    for (const auto& [e, ends] : g.edges()) out.emplace(e, EdgeImage::edge(e));
    return out;
}

}  // namespace

GraphMorphism identity_morphism(const Multigraph& g) {
    return GraphMorphism(g, g, identity_vertex_map(g), identity_edge_map(g));
}

IndexedMorphism identity_morphism(const WeightedGraph& g) {
    std::map<EdgeId, long long> indices;
    for (const auto& [e, ends] : g.graph().edges()) indices.emplace(e, 1);
    return IndexedMorphism(g, g, identity_vertex_map(g.graph()), identity_edge_map(g.graph()),
                           std::move(indices));
}

MetricMorphism identity_morphism(const MetricModel& m) {
    return MetricMorphism(m, m, identity_vertex_map(m.graph()), identity_edge_map(m.graph()));
}

WeightedMetricMorphism identity_morphism(const WeightedMetricGraph& g) {
    return WeightedMetricMorphism(g, g, identity_vertex_map(g.model().graph()),
                                  identity_edge_map(g.model().graph()));
}

ComplexMorphism identity_morphism(const MetrizedComplex& c) {
    std::map<VertexId, CurveCover> covers;
    for (const auto& v : c.base().model().graph().vertices()) {
        CurveCover cover;
        cover.degree = 1;
        for (const auto& [e, x] : c.reduction(v)) {
            cover.point_map.emplace(x, x);
            cover.ram_index.emplace(x, 1);
        }
        covers.emplace(v, std::move(cover));
    }
    return ComplexMorphism(c, c, identity_vertex_map(c.base().model().graph()),
                           identity_edge_map(c.base().model().graph()), std::move(covers));
}

GraphMorphism collapsing_morphism(const Multigraph& g, const VertexId& cut,
                                  const std::set<VertexId>& side) {
    if (!g.has_vertex(cut)) fail("UnknownVertex", "no vertex '" + cut + "'");
    for (const auto& v : side) {
        if (!g.has_vertex(v)) fail("UnknownVertex", "no vertex '" + v + "'");
        if (v == cut) fail("NotACutVertex", "the cut vertex cannot be on the collapsed side");
    }
    if (side.empty()) fail("NotACutVertex", "nothing to collapse");
    for (const auto& [e, ends] : g.edges()) {
        bool a = side.count(ends.first) != 0;
        bool b = side.count(ends.second) != 0;
        if (a != b && ends.first != cut && ends.second != cut)
            fail("NotACutVertex", "edge '" + e + "' crosses from the collapsed side past '" + cut +
                                      "'; '" + cut + "' does not separate it");
    }
    if (g.vertex_count() - side.size() <= 1)
        fail("TargetTooSmall", "collapsing would leave a single vertex");

    std::set<VertexId> target_vertices;
    for (const auto& v : g.vertices())
        if (!side.count(v)) target_vertices.insert(v);
    std::map<EdgeId, Endpoints> target_edges;
    std::map<VertexId, VertexId> vertex_map;
    std::map<EdgeId, EdgeImage> edge_map;
    for (const auto& v : g.vertices()) vertex_map.emplace(v, side.count(v) ? cut : v);
    for (const auto& [e, ends] : g.edges()) {
        bool collapsed = side.count(ends.first) || side.count(ends.second);
        if (collapsed) {
            edge_map.emplace(e, EdgeImage::vertex(cut));
        } else {
            target_edges.emplace(e, ends);
            edge_map.emplace(e, EdgeImage::edge(e));
        }
    }
    return GraphMorphism(g, Multigraph(std::move(target_vertices), std::move(target_edges)),
                         std::move(vertex_map), std::move(edge_map));
}

GraphMorphism permutation_cover(const Multigraph& base, int d,
                                const std::map<EdgeId, std::vector<int>>& assignment) {
    if (d < 1) fail("BadDegree", "sheet count must be positive");
    for (const auto& [e, perm] : assignment) {
        if (!base.has_edge(e)) fail("UnknownEdge", "assignment on undeclared edge '" + e + "'");
        std::vector<bool> hit(d, false);
        if (perm.size() != static_cast<std::size_t>(d))
            fail("BadPermutation", "permutation on '" + e + "' has the wrong size");
        for (int image : perm) {
            if (image < 0 || image >= d || hit[image])
                fail("BadPermutation", "assignment on '" + e + "' is not a permutation");
            hit[image] = true;
        }
    }
    if (base.has_loops()) {
        // Lift the loopless subdivision instead, carrying each loop's
        // monodromy on its first half.
        LoopSubdivision sub = subdivide_loops(base);
        std::map<EdgeId, std::vector<int>> lifted;
        for (const auto& [e, perm] : assignment) {
            if (base.endpoints(e).is_loop())
                lifted.emplace(e + ":a", perm);
            else
                lifted.emplace(e, perm);
        }
        return permutation_cover(sub.graph, d, lifted);
    }

    auto sheet = [](const std::string& id, int i) { return id + "@" + std::to_string(i + 1); };
    std::vector<int> identity(d);
    for (int i = 0; i < d; ++i) identity[i] = i;

    std::set<VertexId> vertices;
    std::map<EdgeId, Endpoints> edges;
    std::map<VertexId, VertexId> vertex_map;
    std::map<EdgeId, EdgeImage> edge_map;
    for (const auto& v : base.vertices())
        for (int i = 0; i < d; ++i) {
            vertices.insert(sheet(v, i));
            vertex_map.emplace(sheet(v, i), v);
        }
    for (const auto& [e, ends] : base.edges()) {
        auto it = assignment.find(e);
        const std::vector<int>& perm = it == assignment.end() ? identity : it->second;
        for (int i = 0; i < d; ++i) {
            edges.emplace(sheet(e, i), Endpoints(sheet(ends.first, i), sheet(ends.second, perm[i])));
            edge_map.emplace(sheet(e, i), EdgeImage::edge(e));
        }
    }

    // Restrict to the component of the first sheet when disconnected.
    std::map<VertexId, std::vector<EdgeId>> incidence;
    for (const auto& [e, ends] : edges) {
        incidence[ends.first].push_back(e);
        if (!ends.is_loop()) incidence[ends.second].push_back(e);
    }
    std::set<VertexId> component;
    std::deque<VertexId> queue{sheet(*base.vertices().begin(), 0)};
    component.insert(queue.front());
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (const auto& e : incidence[v]) {
            VertexId u = edges.at(e).other(v);
            if (component.insert(u).second) queue.push_back(u);
        }
    }
    if (component.size() != vertices.size()) {
        std::erase_if(vertices, [&](const VertexId& v) { return !component.count(v); });
        std::erase_if(vertex_map, [&](const auto& kv) { return !component.count(kv.first); });
        std::erase_if(edges, [&](const auto& kv) { return !component.count(kv.second.first); });
        std::erase_if(edge_map, [&](const auto& kv) { return !edges.count(kv.first); });
    }
    return GraphMorphism(Multigraph(std::move(vertices), std::move(edges)), base,
                         std::move(vertex_map), std::move(edge_map));
}

MetricMorphism metric_stretch(const MetricModel& base, long long k) {
    if (k < 1) fail("BadDegree", "stretch factor must be positive");
    std::map<EdgeId, Rational> lengths;
    for (const auto& [e, len] : base.lengths()) lengths.emplace(e, len / k);
    return MetricMorphism(MetricModel(base.graph(), std::move(lengths)), base,
                          identity_vertex_map(base.graph()), identity_edge_map(base.graph()));
}

Multigraph random_multigraph(std::mt19937_64& rng, int max_vertices, int max_extra_edges,
                             bool allow_loops) {
    if (max_vertices < 1) fail("BadBound", "vertex bound must be positive");
    std::uint64_t n = 1 + pick(rng, max_vertices);
    std::set<VertexId> vertices;
    std::map<EdgeId, Endpoints> edges;
    std::vector<VertexId> order;
    for (std::uint64_t i = 1; i <= n; ++i) {
        order.push_back("v" + std::to_string(i));
        vertices.insert(order.back());
    }
    int next_edge = 1;
    for (std::uint64_t i = 1; i < n; ++i)
        edges.emplace("e" + std::to_string(next_edge++),
                      Endpoints(order[i], order[pick(rng, i)]));
    std::uint64_t extras = pick(rng, max_extra_edges + 1);
    for (std::uint64_t i = 0; i < extras; ++i) {
        VertexId a = order[pick(rng, n)];
        VertexId b = order[pick(rng, n)];
        if (a == b && (!allow_loops || n == 0)) {
            if (n == 1) continue;
            b = order[(std::find(order.begin(), order.end(), a) - order.begin() + 1) % n];
        }
        edges.emplace("e" + std::to_string(next_edge++), Endpoints(a, b));
    }
    return Multigraph(std::move(vertices), std::move(edges));
}

namespace {

std::map<EdgeId, std::vector<int>> random_assignment(std::mt19937_64& rng, const Multigraph& g,
                                                     int d) {
    std::map<EdgeId, std::vector<int>> out;
    for (const auto& [e, ends] : g.edges()) {
        std::vector<int> perm(d);
        for (int i = 0; i < d; ++i) perm[i] = i;
        for (int i = d - 1; i > 0; --i)
            std::swap(perm[i], perm[pick(rng, i + 1)]);
        out.emplace(e, std::move(perm));
    }
    return out;
}

/// Smallest weights making the weighted harmonicity slack nonnegative at
/// every vertex, plus an occasional +1 so strict inequality also occurs.
std::map<VertexId, long long> harmonic_weights(std::mt19937_64& rng, const GraphMorphism& cover,
                                               long long k,
                                               const std::map<VertexId, long long>& target_weights,
                                               int max_weight) {
    std::map<VertexId, long long> out;
    for (const auto& v : cover.source().vertices()) {
        long long m = k;  // M = k: one preimage edge of slope k per target edge
        long long excess = cover.source().valency(v) * (k - 1);
        auto wt = target_weights.find(cover.apply(v));
        long long w1 = wt == target_weights.end() ? 0 : wt->second;
        long long need = m * w1 - m + 1 + (excess + 1) / 2;
        out.emplace(v, std::max<long long>(0, need) + pick(rng, 2) * std::min(1, max_weight));
    }
    return out;
}

}  // namespace

RandomInstance random_instance(const GenSpec& spec) {
    RandomInstance out;
    out.category = spec.category;
    std::mt19937_64 rng(spec.seed);
    rng.discard(static_cast<int>(spec.category) + 1);

    bool finite = spec.category == Category::finite;
    int min_vertices = finite ? 1 : 2;
    Multigraph target = random_multigraph(rng, std::max(min_vertices, spec.max_vertices),
                                          spec.max_extra_edges, finite);
    while (target.edges().empty())
        target = random_multigraph(rng, std::max(min_vertices, spec.max_vertices),
                                   spec.max_extra_edges, finite);
    int d = 1 + static_cast<int>(pick(rng, spec.max_degree));
    GraphMorphism cover = permutation_cover(target, d, random_assignment(rng, target, d));
    if (finite) {
        out.finite = std::move(cover);
        return out;
    }

    long long k = 1 + static_cast<long long>(pick(rng, spec.max_degree));
    std::map<VertexId, long long> target_weights;
    for (const auto& v : target.vertices()) {
        long long w = pick(rng, spec.max_weight + 1);
        if (w != 0) target_weights.emplace(v, w);
    }
    std::map<VertexId, long long> source_weights =
        harmonic_weights(rng, cover, k, target_weights, spec.max_weight);

    if (spec.category == Category::weighted) {
        std::map<EdgeId, long long> indices;
        for (const auto& [e, ends] : cover.source().edges()) indices.emplace(e, k);
        out.weighted = IndexedMorphism(WeightedGraph(cover.source(), source_weights),
                                       WeightedGraph(cover.target(), target_weights),
                                       cover.vertex_map(), cover.edge_map(), std::move(indices));
        return out;
    }

    std::map<EdgeId, Rational> target_lengths;
    for (const auto& [e, ends] : target.edges())
        target_lengths.emplace(e, Rational(1 + pick(rng, 5), 1 + pick(rng, 3)));
    std::map<EdgeId, Rational> source_lengths;
    for (const auto& [e, img] : cover.edge_map())
        source_lengths.emplace(e, target_lengths.at(img.id) / k);
    MetricModel source_model(cover.source(), std::move(source_lengths));
    MetricModel target_model(target, std::move(target_lengths));

    if (spec.category == Category::metric) {
        out.metric =
            MetricMorphism(std::move(source_model), std::move(target_model), cover.vertex_map(),
                           cover.edge_map());
        return out;
    }

    WeightedMetricGraph source_wm(source_model, source_weights);
    WeightedMetricGraph target_wm(target_model, target_weights);
    if (spec.category == Category::weighted_metric) {
        out.weighted_metric = WeightedMetricMorphism(std::move(source_wm), std::move(target_wm),
                                                     cover.vertex_map(), cover.edge_map());
        return out;
    }

    std::map<VertexId, long long> source_genus;
    std::map<VertexId, long long> target_genus;
    for (const auto& v : target.vertices()) target_genus.emplace(v, pick(rng, spec.max_curve_genus + 1));
    for (const auto& v : cover.source().vertices())
        source_genus.emplace(v, pick(rng, spec.max_curve_genus + 1));
    std::map<VertexId, std::map<EdgeId, CurvePointId>> source_red;
    std::map<VertexId, std::map<EdgeId, CurvePointId>> target_red;
    for (const auto& v : cover.source().vertices())
        for (const auto& e : cover.source().incident_edges(v)) source_red[v].emplace(e, e);
    for (const auto& v : target.vertices())
        for (const auto& e : target.incident_edges(v)) target_red[v].emplace(e, e);
    MetrizedComplex source_cx(source_wm, std::move(source_genus), std::move(source_red));
    MetrizedComplex target_cx(target_wm, std::move(target_genus), std::move(target_red));
    std::map<VertexId, CurveCover> covers;
    for (const auto& v : cover.source().vertices()) {
        CurveCover cv;
        cv.degree = k;
        for (const auto& e : cover.source().incident_edges(v)) {
            cv.point_map.emplace(e, cover.apply_edge(e).id);
            cv.ram_index.emplace(e, k);
        }
        covers.emplace(v, std::move(cv));
    }
    out.complex = ComplexMorphism(std::move(source_cx), std::move(target_cx), cover.vertex_map(),
                                  cover.edge_map(), std::move(covers));
    return out;
}

}  // namespace hurwitz
