#include "hurwitz/complex.hpp"

#include <set>

#include "hurwitz/errors.hpp"

namespace hurwitz {

MetrizedComplex::MetrizedComplex(WeightedMetricGraph base,
                                 std::map<VertexId, long long> curve_genus,
                                 std::map<VertexId, std::map<EdgeId, CurvePointId>> reductions)
    : base_(std::move(base)), curve_genus_(std::move(curve_genus)), reductions_(std::move(reductions)) {
    const Multigraph& g = base_.model().graph();
    for (auto it = curve_genus_.begin(); it != curve_genus_.end();) {
        if (!g.has_vertex(it->first))
            fail("UnknownVertex", "curve genus on undeclared vertex '" + it->first + "'");
        if (it->second < 0) fail("NegativeGenus", "curve genus of '" + it->first + "' is negative");
        it = it->second == 0 ? curve_genus_.erase(it) : std::next(it);
    }
    for (const auto& [v, red] : reductions_)
        if (!g.has_vertex(v)) fail("UnknownVertex", "reduction on undeclared vertex '" + v + "'");
    for (const auto& v : g.vertices()) {
        auto it = reductions_.find(v);
        const std::map<EdgeId, CurvePointId>* red = it == reductions_.end() ? nullptr : &it->second;
        std::set<CurvePointId> seen;
        std::size_t incident = 0;
        for (const auto& e : g.incident_edges(v)) {
            ++incident;
            if (red == nullptr || !red->count(e))
                fail("BadReduction", "vertex '" + v + "' has no marked point for edge '" + e + "'");
            const CurvePointId& x = red->at(e);
            if (x.empty()) fail("BadReduction", "empty marked point id at vertex '" + v + "'");
            if (!seen.insert(x).second)
                fail("BadReduction",
                     "marked point '" + x + "' at vertex '" + v + "' is assigned to two edges");
        }
        if (red != nullptr && red->size() != incident)
            fail("BadReduction", "vertex '" + v + "' has a marked point for a non-incident edge");
        if (red == nullptr && incident == 0) reductions_.emplace(v, std::map<EdgeId, CurvePointId>{});
    }
}

long long MetrizedComplex::curve_genus(const VertexId& v) const {
    if (!base_.model().graph().has_vertex(v)) fail("UnknownVertex", "no vertex '" + v + "'");
    auto it = curve_genus_.find(v);
    return it == curve_genus_.end() ? 0 : it->second;
}

const std::map<EdgeId, CurvePointId>& MetrizedComplex::reduction(const VertexId& v) const {
    auto it = reductions_.find(v);
    if (it == reductions_.end()) fail("UnknownVertex", "no vertex '" + v + "'");
    return it->second;
}

const CurvePointId& MetrizedComplex::marked_point(const VertexId& v, const EdgeId& e) const {
    const auto& red = reduction(v);
    auto it = red.find(e);
    if (it == red.end()) fail("UnknownEdge", "edge '" + e + "' is not incident to '" + v + "'");
    return it->second;
}

CurveDivisor MetrizedComplex::marked_divisor(const VertexId& v) const {
    CurveDivisor out;
    for (const auto& [e, x] : reduction(v)) out.add(x, 1);
    return out;
}

long long genus_complex(const MetrizedComplex& c) {
    long long g = genus_weighted_metric(c.base());
    for (const auto& [v, gv] : c.curve_genera()) g += gv;
    return g;
}

ComplexMorphism::ComplexMorphism(MetrizedComplex source, MetrizedComplex target,
                                 std::map<VertexId, VertexId> vertex_map,
                                 std::map<EdgeId, EdgeImage> edge_map,
                                 std::map<VertexId, CurveCover> covers)
    : source_(std::move(source)),
      target_(std::move(target)),
      base_(source_.base(), target_.base(), std::move(vertex_map), std::move(edge_map)),
      covers_(std::move(covers)) {
    const GraphMorphism& phi = base_.metric().base();
    for (const auto& [v, cover] : covers_) {
        if (!phi.source().has_vertex(v))
            fail("UnknownVertex", "cover on undeclared vertex '" + v + "'");
        if (cover.degree < 1)
            fail("BadCover", "cover at '" + v + "' has nonpositive degree");
        const VertexId& image = phi.apply(v);
        std::set<CurvePointId> source_points;
        for (const auto& [e, x] : source_.reduction(v)) source_points.insert(x);
        std::set<CurvePointId> target_points;
        for (const auto& [e1, x1] : target_.reduction(image)) target_points.insert(x1);
        for (const auto& [x, x1] : cover.point_map) {
            if (!source_points.count(x))
                fail("BadCover", "cover at '" + v + "' maps unmarked point '" + x + "'");
            if (!target_points.count(x1))
                fail("BadCover",
                     "cover at '" + v + "' sends '" + x + "' to unmarked point '" + x1 + "'");
            auto it = cover.ram_index.find(x);
            if (it == cover.ram_index.end())
                fail("BadCover", "cover at '" + v + "' has no ramification index at '" + x + "'");
            if (it->second < 1)
                fail("BadCover", "cover at '" + v + "' has nonpositive ramification at '" + x + "'");
        }
        for (const auto& [x, r] : cover.ram_index)
            if (!cover.point_map.count(x))
                fail("BadCover", "cover at '" + v + "' has a ramification index at '" + x +
                                     "' but no image for it");
    }
}

const CurveCover& ComplexMorphism::cover(const VertexId& v) const {
    auto it = covers_.find(v);
    if (it == covers_.end()) fail("UnknownVertex", "no cover at vertex '" + v + "'");
    return it->second;
}

ComplexCertificate validate_harmonic_complex(const ComplexMorphism& m) {
    ComplexCertificate out;
    out.graph = is_pseudo_harmonic_weighted_metric(m.base());
    if (!out.graph.balanced) {
        out.reason = "underlying metric morphism is not balanced at vertex '" +
                     out.graph.failure->vertex + "'";
        return out;
    }
    out.slack = is_harmonic_weighted_metric(m.base());
    if (!out.slack.harmonic) {
        for (const auto& [v, s] : out.slack.slack)
            if (s < 0) {
                out.reason = "weighted harmonicity inequality fails at vertex '" + v + "'";
                return out;
            }
    }
    const GraphMorphism& phi = m.base().metric().base();
    const auto& slopes = m.base().metric().slopes();
    for (const auto& v : phi.source().vertices()) {
        long long mv = out.graph.horizontal.at(v);
        auto it = m.covers().find(v);
        if (mv == 0) {
            if (it != m.covers().end()) {
                out.reason = "vertex '" + v + "' has multiplicity 0 but carries a cover";
                return out;
            }
            continue;
        }
        if (it == m.covers().end()) {
            out.reason = "vertex '" + v + "' has multiplicity " + std::to_string(mv) +
                         " but no cover";
            return out;
        }
        const CurveCover& cover = it->second;
        if (cover.degree != mv) {
            out.reason = "cover at '" + v + "' has degree " + std::to_string(cover.degree) +
                         " but the multiplicity is " + std::to_string(mv);
            return out;
        }
        const VertexId& image = phi.apply(v);
        for (const auto& e : phi.source().incident_edges(v)) {
            if (slopes.at(e) == 0) continue;
            const CurvePointId& x = m.source().marked_point(v, e);
            const CurvePointId& expected = m.target().marked_point(image, phi.apply_edge(e).id);
            auto px = cover.point_map.find(x);
            if (px == cover.point_map.end()) {
                out.reason = "cover at '" + v + "' does not map the marked point '" + x +
                             "' of horizontal edge '" + e + "'";
                return out;
            }
            if (px->second != expected) {
                out.reason = "cover at '" + v + "' sends '" + x + "' to '" + px->second +
                             "', expected '" + expected + "' (edge '" + e + "')";
                return out;
            }
            if (cover.ram_index.at(x) != slopes.at(e)) {
                out.reason = "ramification at '" + x + "' is " +
                             std::to_string(cover.ram_index.at(x)) + ", expected the slope " +
                             std::to_string(slopes.at(e)) + " of edge '" + e + "'";
                return out;
            }
        }
        // Fibers over marked target points must consist of marked points, so
        // the declared ramification indices over each must sum to the degree.
        for (const auto& [e1, x1] : m.target().reduction(image)) {
            long long total = 0;
            for (const auto& [x, y] : cover.point_map)
                if (y == x1) total += cover.ram_index.at(x);
            if (total != cover.degree) {
                out.reason = "fiber of '" + x1 + "' under the cover at '" + v +
                             "' has total ramification " + std::to_string(total) + ", expected " +
                             std::to_string(cover.degree);
                return out;
            }
        }
    }
    out.valid = out.slack.harmonic;
    if (!out.valid && !out.reason) out.reason = "weighted harmonicity inequality fails";
    return out;
}

long long degree_complex(const ComplexMorphism& m) {
    ComplexCertificate cert = validate_harmonic_complex(m);
    if (!cert.valid) fail("NotHarmonic", *cert.reason);
    long long degree = degree_weighted_metric(m.base());
    const GraphMorphism& phi = m.base().metric().base();
    std::map<VertexId, long long> fiber_degrees;
    for (const auto& v1 : phi.target().vertices()) fiber_degrees[v1] = 0;
    for (const auto& [v, cover] : m.covers()) fiber_degrees[phi.apply(v)] += cover.degree;
    for (const auto& [v1, total] : fiber_degrees)
        if (total != degree)
            fail("InconsistentDegree", "cover degrees over '" + v1 + "' sum to " +
                                           std::to_string(total) + ", expected " +
                                           std::to_string(degree));
    return degree;
}

long long ComplexDivisor::degree() const {
    long long d = graphical.degree();
    for (const auto& [v, part] : curves) d += part.degree();
    return d;
}

ComplexDivisor operator+(const ComplexDivisor& a, const ComplexDivisor& b) {
    ComplexDivisor out = a;
    out.graphical = a.graphical + b.graphical;
    for (const auto& [v, part] : b.curves) {
        CurvePart& mine = out.curves[v];
        mine.points = mine.points + part.points;
        mine.symbolic_degree += part.symbolic_degree;
    }
    for (auto it = out.curves.begin(); it != out.curves.end();)
        it = (it->second.points.is_zero() && it->second.symbolic_degree == 0) ? out.curves.erase(it)
                                                                              : std::next(it);
    return out;
}

ComplexDivisor operator-(const ComplexDivisor& a, const ComplexDivisor& b) {
    ComplexDivisor negated = b;
    negated.graphical = -b.graphical;
    for (auto& [v, part] : negated.curves) {
        part.points = -part.points;
        part.symbolic_degree = -part.symbolic_degree;
    }
    return a + negated;
}

VertexDivisor gamma_part(const ComplexDivisor& d) {
    VertexDivisor out = d.graphical;
    for (const auto& [v, part] : d.curves) out.add(v, part.degree());
    return out;
}

ComplexDivisor canonical_divisor_complex(const MetrizedComplex& c) {
    ComplexDivisor out;
    for (const auto& v : c.base().model().graph().vertices()) {
        CurvePart part;
        part.points = c.marked_divisor(v);
        part.symbolic_degree = 2 * c.curve_genus(v) - 2;
        out.curves[v] = std::move(part);
        out.graphical.add(v, 2 * c.base().weight(v));
    }
    return out;
}

VertexDivisor canonical_gamma_part(const MetrizedComplex& c) {
    VertexDivisor out;
    const Multigraph& g = c.base().model().graph();
    for (const auto& v : g.vertices()) out.add(v, g.valency(v) + 2 * c.curve_genus(v) - 2);
    return out;
}

ComplexDivisor pullback(const ComplexMorphism& m, const ComplexDivisor& d) {
    ComplexCertificate cert = validate_harmonic_complex(m);
    if (!cert.valid) fail("NotHarmonic", *cert.reason);
    const GraphMorphism& phi = m.base().metric().base();
    ComplexDivisor out;
    for (const auto& [p, c] : d.graphical.coefficients())
        if (!phi.target().has_vertex(p))
            fail("UnsupportedPoint",
                 "graphical coefficient at '" + p + "', which is not a model vertex");
    for (const auto& v : phi.source().vertices()) {
        const VertexId& image = phi.apply(v);
        long long mv = cert.graph.horizontal.at(v);
        long long gc = d.graphical.at(image);
        if (gc != 0) out.graphical.add(v, mv * gc);
        auto pit = d.curves.find(image);
        if (pit == d.curves.end() || mv == 0) continue;
        const CurvePart& part = pit->second;
        const CurveCover& cover = m.covers().at(v);
        CurvePart lifted;
        lifted.symbolic_degree = cover.degree * part.symbolic_degree;
        for (const auto& [x1, c] : part.points.coefficients()) {
            bool marked = false;
            for (const auto& [e1, y1] : m.target().reduction(image)) marked = marked || y1 == x1;
            if (!marked)
                fail("UndeclaredFiber", "point '" + x1 + "' on the curve at '" + image +
                                            "' is unmarked; its fiber is not determined");
            for (const auto& [x, y] : cover.point_map)
                if (y == x1) lifted.points.add(x, cover.ram_index.at(x) * c);
        }
        if (!lifted.points.is_zero() || lifted.symbolic_degree != 0)
            out.curves[v] = std::move(lifted);
    }
    return out;
}

}  // namespace hurwitz
