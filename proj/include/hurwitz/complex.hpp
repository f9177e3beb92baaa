#pragma once

#include <map>
#include <optional>
#include <string>

#include "hurwitz/divisor.hpp"
#include "hurwitz/metric_graph.hpp"
#include "hurwitz/morphism.hpp"

namespace hurwitz {

using CurvePointId = std::string;
using CurveDivisor = Divisor<CurvePointId>;

/// Metrized complex of curves: a loopless vertex-weighted metric model, a
/// curve genus g_v per vertex, and for each vertex an injective reduction map
/// from its incident edges to marked points of its curve. Curves themselves
/// are abstract; only their genus and marked points enter the calculus.
class MetrizedComplex {
public:
    MetrizedComplex(WeightedMetricGraph base, std::map<VertexId, long long> curve_genus,
                    std::map<VertexId, std::map<EdgeId, CurvePointId>> reductions);

    const WeightedMetricGraph& base() const { return base_; }
    const std::map<VertexId, long long>& curve_genera() const { return curve_genus_; }
    long long curve_genus(const VertexId& v) const;
    const std::map<VertexId, std::map<EdgeId, CurvePointId>>& reductions() const {
        return reductions_;
    }
    const std::map<EdgeId, CurvePointId>& reduction(const VertexId& v) const;
    const CurvePointId& marked_point(const VertexId& v, const EdgeId& e) const;
    /// A_v: the marked-point divisor, one point per incident edge.
    CurveDivisor marked_divisor(const VertexId& v) const;

    bool operator==(const MetrizedComplex&) const = default;

private:
    WeightedMetricGraph base_;
    std::map<VertexId, long long> curve_genus_;  // only nonzero entries stored
    std::map<VertexId, std::map<EdgeId, CurvePointId>> reductions_;
};

long long genus_complex(const MetrizedComplex& c);

/// Data of a finite cover C_v -> C'_{phi(v)}: its degree, the images of
/// marked points of C_v that lie over marked points, and the ramification
/// index at each such point. A point of C_v absent from point_map is asserted
/// to lie over no marked point of the target.
struct CurveCover {
    long long degree = 1;
    std::map<CurvePointId, CurvePointId> point_map;
    std::map<CurvePointId, long long> ram_index;

    bool operator==(const CurveCover&) const = default;
};

/// Morphism of metrized complexes: a morphism of the underlying weighted
/// metric graphs plus a curve cover for each source vertex of positive
/// horizontal multiplicity. Construction checks only structural sanity; the
/// compatibility conditions are checked by validate_harmonic_complex.
class ComplexMorphism {
public:
    ComplexMorphism(MetrizedComplex source, MetrizedComplex target,
                    std::map<VertexId, VertexId> vertex_map,
                    std::map<EdgeId, EdgeImage> edge_map,
                    std::map<VertexId, CurveCover> covers);

    const MetrizedComplex& source() const { return source_; }
    const MetrizedComplex& target() const { return target_; }
    const WeightedMetricMorphism& base() const { return base_; }
    const std::map<VertexId, CurveCover>& covers() const { return covers_; }
    const CurveCover& cover(const VertexId& v) const;

    bool operator==(const ComplexMorphism&) const = default;

private:
    MetrizedComplex source_;
    MetrizedComplex target_;
    WeightedMetricMorphism base_;
    std::map<VertexId, CurveCover> covers_;
};

/// Outcome of the full harmonicity check: the metric balance certificate, the
/// weighted slack, and the first violated cover compatibility condition (if
/// any) in a human-readable form.
struct ComplexCertificate {
    bool valid = false;
    HarmonicityCertificate graph;
    HarmonicSlack slack;
    std::optional<std::string> reason;
};

/// Checks, in order: metric balance of the underlying morphism, the weighted
/// harmonicity inequality, cover presence exactly at vertices of positive
/// multiplicity, image and ramification compatibility of marked points, full
/// marking of fibers over marked points, and deg(phi_v) = M(v).
ComplexCertificate validate_harmonic_complex(const ComplexMorphism& m);

/// Degree of the underlying metric morphism, cross-checked against the sum of
/// cover degrees over every vertex fiber.
long long degree_complex(const ComplexMorphism& m);

/// Part of a divisor living on one curve C_v: named marked points plus a
/// degree of unspecified further points (used for canonical classes K_v,
/// which are only pinned down up to linear equivalence).
struct CurvePart {
    CurveDivisor points;
    long long symbolic_degree = 0;

    long long degree() const { return points.degree() + symbolic_degree; }
    bool operator==(const CurvePart&) const = default;
};

/// Divisor on a metrized complex: coefficients at model vertices and interior
/// points of the metric graph, plus a curve part per vertex.
struct ComplexDivisor {
    VertexDivisor graphical;
    std::map<VertexId, CurvePart> curves;

    long long degree() const;
    bool operator==(const ComplexDivisor&) const = default;
};

ComplexDivisor operator+(const ComplexDivisor& a, const ComplexDivisor& b);
ComplexDivisor operator-(const ComplexDivisor& a, const ComplexDivisor& b);

/// Gamma-part: graphical coefficients plus, at each vertex, the degree of its
/// curve part.
VertexDivisor gamma_part(const ComplexDivisor& d);

/// K = sum_v (K_v + A_v) + sum_v 2w(v)(v), with each K_v kept symbolic of
/// degree 2 g_v - 2 and the weight term charged to the vertex.
ComplexDivisor canonical_divisor_complex(const MetrizedComplex& c);

/// Gamma-part of the weightless canonical divisor: sum_v (val(v)+2g_v-2)(v).
VertexDivisor canonical_gamma_part(const MetrizedComplex& c);

/// Pullback of a divisor supported on model vertices (graphically) and on
/// marked target curve points or symbolic classes. Charging an interior edge
/// point or an unmarked curve point raises UnsupportedPoint/UndeclaredFiber,
/// since the cover data does not determine those fibers.
ComplexDivisor pullback(const ComplexMorphism& m, const ComplexDivisor& d);

}  // namespace hurwitz
