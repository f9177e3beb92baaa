#include "hurwitz/theorems.hpp"

#include <array>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

const std::array<std::string, 5> kCategoryNames = {"finite", "weighted", "metric",
                                                   "weighted_metric", "complex"};

/// rhs = g - 1 + |E cap V| with each category's signed correction terms.
Rational rhs_value(Category cat, long long g, long long preimage,
                   const std::map<std::string, Rational>& terms) {
    auto term = [&](const char* name) {
        auto it = terms.find(name);
        return it == terms.end() ? Rational(0) : it->second;
    };
    Rational rhs = Rational(g - 1 + preimage);
    switch (cat) {
        case Category::finite:
            rhs -= term("half_vertical");
            break;
        case Category::weighted:
            rhs += term("half_index_excess") - term("weight");
            break;
        case Category::metric:
            rhs += term("half_slope_excess");
            break;
        case Category::weighted_metric:
            rhs += term("half_slope_excess") - term("weight");
            break;
        case Category::complex:
            rhs -= term("curve") + term("weight") + term("half_valence");
            break;
    }
    return rhs;
}

SMTReport assemble_smt(Category cat, const std::set<VertexId>& targets, const Multigraph& target,
                       const std::map<VertexId, VertexId>& vertex_map,
                       const std::map<VertexId, long long>& horizontal, long long degree,
                       long long genus_source, long long genus_target,
                       std::map<std::string, Rational> terms) {
    if (targets.empty()) fail("EmptyTargets", "at least one target vertex is required");
    for (const auto& a : targets)
        if (!target.has_vertex(a)) fail("UnknownTarget", "no target vertex '" + a + "'");
    SMTReport out;
    out.category = cat;
    out.targets = targets;
    out.q = static_cast<long long>(targets.size());
    out.degree = degree;
    out.genus_source = genus_source;
    out.genus_target = genus_target;
    for (const auto& [v, image] : vertex_map) {
        long long mv = horizontal.at(v);
        out.r_total += mv - 1;
        if (targets.count(image)) {
            ++out.preimage_vertices;
            out.r_subset += mv - 1;
        }
    }
    out.terms = std::move(terms);
    out.lhs = Rational(out.q + genus_target - 1) * degree;
    out.rhs = rhs_value(cat, genus_source, out.preimage_vertices, out.terms);
    out.defect = out.rhs - out.lhs;
    out.holds = out.defect >= 0;
    out.identity_ok = out.r_subset == out.q * degree - out.preimage_vertices &&
                      out.defect == Rational(out.r_total - out.r_subset);
    out.degenerate = degree == 0;
    return out;
}

}  // namespace

const std::string& category_name(Category c) { return kCategoryNames[static_cast<int>(c)]; }

Category parse_category(const std::string& name) {
    for (std::size_t i = 0; i < kCategoryNames.size(); ++i)
        if (kCategoryNames[i] == name) return static_cast<Category>(i);
    fail("UnknownCategory", "no category named '" + name + "'");
}

VertexDivisor ramification_divisor(const GraphMorphism& m) {
    GraphMorphism loopless =
        (m.source().has_loops() || m.target().has_loops()) ? desingularize(m).morphism : m;
    HarmonicityCertificate cert = is_harmonic_finite(loopless);
    if (!cert.balanced)
        fail("NotHarmonic", "morphism is not harmonic at vertex '" + cert.failure->vertex + "'");
    VertexDivisor r;
    for (const auto& v : loopless.source().vertices())
        r.add(v, 2 * (cert.horizontal.at(v) - 1) + cert.vertical.at(v));
    return r;
}

VertexDivisor ramification_divisor(const IndexedMorphism& m) {
    HarmonicityCertificate cert = is_pseudo_harmonic_indexed(m);
    if (!cert.balanced)
        fail("NotHarmonic",
             "morphism is not pseudo-harmonic at vertex '" + cert.failure->vertex + "'");
    VertexDivisor r;
    for (const auto& v : m.source().graph().vertices()) {
        long long mv = cert.horizontal.at(v);
        long long excess = 0;
        for (const auto& e : m.source().graph().incident_edges(v)) excess += m.index(e) - 1;
        r.add(v, 2 * (mv - 1 + m.source().weight(v) - mv * m.target().weight(m.base().apply(v))) -
                     excess);
    }
    return r;
}

VertexDivisor ramification_divisor(const MetricMorphism& m) {
    HarmonicityCertificate cert = is_harmonic_metric(m);
    if (!cert.balanced)
        fail("NotHarmonic", "morphism is not harmonic at vertex '" + cert.failure->vertex + "'");
    VertexDivisor r;
    for (const auto& v : m.source().graph().vertices()) {
        long long excess = 0;
        for (const auto& e : m.source().graph().incident_edges(v)) excess += m.slopes().at(e) - 1;
        r.add(v, 2 * (cert.horizontal.at(v) - 1) - excess);
    }
    return r;
}

VertexDivisor ramification_divisor(const WeightedMetricMorphism& m) {
    HarmonicityCertificate cert = is_pseudo_harmonic_weighted_metric(m);
    if (!cert.balanced)
        fail("NotHarmonic",
             "morphism is not pseudo-harmonic at vertex '" + cert.failure->vertex + "'");
    const GraphMorphism& base = m.metric().base();
    VertexDivisor r;
    for (const auto& v : base.source().vertices()) {
        long long mv = cert.horizontal.at(v);
        long long excess = 0;
        for (const auto& e : base.source().incident_edges(v))
            excess += m.metric().slopes().at(e) - 1;
        r.add(v, 2 * (mv - 1 + m.source().weight(v) - mv * m.target().weight(base.apply(v))) -
                     excess);
    }
    return r;
}

ComplexDivisor ramification_divisor(const ComplexMorphism& m) {
    ComplexCertificate cert = validate_harmonic_complex(m);
    if (!cert.valid) fail("NotHarmonic", *cert.reason);
    return canonical_divisor_complex(m.source()) -
           pullback(m, canonical_divisor_complex(m.target()));
}

namespace {

RHReport rh_common(Category cat, long long degree, long long genus_source, long long genus_target,
                   VertexDivisor ramification, const VertexDivisor& canonical_source,
                   const VertexDivisor& pulled_back) {
    RHReport out;
    out.category = cat;
    out.degree = degree;
    out.genus_source = genus_source;
    out.genus_target = genus_target;
    out.residual = canonical_source - pulled_back - ramification;
    out.degree_residual =
        (2 * genus_source - 2) - degree * (2 * genus_target - 2) - ramification.degree();
    out.ramification = std::move(ramification);
    out.holds = out.residual.is_zero() && out.degree_residual == 0;
    out.degenerate = degree == 0;
    return out;
}

}  // namespace

RHReport check_rh(const GraphMorphism& m) {
    GraphMorphism loopless =
        (m.source().has_loops() || m.target().has_loops()) ? desingularize(m).morphism : m;
    long long degree = degree_finite(loopless);
    RHReport out = rh_common(Category::finite, degree, loopless.source().genus(),
                             loopless.target().genus(), ramification_divisor(loopless),
                             canonical_divisor(loopless.source()),
                             pullback(loopless, canonical_divisor(loopless.target())));
    if (out.holds && degree >= 1)
        out.holds = 2 * out.genus_source - 2 >= degree * (2 * out.genus_target - 2) &&
                    out.genus_source >= out.genus_target;
    return out;
}

RHReport check_rh(const IndexedMorphism& m) {
    return rh_common(Category::weighted, degree_indexed(m), genus_weighted(m.source()),
                     genus_weighted(m.target()), ramification_divisor(m),
                     canonical_divisor_weighted(m.source()),
                     pullback(m, canonical_divisor_weighted(m.target())));
}

RHReport check_rh(const MetricMorphism& m) {
    return rh_common(Category::metric, degree_metric(m), genus_metric(m.source()),
                     genus_metric(m.target()), ramification_divisor(m),
                     canonical_divisor_metric(m.source()),
                     pullback(m, canonical_divisor_metric(m.target())));
}

RHReport check_rh(const WeightedMetricMorphism& m) {
    return rh_common(Category::weighted_metric, degree_weighted_metric(m),
                     genus_weighted_metric(m.source()), genus_weighted_metric(m.target()),
                     ramification_divisor(m), canonical_divisor_weighted_metric(m.source()),
                     pullback(m, canonical_divisor_weighted_metric(m.target())));
}

RHReport check_rh(const ComplexMorphism& m) {
    ComplexCertificate cert = validate_harmonic_complex(m);
    if (!cert.valid) fail("NotHarmonic", *cert.reason);
    long long degree = degree_complex(m);
    const GraphMorphism& phi = m.base().metric().base();
    const Multigraph& g = phi.source();
    const Multigraph& g1 = phi.target();
    VertexDivisor gamma_r;
    for (const auto& v : g.vertices()) {
        long long mv = cert.graph.horizontal.at(v);
        const VertexId& v1 = phi.apply(v);
        gamma_r.add(v, 2 * (mv - 1 + m.source().curve_genus(v) - mv * m.target().curve_genus(v1)) +
                           (g.valency(v) - mv * g1.valency(v1)) +
                           2 * (m.source().base().weight(v) - m.target().base().weight(v1) * mv));
    }
    ComplexDivisor k = canonical_divisor_complex(m.source());
    ComplexDivisor pulled = pullback(m, canonical_divisor_complex(m.target()));
    RHReport out = rh_common(Category::complex, degree, genus_complex(m.source()),
                             genus_complex(m.target()), std::move(gamma_r), gamma_part(k),
                             gamma_part(pulled));
    out.support_level = false;
    return out;
}

SMTReport smt_report(const GraphMorphism& m, const std::set<VertexId>& targets) {
    GraphMorphism loopless =
        (m.source().has_loops() || m.target().has_loops()) ? desingularize(m).morphism : m;
    HarmonicityCertificate cert = is_harmonic_finite(loopless);
    long long degree = degree_finite(loopless);
    long long vertical_total = 0;
    for (const auto& [v, count] : cert.vertical) vertical_total += count;
    return assemble_smt(Category::finite, targets, loopless.target(), loopless.vertex_map(),
                        cert.horizontal, degree, loopless.source().genus(),
                        loopless.target().genus(),
                        {{"half_vertical", Rational(vertical_total, 2)}});
}

SMTReport smt_report(const IndexedMorphism& m, const std::set<VertexId>& targets) {
    HarmonicityCertificate cert = is_pseudo_harmonic_indexed(m);
    long long degree = degree_indexed(m);
    long long weight_term = 0;
    long long excess = 0;
    for (const auto& v : m.source().graph().vertices()) {
        weight_term +=
            m.source().weight(v) - cert.horizontal.at(v) * m.target().weight(m.base().apply(v));
        for (const auto& e : m.source().graph().incident_edges(v)) excess += m.index(e) - 1;
    }
    return assemble_smt(Category::weighted, targets, m.target().graph(), m.base().vertex_map(),
                        cert.horizontal, degree, genus_weighted(m.source()),
                        genus_weighted(m.target()),
                        {{"weight", Rational(weight_term)},
                         {"half_index_excess", Rational(excess, 2)}});
}

SMTReport smt_report(const MetricMorphism& m, const std::set<VertexId>& targets) {
    HarmonicityCertificate cert = is_harmonic_metric(m);
    long long degree = degree_metric(m);
    long long excess = 0;
    for (const auto& v : m.source().graph().vertices())
        for (const auto& e : m.source().graph().incident_edges(v))
            excess += m.slopes().at(e) - 1;
    return assemble_smt(Category::metric, targets, m.target().graph(), m.base().vertex_map(),
                        cert.horizontal, degree, genus_metric(m.source()),
                        genus_metric(m.target()), {{"half_slope_excess", Rational(excess, 2)}});
}

SMTReport smt_report(const WeightedMetricMorphism& m, const std::set<VertexId>& targets) {
    HarmonicityCertificate cert = is_pseudo_harmonic_weighted_metric(m);
    long long degree = degree_weighted_metric(m);
    const GraphMorphism& base = m.metric().base();
    long long weight_term = 0;
    long long excess = 0;
    for (const auto& v : base.source().vertices()) {
        weight_term += m.source().weight(v) - cert.horizontal.at(v) * m.target().weight(base.apply(v));
        for (const auto& e : base.source().incident_edges(v))
            excess += m.metric().slopes().at(e) - 1;
    }
    return assemble_smt(Category::weighted_metric, targets, base.target(), base.vertex_map(),
                        cert.horizontal, degree, genus_weighted_metric(m.source()),
                        genus_weighted_metric(m.target()),
                        {{"weight", Rational(weight_term)},
                         {"half_slope_excess", Rational(excess, 2)}});
}

SMTReport smt_report(const ComplexMorphism& m, const std::set<VertexId>& targets) {
    ComplexCertificate cert = validate_harmonic_complex(m);
    if (!cert.valid) fail("NotHarmonic", *cert.reason);
    long long degree = degree_complex(m);
    const GraphMorphism& phi = m.base().metric().base();
    long long curve_term = 0;
    long long weight_term = 0;
    long long valence_term = 0;
    for (const auto& v : phi.source().vertices()) {
        long long mv = cert.graph.horizontal.at(v);
        const VertexId& v1 = phi.apply(v);
        curve_term += m.source().curve_genus(v) - mv * m.target().curve_genus(v1);
        weight_term += m.source().base().weight(v) - m.target().base().weight(v1) * mv;
        valence_term += phi.source().valency(v) - mv * phi.target().valency(v1);
    }
    return assemble_smt(Category::complex, targets, phi.target(), phi.vertex_map(),
                        cert.graph.horizontal, degree, genus_complex(m.source()),
                        genus_complex(m.target()),
                        {{"curve", Rational(curve_term)},
                         {"weight", Rational(weight_term)},
                         {"half_valence", Rational(valence_term, 2)}});
}

SMTReport smt_arithmetic(Category category, long long q, long long genus_source,
                         long long genus_target, long long degree, long long preimage_vertices,
                         const std::map<std::string, Rational>& corrections) {
    if (q < 1) fail("EmptyTargets", "at least one target vertex is required");
    SMTReport out;
    out.category = category;
    out.q = q;
    out.degree = degree;
    out.genus_source = genus_source;
    out.genus_target = genus_target;
    out.preimage_vertices = preimage_vertices;
    out.terms = corrections;
    out.lhs = Rational(q + genus_target - 1) * degree;
    out.rhs = rhs_value(category, genus_source, preimage_vertices, corrections);
    out.defect = out.rhs - out.lhs;
    out.holds = out.defect >= 0;
    out.r_subset = q * degree - preimage_vertices;
    // Aggregate inputs determine r(G) only through the slack identity.
    Rational total = out.defect + out.r_subset;
    out.identity_ok = denominator(total) == 1;
    out.r_total = out.identity_ok ? static_cast<long long>(numerator(total)) : 0;
    out.degenerate = degree == 0;
    return out;
}

}  // namespace hurwitz
