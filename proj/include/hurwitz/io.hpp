#pragma once

#include <optional>
#include <string>
#include <variant>

#include "hurwitz/complex.hpp"
#include "hurwitz/metric_graph.hpp"
#include "hurwitz/morphism.hpp"
#include "hurwitz/multigraph.hpp"
#include "hurwitz/theorems.hpp"
#include "hurwitz/weighted_graph.hpp"

namespace hurwitz {

/// Tagged morphism of any category, as read from a morphism document.
struct MorphismDoc {
    Category category = Category::finite;
    std::optional<GraphMorphism> finite;
    std::optional<IndexedMorphism> weighted;
    std::optional<MetricMorphism> metric;
    std::optional<WeightedMetricMorphism> weighted_metric;
    std::optional<ComplexMorphism> complex;

    bool operator==(const MorphismDoc&) const = default;
};

/// One interchange document. Kinds: graph, weighted_graph, metric_graph
/// (plain or pseudo), weighted_metric_graph, complex, morphism, divisor.
/// Plain vertex divisors are complex divisors without curve parts.
struct Document {
    std::variant<Multigraph, WeightedGraph, MetricModel, PseudoMetricGraph, WeightedMetricGraph,
                 MetrizedComplex, MorphismDoc, ComplexDivisor>
        value;

    bool operator==(const Document&) const = default;
};

const std::string& kind_of(const Document& doc);

/// Parses a UTF-8 document. Syntax problems raise SyntaxError with line and
/// column; structural problems SchemaError with a path; violated object
/// invariants InvariantError carrying the underlying code.
Document parse_document(const std::string& text);

/// Canonical serialization: keys sorted, rationals in lowest terms, zero
/// coefficients and empty optional sections omitted, trailing newline.
std::string serialize(const Document& doc);

/// Reports are output-only documents (kinds rh_report / smt_report).
std::string serialize_report(const RHReport& report);
std::string serialize_report(const SMTReport& report);

}  // namespace hurwitz
