#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "hurwitz/complex.hpp"
#include "hurwitz/morphism.hpp"
#include "hurwitz/theorems.hpp"

namespace hurwitz {

/// Bounds and seed for deterministic instance generation. Identical specs
/// produce identical instances.
struct GenSpec {
    Category category = Category::finite;
    int max_vertices = 8;
    int max_extra_edges = 4;
    int max_weight = 3;
    int max_curve_genus = 3;
    int max_degree = 4;
    std::uint64_t seed = 0;
};

GraphMorphism identity_morphism(const Multigraph& g);
IndexedMorphism identity_morphism(const WeightedGraph& g);
MetricMorphism identity_morphism(const MetricModel& m);
WeightedMetricMorphism identity_morphism(const WeightedMetricGraph& g);
ComplexMorphism identity_morphism(const MetrizedComplex& c);

/// Contracts the side of a cut vertex to the vertex itself, identity on the
/// rest. `side` lists the contracted vertices (the cut vertex excluded). The
/// result is harmonic of degree 1; contracted vertices have multiplicity 0.
GraphMorphism collapsing_morphism(const Multigraph& g, const VertexId& cut,
                                  const std::set<VertexId>& side);

/// Derived d-sheeted cover: vertices v@i, and each base edge lifted along its
/// permutation (entries are a permutation of 0..d-1; absent edges lift along
/// the identity). If the derived graph is disconnected, the component
/// containing the first sheet of the smallest base vertex is returned, itself
/// a cover of smaller degree. The projection is harmonic with M = 1.
GraphMorphism permutation_cover(const Multigraph& base, int d,
                                const std::map<EdgeId, std::vector<int>>& assignment);

/// Same combinatorics with every length divided by k; the identity map has
/// every slope equal to k and degree k.
MetricMorphism metric_stretch(const MetricModel& base, long long k);

/// Random connected multigraph: a spanning tree plus up to max_extra_edges
/// extra edges (loops permitted only when allow_loops).
Multigraph random_multigraph(std::mt19937_64& rng, int max_vertices, int max_extra_edges,
                             bool allow_loops);

/// One generated object of each flavor, as needed by the categories.
struct RandomInstance {
    Category category = Category::finite;
    std::optional<GraphMorphism> finite;
    std::optional<IndexedMorphism> weighted;
    std::optional<MetricMorphism> metric;
    std::optional<WeightedMetricMorphism> weighted_metric;
    std::optional<ComplexMorphism> complex;
};

/// Deterministic guaranteed-harmonic instance: a permutation cover of a
/// random target composed with a uniform index/slope stretch, decorated with
/// weights satisfying the harmonicity inequalities and, for complexes, with
/// curve genera and compatible covers. Every vertex has multiplicity >= 1.
RandomInstance random_instance(const GenSpec& spec);

}  // namespace hurwitz
