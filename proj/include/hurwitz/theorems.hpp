#pragma once

#include <map>
#include <set>
#include <string>

#include "hurwitz/complex.hpp"
#include "hurwitz/divisor.hpp"
#include "hurwitz/morphism.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

enum class Category { finite, weighted, metric, weighted_metric, complex };

const std::string& category_name(Category c);
Category parse_category(const std::string& name);

/// Riemann-Hurwitz verification. `ramification` is R on the source vertices
/// (its gamma-part for complexes), `residual` the per-vertex value of
/// K - pullback(K') - R, and `degree_residual` the gap in the identity
/// 2g - 2 = deg (2g' - 2) + deg R. `holds` requires both to vanish; in the
/// finite category with positive degree it additionally requires
/// 2g - 2 >= deg (2g' - 2) and g >= g'. `support_level` is false when part of
/// the check could only be carried out on degrees (symbolic curve classes).
struct RHReport {
    Category category = Category::finite;
    long long degree = 0;
    long long genus_source = 0;
    long long genus_target = 0;
    VertexDivisor ramification;
    VertexDivisor residual;
    long long degree_residual = 0;
    bool holds = false;
    bool degenerate = false;
    bool support_level = true;
};

VertexDivisor ramification_divisor(const GraphMorphism& m);
VertexDivisor ramification_divisor(const IndexedMorphism& m);
VertexDivisor ramification_divisor(const MetricMorphism& m);
VertexDivisor ramification_divisor(const WeightedMetricMorphism& m);
/// K - pullback(K'), with curve parts explicit on marked points and symbolic
/// in the canonical classes.
ComplexDivisor ramification_divisor(const ComplexMorphism& m);

RHReport check_rh(const GraphMorphism& m);
RHReport check_rh(const IndexedMorphism& m);
RHReport check_rh(const MetricMorphism& m);
RHReport check_rh(const WeightedMetricMorphism& m);
RHReport check_rh(const ComplexMorphism& m);

/// Second-main-theorem evaluation for q distinct target vertices. lhs =
/// (q + g' - 1) deg, rhs = g - 1 + |E cap V| plus the category's correction
/// terms (recorded under `terms` with their unsigned paper names). The slack
/// identity defect = r(G) - r(E) and r(E) = q deg - |E cap V| are verified
/// into `identity_ok`.
struct SMTReport {
    Category category = Category::finite;
    long long q = 0;
    std::set<VertexId> targets;
    long long degree = 0;
    long long genus_source = 0;
    long long genus_target = 0;
    long long preimage_vertices = 0;
    long long r_subset = 0;
    long long r_total = 0;
    std::map<std::string, Rational> terms;
    Rational lhs;
    Rational rhs;
    Rational defect;
    bool holds = false;
    bool identity_ok = false;
    bool degenerate = false;
};

SMTReport smt_report(const GraphMorphism& m, const std::set<VertexId>& targets);
SMTReport smt_report(const IndexedMorphism& m, const std::set<VertexId>& targets);
SMTReport smt_report(const MetricMorphism& m, const std::set<VertexId>& targets);
SMTReport smt_report(const WeightedMetricMorphism& m, const std::set<VertexId>& targets);
SMTReport smt_report(const ComplexMorphism& m, const std::set<VertexId>& targets);

/// Pure evaluation of the SMT inequality from aggregate quantities, used to
/// reproduce printed worked examples. Recognized correction names: finite
/// "half_vertical"; weighted "weight", "half_index_excess"; metric
/// "half_slope_excess"; weighted_metric "weight", "half_slope_excess";
/// complex "curve", "weight", "half_valence". Missing names default to 0.
SMTReport smt_arithmetic(Category category, long long q, long long genus_source,
                         long long genus_target, long long degree, long long preimage_vertices,
                         const std::map<std::string, Rational>& corrections);

}  // namespace hurwitz
