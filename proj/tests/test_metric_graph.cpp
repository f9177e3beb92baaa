#include <doctest.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/metric_graph.hpp"

using namespace hurwitz;

namespace {

MetricModel theta() {
    Multigraph g({"a", "b"}, {{"e1", Endpoints("a", "b")},
                              {"e2", Endpoints("a", "b")},
                              {"e3", Endpoints("a", "b")}});
    return MetricModel(g, {{"e1", Rational(1)}, {"e2", Rational(1, 2)}, {"e3", Rational(2)}});
}

}  // namespace

TEST_CASE("lengths must be positive") {
    Multigraph seg({"a", "b"}, {{"e", Endpoints("a", "b")}});
    CHECK_THROWS_AS(MetricModel(seg, {{"e", Rational(0)}}), Error);
    CHECK_THROWS_AS(MetricModel(seg, {{"e", Rational(-1, 2)}}), Error);
    CHECK_THROWS_AS(MetricModel(seg, {}), Error);  // missing length
}

TEST_CASE("refine preserves genus and total length") {
    MetricModel m = theta();
    MetricModel r = refine(m, "e3", Rational(1, 3));
    CHECK(genus_metric(r) == genus_metric(m));
    CHECK(r.total_length() == m.total_length());
    CHECK(r.graph().has_vertex("sub:e3:1/3"));
    CHECK(r.length("e3:a") == Rational(1, 3));
    CHECK(r.length("e3:b") == Rational(5, 3));
    CHECK_THROWS_AS(refine(m, "e3", Rational(2)), Error);  // at = l(e)
}

TEST_CASE("canonical model suppresses 2-valent vertices") {
    MetricModel r = refine(theta(), "e1", Rational(1, 4));
    MetricModel c = canonical_model(r);
    CHECK(c.graph().vertices() == theta().graph().vertices());
    CHECK(c.graph().edge_count() == 3);
    CHECK(c.total_length() == theta().total_length());
    CHECK(c.length("e1:a") == Rational(1));  // merged halves keep the smaller id
}

TEST_CASE("circle has no canonical model") {
    Multigraph cycle({"a", "b"}, {{"e1", Endpoints("a", "b")}, {"e2", Endpoints("a", "b")}});
    MetricModel m(cycle, {{"e1", Rational(1)}, {"e2", Rational(1)}});
    CHECK_THROWS_AS(canonical_model(m), Error);
    CHECK_THROWS_AS(canonical_model(refine(m, "e1", Rational(1, 2))), Error);
}

TEST_CASE("canonical model can create loops, loopless variant splits them") {
    // a pendant 2-cycle through c canonicalizes to a loop at a
    Multigraph g({"a", "b", "c"}, {{"e1", Endpoints("a", "b")},
                                   {"e2", Endpoints("a", "c")},
                                   {"e3", Endpoints("a", "c")}});
    MetricModel m(g, {{"e1", Rational(1)}, {"e2", Rational(1, 2)}, {"e3", Rational(1, 2)}});
    MetricModel canon = canonical_model(m);
    CHECK(canon.graph().has_loops());
    CHECK(canon.graph().vertex_count() == 2);
    MetricModel split = loopless_canonical_model(m);
    CHECK(!split.graph().has_loops());
    CHECK(split.total_length() == m.total_length());
    CHECK(genus_metric(split) == genus_metric(m));
}

TEST_CASE("metric canonical divisor") {
    VertexDivisor k = canonical_divisor_metric(theta());
    CHECK(k.degree() == 2 * genus_metric(theta()) - 2);
    CHECK(k.at("a") == 1);
}

TEST_CASE("pseudo-metric round trip") {
    Multigraph seg({"a", "b"}, {{"e", Endpoints("a", "b")}});
    WeightedMetricGraph wmg(MetricModel(seg, {{"e", Rational(3, 7)}}), {{"a", 2}});
    PseudoMetricGraph p = pseudo_metric_graph(wmg);
    CHECK(p.graph().has_edge("vloop:a:1"));
    CHECK(p.pseudo_lengths().at("vloop:a:1") == Rational(0));
    CHECK(from_pseudo_metric(p) == wmg);
}

TEST_CASE("zero length only on loops in pseudo-metric graphs") {
    Multigraph seg({"a", "b"}, {{"e", Endpoints("a", "b")}});
    CHECK_THROWS_AS(PseudoMetricGraph(seg, {{"e", Rational(0)}}), Error);
}

TEST_CASE("epsilon graph realizes the weighted genus") {
    Multigraph seg({"a", "b"}, {{"e", Endpoints("a", "b")}});
    WeightedMetricGraph wmg(MetricModel(seg, {{"e", Rational(1)}}), {{"a", 2}, {"b", 1}});
    CHECK(genus_weighted_metric(wmg) == 3);
    MetricModel eps = epsilon_metric_graph(wmg, Rational(1, 100));
    CHECK(genus_metric(eps) == 3);
    CHECK(canonical_divisor_weighted_metric(wmg).degree() == 4);
}

TEST_CASE("weighted metric graphs must be loopless") {
    Multigraph loop({"v"}, {{"l", Endpoints("v", "v")}});
    MetricModel m(loop, {{"l", Rational(1)}});
    CHECK_THROWS_AS(WeightedMetricGraph(m, {}), Error);
}
