#include <doctest.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/weighted_graph.hpp"

using namespace hurwitz;

TEST_CASE("weighted graphs reject loops") {
    Multigraph loop({"v", "u"}, {{"l", Endpoints("v", "v")}, {"e", Endpoints("v", "u")}});
    CHECK_THROWS_AS(WeightedGraph(loop, {}), Error);
}

TEST_CASE("weighted genus and virtual graph") {
    Multigraph theta({"a", "b"}, {{"e1", Endpoints("a", "b")},
                                  {"e2", Endpoints("a", "b")},
                                  {"e3", Endpoints("a", "b")}});
    WeightedGraph wg(theta, {{"a", 2}, {"b", 1}});
    CHECK(genus_weighted(wg) == 2 + 3);
    Multigraph gv = virtual_graph(wg);
    CHECK(gv.genus() == genus_weighted(wg));
    CHECK(gv.has_edge("vloop:a:1"));
    CHECK(gv.has_edge("vloop:a:2"));
    CHECK(gv.has_edge("vloop:b:1"));
    CHECK(gv.valency("a") == theta.valency("a") + 4);
}

TEST_CASE("weighted canonical divisor has degree 2g-2") {
    Multigraph segment({"a", "b"}, {{"e", Endpoints("a", "b")}});
    WeightedGraph wg(segment, {{"a", 1}});
    // K = (2w - 2 + val)(v)
    VertexDivisor k = canonical_divisor_weighted(wg);
    CHECK(k.at("a") == 1);
    CHECK(k.at("b") == -1);
    CHECK(k.degree() == 2 * genus_weighted(wg) - 2);
}

TEST_CASE("negative weights rejected, zero weights pruned") {
    Multigraph segment({"a", "b"}, {{"e", Endpoints("a", "b")}});
    CHECK_THROWS_AS(WeightedGraph(segment, {{"a", -1}}), Error);
    WeightedGraph wg(segment, {{"a", 0}});
    CHECK(wg.weights().empty());
    CHECK(wg.weight("a") == 0);
}
