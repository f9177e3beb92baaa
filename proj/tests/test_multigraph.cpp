#include <doctest.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/multigraph.hpp"

using namespace hurwitz;

namespace {

Multigraph triangle() {
    return Multigraph({"a", "b", "c"},
                      {{"e1", Endpoints("a", "b")},
                       {"e2", Endpoints("b", "c")},
                       {"e3", Endpoints("c", "a")}});
}

}  // namespace

TEST_CASE("endpoints normalize and classify") {
    Endpoints e("b", "a");
    CHECK(e.first == "a");
    CHECK(e.second == "b");
    CHECK(!e.is_loop());
    CHECK(Endpoints("x", "x").is_loop());
    CHECK(e.other("a") == "b");
    CHECK(e.touches("b"));
}

TEST_CASE("triangle basics") {
    Multigraph g = triangle();
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.genus() == 1);
    CHECK(g.valency("a") == 2);
    CHECK(!g.has_loops());
}

TEST_CASE("loops count twice in valency and once in genus") {
    Multigraph g({"v"}, {{"l", Endpoints("v", "v")}});
    CHECK(g.valency("v") == 2);
    CHECK(g.genus() == 1);
    CHECK(g.has_loops());
    CHECK(g.incident_edges("v").size() == 1);
}

TEST_CASE("construction rejects dangling endpoints") {
    CHECK_THROWS_AS(Multigraph({"a"}, {{"e", Endpoints("a", "b")}}), Error);
}

TEST_CASE("subdivide_loops preserves genus and removes loops") {
    Multigraph g({"v", "u"}, {{"l", Endpoints("v", "v")}, {"e", Endpoints("v", "u")}});
    LoopSubdivision s = subdivide_loops(g);
    CHECK(!s.graph.has_loops());
    CHECK(s.graph.genus() == g.genus());
    CHECK(s.graph.has_vertex("loopmid:l"));
    CHECK(s.graph.has_edge("l:a"));
    CHECK(s.graph.has_edge("l:b"));
    CHECK(s.graph.has_edge("e"));
    CHECK(s.midpoints.at("l") == "loopmid:l");
}

TEST_CASE("multigraph equality is structural") {
    CHECK(triangle() == triangle());
    Multigraph path({"a", "b"}, {{"e1", Endpoints("a", "b")}});
    CHECK(path.genus() == 0);
    CHECK_FALSE(triangle() == path);
}
