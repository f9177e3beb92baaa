#include <doctest.h>

#include "hurwitz/complex.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/generators.hpp"

using namespace hurwitz;

namespace {

WeightedMetricGraph theta_wmg(std::map<VertexId, long long> weights,
                              const Rational& len = Rational(1)) {
    Multigraph g({"a", "b"}, {{"e1", Endpoints("a", "b")},
                              {"e2", Endpoints("a", "b")},
                              {"e3", Endpoints("a", "b")}});
    return WeightedMetricGraph(
        MetricModel(g, {{"e1", len}, {"e2", len}, {"e3", len}}), std::move(weights));
}

MetrizedComplex theta_complex(std::map<VertexId, long long> weights,
                              std::map<VertexId, long long> genera,
                              const Rational& len = Rational(1)) {
    return MetrizedComplex(theta_wmg(std::move(weights), len), std::move(genera),
                           {{"a", {{"e1", "x1"}, {"e2", "x2"}, {"e3", "x3"}}},
                            {"b", {{"e1", "y1"}, {"e2", "y2"}, {"e3", "y3"}}}});
}

}  // namespace

TEST_CASE("metrized complex invariants") {
    MetrizedComplex c = theta_complex({}, {{"a", 1}});
    CHECK(genus_complex(c) == 2 + 1);
    CHECK(c.curve_genus("a") == 1);
    CHECK(c.curve_genus("b") == 0);
    CHECK(c.marked_point("a", "e2") == "x2");
    CHECK(c.marked_divisor("b").degree() == 3);

    // reductions must be injective and cover exactly the incident edges
    CHECK_THROWS_AS(MetrizedComplex(theta_wmg({}), {},
                                    {{"a", {{"e1", "x"}, {"e2", "x"}, {"e3", "z"}}},
                                     {"b", {{"e1", "y1"}, {"e2", "y2"}, {"e3", "y3"}}}}),
                    Error);
    CHECK_THROWS_AS(MetrizedComplex(theta_wmg({}), {},
                                    {{"a", {{"e1", "x1"}, {"e2", "x2"}}},
                                     {"b", {{"e1", "y1"}, {"e2", "y2"}, {"e3", "y3"}}}}),
                    Error);
}

TEST_CASE("complex canonical divisor") {
    MetrizedComplex c = theta_complex({{"a", 1}}, {{"b", 2}});
    ComplexDivisor k = canonical_divisor_complex(c);
    CHECK(k.degree() == 2 * genus_complex(c) - 2);
    CHECK(k.graphical.at("a") == 2);  // 2w(a)
    CHECK(k.curves.at("a").points.degree() == 3);
    CHECK(k.curves.at("a").symbolic_degree == -2);  // 2 g_a - 2 with g_a = 0
    CHECK(k.curves.at("b").symbolic_degree == 2);
    VertexDivisor gamma = gamma_part(k);
    CHECK(gamma.degree() == k.degree());
}

TEST_CASE("identity morphism of a complex") {
    MetrizedComplex c = theta_complex({}, {{"a", 1}});
    ComplexMorphism id = identity_morphism(c);
    ComplexCertificate cert = validate_harmonic_complex(id);
    REQUIRE(cert.valid);
    CHECK(degree_complex(id) == 1);
    ComplexDivisor k = canonical_divisor_complex(c);
    CHECK(pullback(id, k) == k);
    CHECK(check_rh(id).holds);
}

TEST_CASE("degree two self-cover of the theta complex") {
    MetrizedComplex src = theta_complex({{"a", 1}, {"b", 1}}, {}, Rational(1, 2));
    MetrizedComplex tgt = theta_complex({}, {});
    std::map<VertexId, CurveCover> covers;
    for (const auto& [v, pre] : std::map<VertexId, char>{{"a", 'x'}, {"b", 'y'}}) {
        CurveCover cover;
        cover.degree = 2;
        for (int i = 1; i <= 3; ++i) {
            std::string p = std::string(1, pre) + std::to_string(i);
            cover.point_map[p] = p;
            cover.ram_index[p] = 2;
        }
        covers[v] = cover;
    }
    ComplexMorphism m(src, tgt, {{"a", "a"}, {"b", "b"}},
                      {{"e1", EdgeImage::edge("e1")},
                       {"e2", EdgeImage::edge("e2")},
                       {"e3", EdgeImage::edge("e3")}},
                      covers);
    REQUIRE(validate_harmonic_complex(m).valid);
    CHECK(degree_complex(m) == 2);
    CHECK(genus_complex(src) == 4);
    CHECK(genus_complex(tgt) == 2);

    RHReport rh = check_rh(m);
    CHECK(rh.holds);
    CHECK(!rh.support_level);
    CHECK(rh.ramification.at("a") == 1);
    CHECK(rh.ramification.at("b") == 1);

    // pullback: explicit target points lift through the cover maps
    ComplexDivisor d;
    d.curves["a"].points.add("x1", 1);
    d.graphical.add("b", 2);
    ComplexDivisor up = pullback(m, d);
    CHECK(up.curves.at("a").points.at("x1") == 2);  // ram_index 2
    CHECK(up.graphical.at("b") == 4);               // M(b) * 2
    CHECK(up.degree() == 2 * d.degree());

    // pulling back a point that is not marked on the target curve fails
    ComplexDivisor bad;
    bad.curves["a"].points.add("unmarked", 1);
    CHECK_THROWS_AS(pullback(m, bad), Error);
}

TEST_CASE("ramification mismatch is rejected") {
    MetrizedComplex src = theta_complex({{"a", 1}, {"b", 1}}, {}, Rational(1, 2));
    MetrizedComplex tgt = theta_complex({}, {});
    std::map<VertexId, CurveCover> covers;
    for (const auto& [v, pre] : std::map<VertexId, char>{{"a", 'x'}, {"b", 'y'}}) {
        CurveCover cover;
        cover.degree = 2;
        for (int i = 1; i <= 3; ++i) {
            std::string p = std::string(1, pre) + std::to_string(i);
            cover.point_map[p] = p;
            cover.ram_index[p] = 1;  // should be the slope, 2
        }
        covers[v] = cover;
    }
    ComplexMorphism m(src, tgt, {{"a", "a"}, {"b", "b"}},
                      {{"e1", EdgeImage::edge("e1")},
                       {"e2", EdgeImage::edge("e2")},
                       {"e3", EdgeImage::edge("e3")}},
                      covers);
    ComplexCertificate cert = validate_harmonic_complex(m);
    CHECK(!cert.valid);
    CHECK(cert.reason.has_value());
}

TEST_CASE("complex divisor arithmetic prunes empty parts") {
    ComplexDivisor d;
    d.curves["a"].points.add("x", 1);
    ComplexDivisor e;
    e.curves["a"].points.add("x", -1);
    ComplexDivisor sum = d + e;
    CHECK(sum.degree() == 0);
    CHECK(sum.curves.empty());
    CHECK((d - d).curves.empty());
}
