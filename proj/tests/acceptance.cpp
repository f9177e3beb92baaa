// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// argv[1] is the fixtures directory.

#include <array>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/generators.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/theorems.hpp"

using namespace hurwitz;

namespace {

int failures = 0;

void report(int n, const std::string& name, bool ok, double seconds) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << " (" << name << ") ["
              << seconds << "s]\n";
    if (!ok) ++failures;
}

template <class F>
void criterion(int n, const std::string& name, F&& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::cout << "  exception: " << e.what() << "\n";
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(n, name, ok, seconds);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("IOError", "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

MorphismDoc to_doc(const RandomInstance& inst) {
    MorphismDoc out;
    out.category = inst.category;
    out.finite = inst.finite;
    out.weighted = inst.weighted;
    out.metric = inst.metric;
    out.weighted_metric = inst.weighted_metric;
    out.complex = inst.complex;
    return out;
}

RHReport rh_of(const MorphismDoc& m) {
    switch (m.category) {
        case Category::finite: return check_rh(*m.finite);
        case Category::weighted: return check_rh(*m.weighted);
        case Category::metric: return check_rh(*m.metric);
        case Category::weighted_metric: return check_rh(*m.weighted_metric);
        case Category::complex: return check_rh(*m.complex);
    }
    fail("Internal", "bad category");
}

SMTReport smt_of(const MorphismDoc& m, const std::set<VertexId>& targets) {
    switch (m.category) {
        case Category::finite: return smt_report(*m.finite, targets);
        case Category::weighted: return smt_report(*m.weighted, targets);
        case Category::metric: return smt_report(*m.metric, targets);
        case Category::weighted_metric: return smt_report(*m.weighted_metric, targets);
        case Category::complex: return smt_report(*m.complex, targets);
    }
    fail("Internal", "bad category");
}

const GraphMorphism& graph_part(const MorphismDoc& m) {
    switch (m.category) {
        case Category::finite: return *m.finite;
        case Category::weighted: return m.weighted->base();
        case Category::metric: return m.metric->base();
        case Category::weighted_metric: return m.weighted_metric->metric().base();
        case Category::complex: return m.complex->base().metric().base();
    }
    fail("Internal", "bad category");
}

std::map<VertexId, long long> horizontal_of(const MorphismDoc& m) {
    switch (m.category) {
        case Category::finite: return is_harmonic_finite(*m.finite).horizontal;
        case Category::weighted: return is_pseudo_harmonic_indexed(*m.weighted).horizontal;
        case Category::metric: return is_harmonic_metric(*m.metric).horizontal;
        case Category::weighted_metric:
            return is_pseudo_harmonic_weighted_metric(*m.weighted_metric).horizontal;
        case Category::complex:
            return validate_harmonic_complex(*m.complex).graph.horizontal;
    }
    fail("Internal", "bad category");
}

VertexDivisor pullback_of(const MorphismDoc& m, const VertexDivisor& d) {
    switch (m.category) {
        case Category::finite: return pullback(*m.finite, d);
        case Category::weighted: return pullback(*m.weighted, d);
        case Category::metric: return pullback(*m.metric, d);
        case Category::weighted_metric: return pullback(*m.weighted_metric, d);
        default: fail("Internal", "bad category");
    }
}

const std::array<Category, 5> kCategories = {Category::finite, Category::weighted,
                                             Category::metric, Category::weighted_metric,
                                             Category::complex};

// ---- criterion 1: printed worked-example arithmetic ------------------------

struct PrintedRow {
    long long q, pre;
    std::map<std::string, Rational> terms;
    Rational lhs, rhs;
};

bool check_rows(Category cat, long long g, long long g1, long long deg,
                const std::vector<PrintedRow>& rows) {
    for (const PrintedRow& row : rows) {
        SMTReport r = smt_arithmetic(cat, row.q, g, g1, deg, row.pre, row.terms);
        if (r.lhs != row.lhs || r.rhs != row.rhs || !r.holds) {
            std::cout << "  mismatch: " << category_name(cat) << " q=" << row.q
                      << " lhs=" << format_rational(r.lhs) << " rhs=" << format_rational(r.rhs)
                      << " expected " << format_rational(row.lhs) << " <= "
                      << format_rational(row.rhs) << "\n";
            return false;
        }
    }
    return true;
}

bool paper_arithmetic() {
    auto hv = [](const Rational& x) { return std::map<std::string, Rational>{{"half_vertical", x}}; };
    // degree-three harmonic morphism onto the wedge target: g=6, g'=1, deg=3
    bool ok = check_rows(Category::finite, 6, 1, 3,
                         {{5, 14, hv(4), 15, 15},
                          {4, 12, hv(4), 12, 13},
                          {4, 10, hv(1), 12, 14},
                          {4, 11, hv(4), 12, 12},
                          {4, 11, hv(3), 12, 13},
                          {3, 8, hv(1), 9, 12},
                          {3, 9, hv(4), 9, 10},
                          {3, 9, hv(3), 9, 11},
                          {3, 7, hv(1), 9, 11},
                          {3, 7, hv(0), 9, 12},
                          {3, 8, hv(3), 9, 10},
                          {3, 10, hv(4), 9, 11},
                          {2, 5, hv(1), 6, 9},
                          {2, 5, hv(0), 6, 10},
                          {2, 6, hv(3), 6, 8},
                          {2, 4, hv(0), 6, 9},
                          {2, 7, hv(4), 6, 8},
                          {2, 7, hv(3), 6, 9},
                          {1, 2, hv(0), 3, 7},
                          {1, 3, hv(1), 3, 7},
                          {1, 3, hv(0), 3, 8},
                          {1, 4, hv(3), 3, 6}});
    // collapsing of one loop of the figure-eight-like graph: g=0, g'=0, deg=1
    ok = ok && check_rows(Category::finite, 0, 0, 1,
                          {{5, 6, hv(1), 4, 4},
                           {4, 5, hv(1), 3, 3},
                           {4, 4, hv(0), 3, 3},
                           {3, 4, hv(1), 2, 2},
                           {3, 3, hv(0), 2, 2},
                           {2, 3, hv(1), 1, 1},
                           {2, 2, hv(0), 1, 1},
                           {1, 1, hv(0), 0, 0},
                           {1, 2, hv(1), 0, 0}});
    auto wi = [](const Rational& w, const Rational& x) {
        return std::map<std::string, Rational>{{"weight", w}, {"half_index_excess", x}};
    };
    // pseudo-harmonic indexed morphism of degree three: g=5, g'=0
    ok = ok && check_rows(Category::weighted, 5, 0, 3,
                          {{4, 4, wi(0, 1), 9, 9},
                           {3, 3, wi(0, 1), 6, 8},
                           {3, 3, wi(0, Rational(1, 2)), 6, Rational(15, 2)},
                           {2, 2, wi(0, Rational(1, 2)), 3, Rational(13, 2)},
                           {2, 2, wi(0, 0), 3, 6},
                           {2, 2, wi(0, 1), 3, 7},
                           {1, 1, wi(0, 0), 0, 5},
                           {1, 1, wi(0, Rational(1, 2)), 0, Rational(11, 2)}});
    // harmonic indexed morphism of degree one: g=5, g'=5
    ok = ok && check_rows(Category::weighted, 5, 5, 1,
                          {{5, 6, wi(-1, -2), 9, 9},
                           {4, 5, wi(-1, -2), 8, 8},
                           {4, 4, wi(0, 0), 8, 8},
                           {3, 4, wi(-1, -2), 7, 7},
                           {3, 3, wi(0, 0), 7, 7},
                           {2, 3, wi(-1, -2), 6, 6},
                           {2, 2, wi(0, 0), 6, 6},
                           {1, 1, wi(0, 0), 5, 5},
                           {1, 2, wi(-1, -2), 5, 5}});
    auto hs = [](const Rational& x) {
        return std::map<std::string, Rational>{{"half_slope_excess", x}};
    };
    // metric double cover: g=4, g'=0, deg=2
    ok = ok && check_rows(Category::metric, 4, 0, 2,
                          {{4, 6, hs(-3), 6, 6},
                           {3, 4, hs(-1), 4, 6},
                           {3, 5, hs(Rational(-7, 2)), 4, Rational(9, 2)},
                           {2, 3, hs(Rational(-3, 2)), 2, Rational(9, 2)},
                           {2, 4, hs(-4), 2, 3},
                           {2, 2, hs(1), 2, 6},
                           {1, 2, hs(-2), 0, 3},
                           {1, 1, hs(Rational(1, 2)), 0, Rational(9, 2)}});
    auto ws = [](const Rational& w, const Rational& x) {
        return std::map<std::string, Rational>{{"weight", w}, {"half_slope_excess", x}};
    };
    // weighted metric double cover: g=4, g'=1, deg=2
    ok = ok && check_rows(Category::weighted_metric, 4, 1, 2,
                          {{3, 6, ws(1, -2), 6, 6},
                           {2, 4, ws(1, -2), 4, 4},
                           {2, 4, ws(0, 0), 4, 7},
                           {1, 2, ws(0, 0), 2, 5},
                           {1, 2, ws(1, -2), 2, 2}});
    auto cx = [](const Rational& c) {
        return std::map<std::string, Rational>{
            {"curve", c}, {"weight", 0}, {"half_valence", 0}};
    };
    // metrized complex double cover: g=4, g'=1, deg=2
    ok = ok && check_rows(Category::complex, 4, 1, 2,
                          {{3, 3, cx(0), 6, 6},
                           {2, 2, cx(-1), 4, 6},
                           {2, 2, cx(1), 4, 4},
                           {2, 2, cx(0), 4, 5},
                           {1, 1, cx(-1), 2, 5},
                           {1, 1, cx(0), 2, 4},
                           {1, 1, cx(1), 2, 3}});
    return ok;
}

// ---- criterion 2: canonical degree oracle ----------------------------------

bool canonical_degrees() {
    std::mt19937_64 rng(2024);
    auto lengths_for = [&](const Multigraph& g) {
        std::map<EdgeId, Rational> lengths;
        for (const auto& [e, ends] : g.edges())
            lengths.emplace(e, Rational(1 + rng() % 5, 1 + rng() % 4));
        return lengths;
    };
    for (int i = 0; i < 1000; ++i) {
        Multigraph g = random_multigraph(rng, 12, 6, true);
        if (canonical_divisor(g).degree() != 2 * g.genus() - 2) return false;
        if (canonical_divisor_metric(MetricModel(g, lengths_for(g))).degree() !=
            2 * g.genus() - 2)
            return false;

        Multigraph loopless = random_multigraph(rng, 12, 6, false);
        std::map<VertexId, long long> weights;
        std::map<VertexId, long long> genera;
        for (const auto& v : loopless.vertices()) {
            weights[v] = rng() % 4;
            genera[v] = rng() % 4;
        }
        WeightedGraph wg(loopless, weights);
        if (canonical_divisor_weighted(wg).degree() != 2 * genus_weighted(wg) - 2) return false;
        WeightedMetricGraph wmg(MetricModel(loopless, lengths_for(loopless)), weights);
        if (canonical_divisor_weighted_metric(wmg).degree() !=
            2 * genus_weighted_metric(wmg) - 2)
            return false;
        std::map<VertexId, std::map<EdgeId, CurvePointId>> reductions;
        for (const auto& v : loopless.vertices())
            for (const auto& e : loopless.incident_edges(v)) reductions[v][e] = e;
        MetrizedComplex c(wmg, genera, reductions);
        if (canonical_divisor_complex(c).degree() != 2 * genus_complex(c) - 2) return false;
    }
    return true;
}

// ---- criterion 3: RH identity suite ----------------------------------------

bool rh_suite(Category cat) {
    std::mt19937_64 extra_rng(99);
    for (std::uint64_t i = 0; i < 10000; ++i) {
        MorphismDoc m;
        if (cat == Category::finite && i % 7 == 0) {
            // pendant triangle collapsed at a cut vertex
            Multigraph base = random_multigraph(extra_rng, 6, 3, true);
            while (base.vertex_count() < 2) base = random_multigraph(extra_rng, 6, 3, true);
            std::set<VertexId> vertices = base.vertices();
            const VertexId cut = *vertices.begin();
            vertices.insert("x1");
            vertices.insert("x2");
            auto edges = base.edges();
            edges.emplace("px1", Endpoints(cut, "x1"));
            edges.emplace("px2", Endpoints("x1", "x2"));
            edges.emplace("px3", Endpoints("x2", cut));
            m.category = Category::finite;
            m.finite = collapsing_morphism(Multigraph(vertices, edges), cut, {"x1", "x2"});
        } else if (cat == Category::metric && i % 7 == 0) {
            Multigraph base = random_multigraph(extra_rng, 6, 3, false);
            std::map<EdgeId, Rational> lengths;
            for (const auto& [e, ends] : base.edges())
                lengths.emplace(e, Rational(1 + extra_rng() % 5, 1 + extra_rng() % 3));
            m.category = Category::metric;
            m.metric = metric_stretch(MetricModel(base, lengths), 1 + extra_rng() % 4);
        } else {
            GenSpec spec;
            spec.category = cat;
            spec.seed = i;
            m = to_doc(random_instance(spec));
        }
        RHReport r = rh_of(m);
        if (!r.holds || !r.residual.is_zero() || r.degree_residual != 0) {
            std::cout << "  rh failure: " << category_name(cat) << " seed " << i << "\n";
            return false;
        }
    }
    return true;
}

// ---- criterion 4: exhaustive SMT suite --------------------------------------

bool smt_suite(Category cat) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
        GenSpec spec;
        spec.category = cat;
        spec.seed = i;
        // loop subdivision adds up to max_extra_edges midpoints to finite targets
        if (cat == Category::finite) spec.max_vertices = 4;
        MorphismDoc m = to_doc(random_instance(spec));
        std::vector<VertexId> pool(graph_part(m).target().vertices().begin(),
                                   graph_part(m).target().vertices().end());
        if (pool.size() > 8) {
            std::cout << "  target too large at seed " << i << "\n";
            return false;
        }
        for (std::size_t mask = 1; mask < (std::size_t{1} << pool.size()); ++mask) {
            std::set<VertexId> targets;
            for (std::size_t b = 0; b < pool.size(); ++b)
                if (mask & (std::size_t{1} << b)) targets.insert(pool[b]);
            SMTReport r = smt_of(m, targets);
            if (!r.holds || !r.identity_ok) {
                std::cout << "  smt failure: " << category_name(cat) << " seed " << i
                          << " q=" << targets.size() << "\n";
                return false;
            }
        }
    }
    return true;
}

// ---- criterion 5: degree lemmas ---------------------------------------------

long long degree_of(const MorphismDoc& m) {
    switch (m.category) {
        case Category::finite: return degree_finite(*m.finite);
        case Category::weighted: return degree_indexed(*m.weighted);
        case Category::metric: return degree_metric(*m.metric);
        case Category::weighted_metric: return degree_weighted_metric(*m.weighted_metric);
        case Category::complex: return degree_complex(*m.complex);
    }
    fail("Internal", "bad category");
}

bool degree_lemmas() {
    std::mt19937_64 rng(7);
    for (Category cat : kCategories) {
        for (std::uint64_t i = 0; i < 1000; ++i) {
            GenSpec spec;
            spec.category = cat;
            spec.seed = i;
            MorphismDoc m = to_doc(random_instance(spec));
            long long deg = degree_of(m);
            const GraphMorphism& base = graph_part(m);
            std::map<VertexId, long long> horizontal = horizontal_of(m);
            std::map<VertexId, long long> fiber_sums;
            for (const auto& [v, image] : base.vertex_map())
                fiber_sums[image] += horizontal.at(v);
            for (const auto& v1 : base.target().vertices())
                if (fiber_sums[v1] != deg) {
                    std::cout << "  fiber sum mismatch: " << category_name(cat) << " seed " << i
                              << "\n";
                    return false;
                }
            for (int k = 0; k < 100; ++k) {
                if (cat == Category::complex) {
                    ComplexDivisor d;
                    for (const auto& v1 : base.target().vertices()) {
                        d.graphical.add(v1, static_cast<long long>(rng() % 11) - 5);
                        d.curves[v1].symbolic_degree = static_cast<long long>(rng() % 7) - 3;
                    }
                    if (pullback(*m.complex, d).degree() != deg * d.degree()) {
                        std::cout << "  complex pullback degree mismatch at seed " << i << "\n";
                        return false;
                    }
                } else {
                    VertexDivisor d;
                    for (const auto& v1 : base.target().vertices())
                        d.add(v1, static_cast<long long>(rng() % 11) - 5);
                    if (pullback_of(m, d).degree() != deg * d.degree()) {
                        std::cout << "  pullback degree mismatch: " << category_name(cat)
                                  << " seed " << i << "\n";
                        return false;
                    }
                    if (cat == Category::finite && pushforward(*m.finite, pullback_of(m, d)) != deg * d) {
                        std::cout << "  pushforward identity fails at seed " << i << "\n";
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

// ---- criterion 6: frozen fixtures --------------------------------------------

bool fixtures_stable(const std::string& dir) {
    struct Case {
        std::string file;
        std::set<VertexId> targets;
    };
    const std::vector<Case> cases = {{"bowtie-collapse", {"p", "c", "d"}},
                                     {"hexagon-cover", {"a"}},
                                     {"segment-stretch", {"a", "b"}}};
    for (const Case& c : cases) {
        Document doc = parse_document(read_file(dir + "/" + c.file + ".json"));
        const MorphismDoc& m = std::get<MorphismDoc>(doc.value);
        if (serialize_report(rh_of(m)) != read_file(dir + "/" + c.file + ".rh.json")) {
            std::cout << "  rh report drift: " << c.file << "\n";
            return false;
        }
        if (serialize_report(smt_of(m, c.targets)) !=
            read_file(dir + "/" + c.file + ".smt.json")) {
            std::cout << "  smt report drift: " << c.file << "\n";
            return false;
        }
    }
    return true;
}

// ---- criterion 7: round-trips and determinism --------------------------------

bool round_trips(const std::string& dir) {
    for (const char* name : {"bowtie-collapse", "hexagon-cover", "segment-stretch"}) {
        Document doc = parse_document(read_file(dir + "/" + std::string(name) + ".json"));
        std::string canonical = serialize(doc);
        if (!(parse_document(canonical) == doc) || serialize(parse_document(canonical)) != canonical) {
            std::cout << "  round-trip failure: " << name << "\n";
            return false;
        }
    }
    for (Category cat : kCategories) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            GenSpec spec;
            spec.category = cat;
            spec.seed = seed;
            std::string first = serialize(Document{to_doc(random_instance(spec))});
            std::string second = serialize(Document{to_doc(random_instance(spec))});
            if (first != second) {
                std::cout << "  nondeterministic instance: " << category_name(cat) << " seed "
                          << seed << "\n";
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string fixtures = argc > 1 ? argv[1] : "fixtures";
    criterion(1, "paper-example arithmetic", paper_arithmetic);
    criterion(2, "canonical-degree oracle", canonical_degrees);
    criterion(3, "RH identity suite", [] {
        for (Category cat : kCategories)
            if (!rh_suite(cat)) return false;
        return true;
    });
    criterion(4, "SMT exhaustive suite", [] {
        for (Category cat : kCategories)
            if (!smt_suite(cat)) return false;
        return true;
    });
    criterion(5, "degree lemmas", degree_lemmas);
    criterion(6, "frozen fixtures", [&] { return fixtures_stable(fixtures); });
    criterion(7, "round-trip and determinism", [&] { return round_trips(fixtures); });
    return failures == 0 ? 0 : 1;
}
