#include "hurwitz/io.hpp"

#include <json.hpp>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

using json = nlohmann::json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& message) {
    fail("SchemaError", path + ": " + message);
}

const json& field(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) schema_fail(path, std::string("missing field '") + key + "'");
    return *it;
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) schema_fail(path, "unknown field '" + key + "'");
    }
}

const json& as_object(const json& j, const std::string& path) {
    if (!j.is_object()) schema_fail(path, "expected an object");
    return j;
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) schema_fail(path, "expected a string");
    return j.get<std::string>();
}

long long get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) schema_fail(path, "expected an integer");
    return j.get<long long>();
}

bool get_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) schema_fail(path, "expected a boolean");
    return j.get<bool>();
}

Rational get_rational(const json& j, const std::string& path) {
    std::string text = get_string(j, path);
    try {
        return parse_rational(text);
    } catch (const Error& e) {
        schema_fail(path, std::string("bad rational: ") + e.what());
    }
}

template <class F>
auto invariant(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        fail("InvariantError", path + ": [" + e.code() + "] " + e.what());
    }
}

Multigraph parse_graph_payload(const json& j, const std::string& path) {
    as_object(j, path);
    check_keys(j, path, {"vertices", "edges"});
    std::set<VertexId> vertices;
    const json& jv = field(j, path, "vertices");
    if (!jv.is_array()) schema_fail(path + ".vertices", "expected an array");
    for (const auto& v : jv) vertices.insert(get_string(v, path + ".vertices"));
    std::map<EdgeId, Endpoints> edges;
    const json& je = as_object(field(j, path, "edges"), path + ".edges");
    for (const auto& [e, ends] : je.items()) {
        std::string epath = path + ".edges." + e;
        if (!ends.is_array() || ends.size() != 2) schema_fail(epath, "expected two endpoints");
        edges.emplace(e, Endpoints(get_string(ends[0], epath), get_string(ends[1], epath)));
    }
    return invariant(path, [&] { return Multigraph(std::move(vertices), std::move(edges)); });
}

std::map<std::string, long long> parse_int_map(const json& j, const std::string& path) {
    std::map<std::string, long long> out;
    as_object(j, path);
    for (const auto& [key, value] : j.items()) out.emplace(key, get_int(value, path + "." + key));
    return out;
}

std::map<EdgeId, Rational> parse_lengths(const json& j, const std::string& path) {
    std::map<EdgeId, Rational> out;
    as_object(j, path);
    for (const auto& [e, value] : j.items()) out.emplace(e, get_rational(value, path + "." + e));
    return out;
}

WeightedGraph parse_weighted_payload(const json& j, const std::string& path) {
    as_object(j, path);
    check_keys(j, path, {"vertices", "edges", "weights"});
    json core = {{"vertices", field(j, path, "vertices")}, {"edges", field(j, path, "edges")}};
    Multigraph g = parse_graph_payload(core, path);
    auto weights = parse_int_map(field(j, path, "weights"), path + ".weights");
    return invariant(path, [&] { return WeightedGraph(std::move(g), std::move(weights)); });
}

MetricModel parse_metric_model(const json& j, const std::string& path) {
    as_object(j, path);
    check_keys(j, path, {"vertices", "edges", "lengths"});
    json core = {{"vertices", field(j, path, "vertices")}, {"edges", field(j, path, "edges")}};
    Multigraph g = parse_graph_payload(core, path);
    auto lengths = parse_lengths(field(j, path, "lengths"), path + ".lengths");
    return invariant(path, [&] { return MetricModel(std::move(g), std::move(lengths)); });
}

WeightedMetricGraph parse_weighted_metric_payload(const json& j, const std::string& path) {
    as_object(j, path);
    check_keys(j, path, {"vertices", "edges", "lengths", "weights"});
    json core = {{"vertices", field(j, path, "vertices")},
                 {"edges", field(j, path, "edges")},
                 {"lengths", field(j, path, "lengths")}};
    MetricModel model = parse_metric_model(core, path);
    auto weights = parse_int_map(field(j, path, "weights"), path + ".weights");
    return invariant(path,
                     [&] { return WeightedMetricGraph(std::move(model), std::move(weights)); });
}

MetrizedComplex parse_complex_payload(const json& j, const std::string& path) {
    as_object(j, path);
    check_keys(j, path, {"vertices", "edges", "lengths", "weights", "curve_genera", "reductions"});
    json core = {{"vertices", field(j, path, "vertices")},
                 {"edges", field(j, path, "edges")},
                 {"lengths", field(j, path, "lengths")},
                 {"weights", field(j, path, "weights")}};
    WeightedMetricGraph base = parse_weighted_metric_payload(core, path);
    auto genera = parse_int_map(field(j, path, "curve_genera"), path + ".curve_genera");
    std::map<VertexId, std::map<EdgeId, CurvePointId>> reductions;
    const json& jr = as_object(field(j, path, "reductions"), path + ".reductions");
    for (const auto& [v, red] : jr.items()) {
        std::string vpath = path + ".reductions." + v;
        as_object(red, vpath);
        for (const auto& [e, point] : red.items())
            reductions[v].emplace(e, get_string(point, vpath + "." + e));
        reductions.try_emplace(v);
    }
    return invariant(path, [&] {
        return MetrizedComplex(std::move(base), std::move(genera), std::move(reductions));
    });
}

std::map<VertexId, VertexId> parse_vertex_map(const json& j, const std::string& path) {
    std::map<VertexId, VertexId> out;
    as_object(j, path);
    for (const auto& [v, image] : j.items()) out.emplace(v, get_string(image, path + "." + v));
    return out;
}

std::map<EdgeId, EdgeImage> parse_edge_map(const json& j, const std::string& path) {
    std::map<EdgeId, EdgeImage> out;
    as_object(j, path);
    for (const auto& [e, image] : j.items()) {
        std::string epath = path + "." + e;
        as_object(image, epath);
        check_keys(image, epath, {"edge", "vertex"});
        if (image.size() != 1) schema_fail(epath, "expected exactly one of 'edge' or 'vertex'");
        if (image.contains("edge"))
            out.emplace(e, EdgeImage::edge(get_string(image["edge"], epath + ".edge")));
        else
            out.emplace(e, EdgeImage::vertex(get_string(image["vertex"], epath + ".vertex")));
    }
    return out;
}

std::map<VertexId, CurveCover> parse_covers(const json& j, const std::string& path) {
    std::map<VertexId, CurveCover> out;
    as_object(j, path);
    for (const auto& [v, jc] : j.items()) {
        std::string cpath = path + "." + v;
        as_object(jc, cpath);
        check_keys(jc, cpath, {"degree", "point_map", "ram_index"});
        CurveCover cover;
        cover.degree = get_int(field(jc, cpath, "degree"), cpath + ".degree");
        const json& pm = as_object(field(jc, cpath, "point_map"), cpath + ".point_map");
        for (const auto& [x, y] : pm.items())
            cover.point_map.emplace(x, get_string(y, cpath + ".point_map." + x));
        cover.ram_index = parse_int_map(field(jc, cpath, "ram_index"), cpath + ".ram_index");
        out.emplace(v, std::move(cover));
    }
    return out;
}

MorphismDoc parse_morphism_payload(const json& j, const std::string& path) {
    as_object(j, path);
    std::string cname = get_string(field(j, path, "category"), path + ".category");
    Category category = invariant(path + ".category", [&] { return parse_category(cname); });
    MorphismDoc out;
    out.category = category;
    auto vmap = parse_vertex_map(field(j, path, "vertex_map"), path + ".vertex_map");
    auto emap = parse_edge_map(field(j, path, "edge_map"), path + ".edge_map");
    const json& src = field(j, path, "source");
    const json& tgt = field(j, path, "target");
    switch (category) {
        case Category::finite:
            check_keys(j, path, {"category", "source", "target", "vertex_map", "edge_map"});
            out.finite = invariant(path, [&] {
                return GraphMorphism(parse_graph_payload(src, path + ".source"),
                                     parse_graph_payload(tgt, path + ".target"), std::move(vmap),
                                     std::move(emap));
            });
            break;
        case Category::weighted: {
            check_keys(j, path,
                       {"category", "source", "target", "vertex_map", "edge_map", "indices"});
            auto indices = parse_int_map(field(j, path, "indices"), path + ".indices");
            out.weighted = invariant(path, [&] {
                return IndexedMorphism(parse_weighted_payload(src, path + ".source"),
                                       parse_weighted_payload(tgt, path + ".target"),
                                       std::move(vmap), std::move(emap), std::move(indices));
            });
            break;
        }
        case Category::metric:
            check_keys(j, path, {"category", "source", "target", "vertex_map", "edge_map"});
            out.metric = invariant(path, [&] {
                return MetricMorphism(parse_metric_model(src, path + ".source"),
                                      parse_metric_model(tgt, path + ".target"), std::move(vmap),
                                      std::move(emap));
            });
            break;
        case Category::weighted_metric:
            check_keys(j, path, {"category", "source", "target", "vertex_map", "edge_map"});
            out.weighted_metric = invariant(path, [&] {
                return WeightedMetricMorphism(parse_weighted_metric_payload(src, path + ".source"),
                                              parse_weighted_metric_payload(tgt, path + ".target"),
                                              std::move(vmap), std::move(emap));
            });
            break;
        case Category::complex: {
            check_keys(j, path,
                       {"category", "source", "target", "vertex_map", "edge_map", "covers"});
            auto covers = parse_covers(field(j, path, "covers"), path + ".covers");
            out.complex = invariant(path, [&] {
                return ComplexMorphism(parse_complex_payload(src, path + ".source"),
                                       parse_complex_payload(tgt, path + ".target"),
                                       std::move(vmap), std::move(emap), std::move(covers));
            });
            break;
        }
    }
    return out;
}

ComplexDivisor parse_divisor_payload(const json& j, const std::string& path) {
    as_object(j, path);
    check_keys(j, path, {"graphical", "curves"});
    ComplexDivisor out;
    if (j.contains("graphical"))
        for (const auto& [p, c] : parse_int_map(j["graphical"], path + ".graphical"))
            out.graphical.add(p, c);
    if (j.contains("curves")) {
        const json& jc = as_object(j["curves"], path + ".curves");
        for (const auto& [v, part] : jc.items()) {
            std::string vpath = path + ".curves." + v;
            as_object(part, vpath);
            check_keys(part, vpath, {"points", "symbolic_degree"});
            CurvePart cp;
            if (part.contains("points"))
                for (const auto& [x, c] : parse_int_map(part["points"], vpath + ".points"))
                    cp.points.add(x, c);
            if (part.contains("symbolic_degree"))
                cp.symbolic_degree = get_int(part["symbolic_degree"], vpath + ".symbolic_degree");
            if (!cp.points.is_zero() || cp.symbolic_degree != 0) out.curves.emplace(v, std::move(cp));
        }
    }
    return out;
}

json graph_payload(const Multigraph& g) {
    json vertices = json::array();
    for (const auto& v : g.vertices()) vertices.push_back(v);
    json edges = json::object();
    for (const auto& [e, ends] : g.edges()) edges[e] = {ends.first, ends.second};
    return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

json int_map_payload(const std::map<std::string, long long>& m) {
    json out = json::object();
    for (const auto& [k, v] : m) out[k] = v;
    return out;
}

json lengths_payload(const std::map<EdgeId, Rational>& lengths) {
    json out = json::object();
    for (const auto& [e, len] : lengths) out[e] = format_rational(len);
    return out;
}

json weighted_payload(const WeightedGraph& g) {
    json out = graph_payload(g.graph());
    out["weights"] = int_map_payload(g.weights());
    return out;
}

json metric_payload(const MetricModel& m) {
    json out = graph_payload(m.graph());
    out["lengths"] = lengths_payload(m.lengths());
    return out;
}

json pseudo_payload(const PseudoMetricGraph& p) {
    json out = graph_payload(p.graph());
    out["lengths"] = lengths_payload(p.pseudo_lengths());
    out["pseudo"] = true;
    return out;
}

json weighted_metric_payload(const WeightedMetricGraph& g) {
    json out = metric_payload(g.model());
    out["weights"] = int_map_payload(g.weights());
    return out;
}

json complex_payload(const MetrizedComplex& c) {
    json out = weighted_metric_payload(c.base());
    out["curve_genera"] = int_map_payload(c.curve_genera());
    json reductions = json::object();
    for (const auto& [v, red] : c.reductions()) {
        json jr = json::object();
        for (const auto& [e, x] : red) jr[e] = x;
        reductions[v] = std::move(jr);
    }
    out["reductions"] = std::move(reductions);
    return out;
}

json vertex_map_payload(const std::map<VertexId, VertexId>& m) {
    json out = json::object();
    for (const auto& [v, image] : m) out[v] = image;
    return out;
}

json edge_map_payload(const std::map<EdgeId, EdgeImage>& m) {
    json out = json::object();
    for (const auto& [e, image] : m)
        out[e] = image.to_edge ? json{{"edge", image.id}} : json{{"vertex", image.id}};
    return out;
}

json morphism_payload(const MorphismDoc& m) {
    json out;
    out["category"] = category_name(m.category);
    switch (m.category) {
        case Category::finite:
            out["source"] = graph_payload(m.finite->source());
            out["target"] = graph_payload(m.finite->target());
            out["vertex_map"] = vertex_map_payload(m.finite->vertex_map());
            out["edge_map"] = edge_map_payload(m.finite->edge_map());
            break;
        case Category::weighted:
            out["source"] = weighted_payload(m.weighted->source());
            out["target"] = weighted_payload(m.weighted->target());
            out["vertex_map"] = vertex_map_payload(m.weighted->base().vertex_map());
            out["edge_map"] = edge_map_payload(m.weighted->base().edge_map());
            out["indices"] = int_map_payload(m.weighted->indices());
            break;
        case Category::metric:
            out["source"] = metric_payload(m.metric->source());
            out["target"] = metric_payload(m.metric->target());
            out["vertex_map"] = vertex_map_payload(m.metric->base().vertex_map());
            out["edge_map"] = edge_map_payload(m.metric->base().edge_map());
            break;
        case Category::weighted_metric:
            out["source"] = weighted_metric_payload(m.weighted_metric->source());
            out["target"] = weighted_metric_payload(m.weighted_metric->target());
            out["vertex_map"] = vertex_map_payload(m.weighted_metric->metric().base().vertex_map());
            out["edge_map"] = edge_map_payload(m.weighted_metric->metric().base().edge_map());
            break;
        case Category::complex: {
            out["source"] = complex_payload(m.complex->source());
            out["target"] = complex_payload(m.complex->target());
            out["vertex_map"] =
                vertex_map_payload(m.complex->base().metric().base().vertex_map());
            out["edge_map"] = edge_map_payload(m.complex->base().metric().base().edge_map());
            json covers = json::object();
            for (const auto& [v, cover] : m.complex->covers()) {
                json jc;
                jc["degree"] = cover.degree;
                json pm = json::object();
                for (const auto& [x, y] : cover.point_map) pm[x] = y;
                jc["point_map"] = std::move(pm);
                jc["ram_index"] = int_map_payload(cover.ram_index);
                covers[v] = std::move(jc);
            }
            out["covers"] = std::move(covers);
            break;
        }
    }
    return out;
}

json divisor_payload(const ComplexDivisor& d) {
    json out = json::object();
    if (!d.graphical.is_zero()) out["graphical"] = int_map_payload(d.graphical.coefficients());
    if (!d.curves.empty()) {
        json curves = json::object();
        for (const auto& [v, part] : d.curves) {
            json jp = json::object();
            if (!part.points.is_zero()) jp["points"] = int_map_payload(part.points.coefficients());
            if (part.symbolic_degree != 0) jp["symbolic_degree"] = part.symbolic_degree;
            curves[v] = std::move(jp);
        }
        out["curves"] = std::move(curves);
    }
    return out;
}

std::string render(const std::string& kind, json payload) {
    json doc;
    doc["schema_version"] = "1";
    doc["kind"] = kind;
    doc["payload"] = std::move(payload);
    return doc.dump(2) + "\n";
}

}  // namespace

const std::string& kind_of(const Document& doc) {
    static const std::string names[] = {"graph",   "weighted_graph", "metric_graph",
                                        "metric_graph", "weighted_metric_graph",
                                        "complex", "morphism",       "divisor"};
    return names[doc.value.index()];
}

Document parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        fail("SyntaxError", "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                ": " + e.what());
    }
    const std::string path = "$";
    as_object(j, path);
    check_keys(j, path, {"schema_version", "kind", "payload"});
    if (get_string(field(j, path, "schema_version"), path + ".schema_version") != "1")
        schema_fail(path + ".schema_version", "unsupported schema version");
    std::string kind = get_string(field(j, path, "kind"), path + ".kind");
    const json& payload = field(j, path, "payload");
    const std::string ppath = path + ".payload";
    if (kind == "graph") {
        return Document{parse_graph_payload(payload, ppath)};
    } else if (kind == "weighted_graph") {
        return Document{parse_weighted_payload(payload, ppath)};
    } else if (kind == "metric_graph") {
        as_object(payload, ppath);
        bool pseudo = payload.contains("pseudo") &&
                      get_bool(payload["pseudo"], ppath + ".pseudo");
        if (pseudo) {
            check_keys(payload, ppath, {"vertices", "edges", "lengths", "pseudo"});
            json core = {{"vertices", field(payload, ppath, "vertices")},
                         {"edges", field(payload, ppath, "edges")}};
            Multigraph g = parse_graph_payload(core, ppath);
            auto lengths = parse_lengths(field(payload, ppath, "lengths"), ppath + ".lengths");
            return Document{invariant(
                ppath, [&] { return PseudoMetricGraph(std::move(g), std::move(lengths)); })};
        }
        json core = payload;
        core.erase("pseudo");
        return Document{parse_metric_model(core, ppath)};
    } else if (kind == "weighted_metric_graph") {
        return Document{parse_weighted_metric_payload(payload, ppath)};
    } else if (kind == "complex") {
        return Document{parse_complex_payload(payload, ppath)};
    } else if (kind == "morphism") {
        return Document{parse_morphism_payload(payload, ppath)};
    } else if (kind == "divisor") {
        return Document{parse_divisor_payload(payload, ppath)};
    }
    schema_fail(path + ".kind", "unknown kind '" + kind + "'");
}

std::string serialize(const Document& doc) {
    return std::visit(
        [&](const auto& value) -> std::string {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, Multigraph>)
                return render("graph", graph_payload(value));
            else if constexpr (std::is_same_v<T, WeightedGraph>)
                return render("weighted_graph", weighted_payload(value));
            else if constexpr (std::is_same_v<T, MetricModel>)
                return render("metric_graph", metric_payload(value));
            else if constexpr (std::is_same_v<T, PseudoMetricGraph>)
                return render("metric_graph", pseudo_payload(value));
            else if constexpr (std::is_same_v<T, WeightedMetricGraph>)
                return render("weighted_metric_graph", weighted_metric_payload(value));
            else if constexpr (std::is_same_v<T, MetrizedComplex>)
                return render("complex", complex_payload(value));
            else if constexpr (std::is_same_v<T, MorphismDoc>)
                return render("morphism", morphism_payload(value));
            else
                return render("divisor", divisor_payload(value));
        },
        doc.value);
}

std::string serialize_report(const RHReport& report) {
    json payload;
    payload["category"] = category_name(report.category);
    payload["degree"] = report.degree;
    payload["genus_source"] = report.genus_source;
    payload["genus_target"] = report.genus_target;
    payload["ramification"] = int_map_payload(report.ramification.coefficients());
    payload["residual"] = int_map_payload(report.residual.coefficients());
    payload["degree_residual"] = report.degree_residual;
    payload["holds"] = report.holds;
    payload["degenerate"] = report.degenerate;
    payload["support_level"] = report.support_level;
    return render("rh_report", std::move(payload));
}

std::string serialize_report(const SMTReport& report) {
    json payload;
    payload["category"] = category_name(report.category);
    payload["q"] = report.q;
    json targets = json::array();
    for (const auto& a : report.targets) targets.push_back(a);
    payload["targets"] = std::move(targets);
    payload["degree"] = report.degree;
    payload["genus_source"] = report.genus_source;
    payload["genus_target"] = report.genus_target;
    payload["preimage_vertices"] = report.preimage_vertices;
    payload["r_subset"] = report.r_subset;
    payload["r_total"] = report.r_total;
    json terms = json::object();
    for (const auto& [name, value] : report.terms) terms[name] = format_rational(value);
    payload["terms"] = std::move(terms);
    payload["lhs"] = format_rational(report.lhs);
    payload["rhs"] = format_rational(report.rhs);
    payload["defect"] = format_rational(report.defect);
    payload["holds"] = report.holds;
    payload["identity_ok"] = report.identity_ok;
    payload["degenerate"] = report.degenerate;
    return render("smt_report", std::move(payload));
}

}  // namespace hurwitz
