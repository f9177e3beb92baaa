#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/generators.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/theorems.hpp"

namespace {

using namespace hurwitz;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("IOError", "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) fail("IOError", "cannot read '" + path + "'");
    return buffer.str();
}

const MorphismDoc& as_morphism(const Document& doc) {
    if (const auto* m = std::get_if<MorphismDoc>(&doc.value)) return *m;
    fail("SchemaError", "expected a morphism document, got '" + kind_of(doc) + "'");
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

const std::set<VertexId>& target_vertices(const MorphismDoc& m) {
    switch (m.category) {
        case Category::finite: return m.finite->target().vertices();
        case Category::weighted: return m.weighted->target().graph().vertices();
        case Category::metric: return m.metric->target().graph().vertices();
        case Category::weighted_metric:
            return m.weighted_metric->target().model().graph().vertices();
        case Category::complex: return m.complex->target().base().model().graph().vertices();
    }
    fail("Internal", "bad category");
}

bool is_harmonic(const MorphismDoc& m, std::string& detail) {
    auto describe = [&](const HarmonicityCertificate& cert) {
        if (cert.balanced || !cert.failure) return;
        const auto& w = *cert.failure;
        detail = "unbalanced at " + w.vertex + ": " + std::to_string(w.sum_a) + " over " +
                 w.edge_a + " vs " + std::to_string(w.sum_b) + " over " + w.edge_b;
    };
    auto describe_slack = [&](const HarmonicSlack& s) {
        if (s.harmonic) return;
        for (const auto& [v, slack] : s.slack)
            if (slack < 0) {
                detail = "negative slack " + std::to_string(slack) + " at " + v;
                return;
            }
    };
    switch (m.category) {
        case Category::finite: {
            auto cert = is_harmonic_finite(*m.finite);
            describe(cert);
            return cert.balanced;
        }
        case Category::weighted: {
            auto cert = is_pseudo_harmonic_indexed(*m.weighted);
            describe(cert);
            if (!cert.balanced) return false;
            auto s = is_harmonic_indexed(*m.weighted);
            describe_slack(s);
            return s.harmonic;
        }
        case Category::metric: {
            auto cert = is_harmonic_metric(*m.metric);
            describe(cert);
            return cert.balanced;
        }
        case Category::weighted_metric: {
            auto cert = is_pseudo_harmonic_weighted_metric(*m.weighted_metric);
            describe(cert);
            if (!cert.balanced) return false;
            auto s = is_harmonic_weighted_metric(*m.weighted_metric);
            describe_slack(s);
            return s.harmonic;
        }
        case Category::complex: {
            auto cert = validate_harmonic_complex(*m.complex);
            if (!cert.valid) {
                describe(cert.graph);
                describe_slack(cert.slack);
                if (cert.reason) detail = *cert.reason;
            }
            return cert.valid;
        }
    }
    fail("Internal", "bad category");
}

ComplexDivisor wrap(const VertexDivisor& d) {
    ComplexDivisor out;
    for (const auto& [v, c] : d.coefficients()) out.graphical.add(v, c);
    return out;
}

int cmd_validate(const std::string& path) {
    Document doc = parse_document(read_file(path));
    std::cout << "kind: " << kind_of(doc) << "\n";
    if (!std::holds_alternative<MorphismDoc>(doc.value)) {
        std::cout << "valid: yes\n";
        return 0;
    }
    const MorphismDoc& m = as_morphism(doc);
    std::cout << "category: " << category_name(m.category) << "\n";
    std::string detail;
    bool ok = is_harmonic(m, detail);
    std::cout << "harmonic: " << (ok ? "yes" : "no") << "\n";
    if (!ok && !detail.empty()) std::cout << "detail: " << detail << "\n";
    return ok ? 0 : 2;
}

int cmd_rh(const std::string& path) {
    RHReport report = rh_of(as_morphism(parse_document(read_file(path))));
    std::cout << serialize_report(report);
    return report.holds ? 0 : 2;
}

int cmd_smt(const std::string& path, const std::string& targets_csv) {
    std::set<VertexId> targets;
    std::stringstream ss(targets_csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) targets.insert(item);
    SMTReport report = smt_of(as_morphism(parse_document(read_file(path))), targets);
    std::cout << serialize_report(report);
    return report.holds ? 0 : 2;
}

int cmd_pullback(const std::string& morphism_path, const std::string& divisor_path) {
    const Document mdoc = parse_document(read_file(morphism_path));
    const MorphismDoc& m = as_morphism(mdoc);
    const Document ddoc = parse_document(read_file(divisor_path));
    const auto* d = std::get_if<ComplexDivisor>(&ddoc.value);
    if (!d) fail("SchemaError", "expected a divisor document, got '" + kind_of(ddoc) + "'");
    ComplexDivisor result;
    if (m.category == Category::complex) {
        result = pullback(*m.complex, *d);
    } else {
        if (!d->curves.empty())
            fail("SchemaError", "divisor has curve parts but the morphism category is " +
                                    category_name(m.category));
        switch (m.category) {
            case Category::finite: result = wrap(pullback(*m.finite, d->graphical)); break;
            case Category::weighted: result = wrap(pullback(*m.weighted, d->graphical)); break;
            case Category::metric: result = wrap(pullback(*m.metric, d->graphical)); break;
            case Category::weighted_metric:
                result = wrap(pullback(*m.weighted_metric, d->graphical));
                break;
            default: fail("Internal", "bad category");
        }
    }
    std::cout << serialize(Document{std::move(result)});
    return 0;
}

int cmd_canonical(const std::string& path) {
    Document doc = parse_document(read_file(path));
    ComplexDivisor result = std::visit(
        [](const auto& value) -> ComplexDivisor {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, Multigraph>)
                return wrap(canonical_divisor(value));
            else if constexpr (std::is_same_v<T, WeightedGraph>)
                return wrap(canonical_divisor_weighted(value));
            else if constexpr (std::is_same_v<T, MetricModel>)
                return wrap(canonical_divisor_metric(value));
            else if constexpr (std::is_same_v<T, PseudoMetricGraph>)
                return wrap(canonical_divisor_weighted_metric(from_pseudo_metric(value)));
            else if constexpr (std::is_same_v<T, WeightedMetricGraph>)
                return wrap(canonical_divisor_weighted_metric(value));
            else if constexpr (std::is_same_v<T, MetrizedComplex>)
                return canonical_divisor_complex(value);
            else
                fail("SchemaError", "no canonical divisor for this document kind");
        },
        doc.value);
    std::cout << serialize(Document{std::move(result)});
    return 0;
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

bool residuals_clear(const RHReport& r) {
    return r.holds && r.residual.is_zero() && r.degree_residual == 0;
}

int cmd_fuzz(const std::string& category, long long iters, std::uint64_t seed, int max_vertices,
             bool dump) {
    GenSpec spec;
    spec.category = parse_category(category);
    spec.max_vertices = max_vertices;
    for (long long i = 0; i < iters; ++i) {
        spec.seed = seed + static_cast<std::uint64_t>(i);
        RandomInstance inst = random_instance(spec);
        MorphismDoc m = to_doc(inst);
        if (dump) std::cout << serialize(Document{m});
        std::string detail;
        if (!is_harmonic(m, detail) || !residuals_clear(rh_of(m))) {
            std::cout << "fail: rh seed=" << spec.seed << "\n";
            return 2;
        }
        std::vector<VertexId> pool(target_vertices(m).begin(), target_vertices(m).end());
        std::size_t n = std::min<std::size_t>(pool.size(), 8);
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            std::set<VertexId> targets;
            for (std::size_t b = 0; b < n; ++b)
                if (mask & (std::size_t{1} << b)) targets.insert(pool[b]);
            SMTReport report = smt_of(m, targets);
            if (!report.holds || !report.identity_ok) {
                std::cout << "fail: smt seed=" << spec.seed << " q=" << targets.size() << "\n";
                return 2;
            }
        }
    }
    std::cout << "ok: " << iters << " instances\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Divisor theory and harmonic morphisms on graphs"};
    app.require_subcommand(1);

    std::string file, divisor_file, targets_csv, category = "finite";
    long long iters = 100;
    std::uint64_t seed = 0;
    int max_vertices = 8;
    bool dump = false;

    auto* validate = app.add_subcommand("validate", "validate a document / harmonicity");
    validate->add_option("file", file)->required();
    auto* rh = app.add_subcommand("rh", "Riemann-Hurwitz report for a morphism");
    rh->add_option("file", file)->required();
    auto* smt = app.add_subcommand("smt", "second main theorem report");
    smt->add_option("file", file)->required();
    smt->add_option("--targets", targets_csv, "comma-separated target vertices")->required();
    auto* pb = app.add_subcommand("pullback", "pull a divisor back along a morphism");
    pb->add_option("morphism", file)->required();
    pb->add_option("divisor", divisor_file)->required();
    auto* canonical = app.add_subcommand("canonical", "canonical divisor of an object");
    canonical->add_option("file", file)->required();
    auto* fuzz = app.add_subcommand("fuzz", "generate harmonic instances and check the theorems");
    fuzz->add_option("--category", category)->required();
    fuzz->add_option("--iters", iters);
    fuzz->add_option("--seed", seed);
    fuzz->add_option("--max-vertices", max_vertices);
    fuzz->add_flag("--dump", dump, "print each generated instance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (validate->parsed()) return cmd_validate(file);
        if (rh->parsed()) return cmd_rh(file);
        if (smt->parsed()) return cmd_smt(file, targets_csv);
        if (pb->parsed()) return cmd_pullback(file, divisor_file);
        if (canonical->parsed()) return cmd_canonical(file);
        if (fuzz->parsed()) return cmd_fuzz(category, iters, seed, max_vertices, dump);
    } catch (const hurwitz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
