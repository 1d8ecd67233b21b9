// Command-line front end: shape inspection, resolution construction,
// Betti tables, specialization, verification runs and graph analysis.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ferrers/betti.hpp"
#include "ferrers/cell_complex.hpp"
#include "ferrers/chain_complex.hpp"
#include "ferrers/field.hpp"
#include "ferrers/graph.hpp"
#include "ferrers/json_io.hpp"
#include "ferrers/oracle.hpp"
#include "ferrers/shape.hpp"
#include "ferrers/verify.hpp"

namespace {

using namespace ferrers;

// Exit codes shared with the acceptance suite: 0 success, 2 input
// validation, 3 hypothesis violation, 4 verification mismatch,
// 5 condition failure.
enum ExitCode : int {
    exit_ok = 0,
    exit_invalid_input = 2,
    exit_hypothesis = 3,
    exit_mismatch = 4,
    exit_condition = 5,
};

struct Options {
    std::string input;
    std::string format = "text";
    std::string out;
    std::vector<std::string> field_args;
    std::string oracle = "both";
    bool specialize_flag = false;
    std::string map_arg;
    std::string what = "complex";
    std::string graph_mode;
    int jobs = 1;
};

std::vector<Field> resolve_fields(const Options& opt) {
    if (opt.field_args.empty()) return default_fields();
    std::vector<Field> out;
    for (const std::string& s : opt.field_args) {
        auto f = Field::parse(s);
        if (!f) throw error(errc::bad_input, "unrecognized field '" + s + "'");
        out.push_back(*f);
    }
    return out;
}

void emit(const Options& opt, const std::string& text, const json& payload) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!opt.out.empty()) {
        file.open(opt.out);
        if (!file) throw error(errc::bad_input, "cannot write " + opt.out);
        os = &file;
    }
    if (opt.format == "json")
        *os << payload.dump(2) << "\n";
    else
        *os << text;
}

std::string seq(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

std::string totals_str(const BettiTable& t) {
    std::string s;
    for (int i = 1; t.total(i) != 0; ++i)
        s += (i > 1 ? " " : "") + std::string("b") + std::to_string(i) + "=" +
             std::to_string(t.total(i));
    return s;
}

Substitution parse_substitution(const Options& opt, int m) {
    if (opt.map_arg.empty()) return Substitution::identity(m);
    Substitution s;
    std::stringstream ss(opt.map_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            s.target.push_back(std::stoi(tok));
        } catch (...) {
            throw error(errc::bad_input, "bad --map entry '" + tok + "'");
        }
    }
    if (static_cast<int>(s.target.size()) != m)
        throw error(errc::bad_input, "--map must assign all " + std::to_string(m) +
                                         " y-variables");
    return s;
}

int cmd_shape(const Options& opt) {
    const Shape shape = shape_from_json(load_json_file(opt.input));
    const MonomialIdeal I = generators(shape);
    std::ostringstream text;
    text << "shape: lambda = " << seq(shape.lambda()) << ", mu = " << seq(shape.mu()) << "\n";
    text << "rows n = " << shape.rows() << ", cols m = " << shape.cols()
         << ", cells = " << shape.cell_count() << "\n";
    text << "diagram:\n" << shape.ascii_diagram();
    text << "generators (" << I.generators().size() << "):";
    for (const Monomial& g : I.generators()) text << " " << g.str(I.context());
    text << "\n";
    json payload = to_json(shape);
    payload["n"] = shape.rows();
    payload["m"] = shape.cols();
    payload["generators"] = to_json(I);
    if (shape.mu_row_dominant()) {
        const long long pred = generator_count_predicted(shape);
        text << "predicted minimal generators after specialization: " << pred << "\n";
        payload["predicted_specialized_generators"] = pred;
    } else {
        text << "predicted minimal generators after specialization: not guaranteed"
             << " (mu_i >= i-1 fails)\n";
        payload["predicted_specialized_generators"] = nullptr;
    }
    emit(opt, text.str(), payload);
    return exit_ok;
}

struct BuiltComplex {
    Shape shape;
    LabeledCellComplex complex;
    bool specialized = false;
};

BuiltComplex build_from_shape(const Shape& shape, bool specialized) {
    BuiltComplex out{shape, build_shape_complex(shape), specialized};
    if (specialized)
        out.complex = specialize_labels(out.complex, Substitution::identity(shape.cols()));
    return out;
}

int cmd_resolve(const Options& opt) {
    const Shape shape = shape_from_json(load_json_file(opt.input));
    const BuiltComplex built = build_from_shape(shape, opt.specialize_flag);
    const ChainComplex C = cellular_chain_complex(built.complex);
    const BettiResult betti = betti_from_faces(built.complex);
    const bool minimal_entries = check_minimal(C);

    std::ostringstream text;
    text << "complex for lambda = " << seq(shape.lambda()) << ", mu = " << seq(shape.mu())
         << (built.specialized ? " (specialized labels)" : "") << "\n";
    text << "f-vector:";
    for (long long f : built.complex.f_vector()) text << " " << f;
    text << "\nranks:";
    for (long long r : C.ranks) text << " " << r;
    text << "\nbetti: " << totals_str(betti.table) << "\n";
    text << betti.table.zgraded_str();
    text << "entries minimal: " << (minimal_entries ? "yes" : "no") << "\n";
    text << "guaranteed minimal resolution: " << (betti.guaranteed_minimal ? "yes" : "no") << "\n";
    if (!betti.guaranteed_minimal)
        text << "warning: NotGuaranteedMinimal - some mu_i < i-1, face counts are only an upper "
                "bound for the specialized ideal\n";

    json payload;
    payload["shape"] = to_json(shape);
    payload["specialized"] = built.specialized;
    payload["f_vector"] = built.complex.f_vector();
    payload["chain_complex"] = to_json(C);
    payload["betti"] = to_json(betti.table);
    payload["entries_minimal"] = minimal_entries;
    payload["guaranteed_minimal"] = betti.guaranteed_minimal;
    if (!betti.guaranteed_minimal) payload["warning"] = "NotGuaranteedMinimal";
    emit(opt, text.str(), payload);
    return betti.guaranteed_minimal ? exit_ok : exit_hypothesis;
}

int cmd_betti(const Options& opt) {
    const Shape shape = shape_from_json(load_json_file(opt.input));
    const BuiltComplex built = build_from_shape(shape, opt.specialize_flag);
    const BettiResult betti = betti_from_faces(built.complex);

    std::ostringstream text;
    text << "betti (face counts): " << totals_str(betti.table) << "\n";
    text << betti.table.zgraded_str();
    json payload;
    payload["shape"] = to_json(shape);
    payload["specialized"] = built.specialized;
    payload["betti"] = to_json(betti.table);

    if (betti.guaranteed_minimal) {
        bool agree = (betti.table.zgraded() == betti_closed_form_zgraded(shape));
        text << "closed form:";
        for (int i = 1;; ++i) {
            const long long v = betti_closed_form(shape, i);
            if (v == 0) break;
            text << " b" << i << "=" << v;
        }
        text << "\nclosed form agrees: " << (agree ? "yes" : "no") << "\n";
        payload["closed_form_agrees"] = agree;
        emit(opt, text.str(), payload);
        return agree ? exit_ok : exit_mismatch;
    }
    text << "warning: NotGuaranteedMinimal - closed form not applicable\n";
    payload["warning"] = "NotGuaranteedMinimal";
    emit(opt, text.str(), payload);
    return exit_hypothesis;
}

int cmd_specialize(const Options& opt) {
    const json j = load_json_file(opt.input);
    MonomialIdeal I = j.contains("lambda") ? generators(shape_from_json(j)) : ideal_from_json(j);
    if (!I.context().mixed())
        throw error(errc::bad_input, "input ideal must live in an x/y context");
    const Substitution sigma = parse_substitution(opt, I.context().ycount);
    const MonomialIdeal S = specialize(I, sigma);
    std::ostringstream text;
    text << "specialized ideal (" << S.generators().size() << " minimal generators):";
    for (const Monomial& g : S.generators()) text << " " << g.str(S.context());
    text << "\n";
    emit(opt, text.str(), to_json(S));
    return exit_ok;
}

int verify_complex_payload(const Options& opt, const LabeledCellComplex& X,
                           const std::optional<Shape>& shape, bool specialized) {
    const std::vector<Field> fields = resolve_fields(opt);
    const ChainComplex C = cellular_chain_complex(X);
    const bool dsq = d_squared_is_zero(C);
    const bool minimal_entries = check_minimal(C);
    const VerificationReport report = verify_resolution(X, fields, opt.jobs);

    std::ostringstream text;
    json payload;
    text << "fields:";
    for (const Field& f : fields) text << " " << f.str();
    text << "\nd-squared: " << (dsq ? "ok" : "FAIL") << "\n";
    text << "entries minimal: " << (minimal_entries ? "yes" : "no") << "\n";
    text << "restrictions: " << report.degrees_checked << " degrees, "
         << (report.acyclic() ? "all acyclic" : "NON-ACYCLIC restriction found") << "\n";
    payload["d_squared"] = dsq;
    payload["entries_minimal"] = minimal_entries;
    payload["restrictions"] = to_json(report);

    bool mismatch = !dsq;
    if (!report.acyclic()) {
        mismatch = true;
        const HomologyDefect& d = report.defects.front();
        text << "first defect: degree = " << d.degree.str(X.context())
             << ", homological dim = " << d.homological_dim << ", rank = " << d.rank
             << ", field = " << d.field.str() << "\n";
    }

    // Oracle cross-validation against the face counts when the complex
    // is known to support a minimal resolution.
    const bool guaranteed =
        shape.has_value() && (!specialized || shape->mu_row_dominant());
    if (guaranteed) {
        const MonomialIdeal I =
            specialized ? specialize(generators(*shape), Substitution::identity(shape->cols()))
                        : generators(*shape);
        const BettiTable faces = betti_from_faces(X).table;
        const bool closed_ok = faces.zgraded() == betti_closed_form_zgraded(*shape);
        text << "closed form agrees: " << (closed_ok ? "yes" : "no") << "\n";
        payload["closed_form_agrees"] = closed_ok;
        if (!closed_ok) mismatch = true;
        for (const Field& f : fields) {
            if (opt.oracle == "both" || opt.oracle == "koszul") {
                const bool ok = betti_oracle(I, f) == faces;
                text << "koszul oracle over " << f.str() << ": "
                     << (ok ? "agrees" : "MISMATCH") << "\n";
                payload["koszul_" + f.str()] = ok;
                if (!ok) mismatch = true;
            }
            if (opt.oracle == "both" || opt.oracle == "taylor") {
                const bool ok = taylor_betti(I, f) == faces;
                text << "taylor oracle over " << f.str() << ": "
                     << (ok ? "agrees" : "MISMATCH") << "\n";
                payload["taylor_" + f.str()] = ok;
                if (!ok) mismatch = true;
            }
        }
    } else if (shape.has_value()) {
        text << "oracle cross-validation skipped: NotGuaranteedMinimal (some mu_i < i-1)\n";
        payload["oracle_skipped"] = "NotGuaranteedMinimal";
    }

    text << "result: " << (mismatch ? "FAIL" : "ok") << "\n";
    payload["ok"] = !mismatch;
    emit(opt, text.str(), payload);
    return mismatch ? exit_mismatch : exit_ok;
}

int verify_ideal_payload(const Options& opt, const MonomialIdeal& ideal) {
    const std::vector<Field> fields = resolve_fields(opt);
    const MonomialIdeal I = minimize(ideal);
    std::ostringstream text;
    json payload;
    text << "fields:";
    for (const Field& f : fields) text << " " << f.str();
    text << "\n";

    bool mismatch = false;
    std::optional<BettiTable> reference;
    auto take = [&](const std::string& name, const BettiTable& t) {
        if (!reference) {
            reference = t;
            text << name << ": " << totals_str(t) << "\n";
            return;
        }
        const bool ok = t == *reference;
        text << name << ": " << (ok ? "agrees" : "MISMATCH") << "\n";
        payload[name] = ok;
        if (!ok) mismatch = true;
    };
    for (const Field& f : fields) {
        if (opt.oracle == "both" || opt.oracle == "koszul")
            take("koszul_" + f.str(), betti_oracle(I, f));
        if (opt.oracle == "both" || opt.oracle == "taylor")
            take("taylor_" + f.str(), taylor_betti(I, f));
    }
    const InvariantReport inv = invariants_oracle(I, fields.front());
    text << "pdim=" << inv.pdim << " depth=" << inv.depth << " height=" << inv.height
         << " dim=" << inv.dim << " reg=" << inv.reg
         << " CM=" << (inv.cohen_macaulay ? "yes" : "no") << "\n";
    payload["invariants"] = json{{"pdim", inv.pdim},     {"depth", inv.depth},
                                 {"height", inv.height}, {"dim", inv.dim},
                                 {"reg", inv.reg},       {"cohen_macaulay", inv.cohen_macaulay}};
    text << "result: " << (mismatch ? "FAIL" : "ok") << "\n";
    payload["ok"] = !mismatch;
    emit(opt, text.str(), payload);
    return mismatch ? exit_mismatch : exit_ok;
}

int cmd_verify(const Options& opt) {
    const json j = load_json_file(opt.input);
    if (j.contains("lambda")) {
        const Shape shape = shape_from_json(j);
        const BuiltComplex built = build_from_shape(shape, opt.specialize_flag);
        return verify_complex_payload(opt, built.complex, shape, built.specialized);
    }
    if (j.contains("faces")) {
        const LabeledCellComplex X = complex_from_json(j);
        return verify_complex_payload(opt, X, std::nullopt, false);
    }
    if (j.contains("generators")) return verify_ideal_payload(opt, ideal_from_json(j));
    throw error(errc::bad_input, "input must be a shape, complex or ideal file");
}

int cmd_graph(const Options& opt) {
    const Graph g = graph_from_json(load_json_file(opt.input));
    const std::vector<Field> fields = resolve_fields(opt);
    std::ostringstream text;
    json payload = to_json(g);

    if (opt.graph_mode == "threshold") {
        const auto cert = is_threshold(g);
        if (!cert) {
            text << "threshold: no\n";
            payload["threshold"] = false;
            emit(opt, text.str(), payload);
            return exit_condition;
        }
        text << "threshold: yes\ncreation sequence:";
        for (char c : cert->creation) text << " " << c;
        text << "\nweights:";
        for (long long w : cert->weights) text << " " << w;
        text << "\n";
        payload["threshold"] = true;
        payload["creation"] = std::string(cert->creation.begin(), cert->creation.end());
        payload["weights"] = cert->weights;
        const ThresholdShape ts = threshold_shape(g);
        text << "ordering:";
        for (int v : ts.ordering) text << " " << v;
        text << "\nn = " << ts.derivation.n << ", lambda = " << seq(ts.derivation.lambda)
             << ", mu = " << seq(ts.derivation.mu) << "\n";
        text << "height=" << ts.report.height << " depth=" << ts.report.depth
             << " reg=" << ts.report.reg << " betti =";
        for (long long b : ts.report.betti) text << " " << b;
        text << "\n";
        payload["n"] = ts.derivation.n;
        payload["lambda"] = ts.derivation.lambda;
        payload["mu"] = ts.derivation.mu;
        payload["report"] = json{{"height", ts.report.height},
                                 {"depth", ts.report.depth},
                                 {"reg", ts.report.reg},
                                 {"betti", ts.report.betti}};
        const InvariantReport inv = invariants_oracle(edge_ideal(g), fields.front());
        bool agree = inv.height == ts.report.height && inv.depth == ts.report.depth &&
                     inv.reg == ts.report.reg;
        for (size_t i = 0; i < ts.report.betti.size() && agree; ++i)
            agree = inv.betti.total(static_cast<int>(i) + 1) == ts.report.betti[i];
        agree = agree && inv.pdim == static_cast<int>(ts.report.betti.size());
        text << "oracle: " << (agree ? "agrees" : "MISMATCH") << "\n";
        payload["oracle_agrees"] = agree;
        emit(opt, text.str(), payload);
        return agree ? exit_ok : exit_mismatch;
    }

    const GraphAnalysis a = analyze(g);
    text << "ordering:";
    for (int v : a.ordering) text << " " << v;
    text << "\n";
    payload["ordering"] = a.ordering;
    if (a.derivation) {
        text << "derived: n = " << a.derivation->n << ", lambda = " << seq(a.derivation->lambda)
             << ", mu = " << seq(a.derivation->mu) << "\n";
        payload["n"] = a.derivation->n;
        payload["lambda"] = a.derivation->lambda;
        payload["mu"] = a.derivation->mu;
    } else {
        text << "derived: not shape representable\n";
        payload["derived"] = "NotShapeRepresentable";
    }

    if (opt.graph_mode == "shape") {
        text << "condition: " << (a.condition ? "satisfied" : "failed") << "\n";
        payload["condition"] = a.condition;
        emit(opt, text.str(), payload);
        return a.condition ? exit_ok : exit_condition;
    }

    // analyze
    text << "condition: " << (a.condition ? "satisfied" : "failed") << "\n";
    payload["condition"] = a.condition;
    const InvariantReport inv = invariants_oracle(edge_ideal(g), fields.front());
    json oracle_json = json{{"pdim", inv.pdim},     {"depth", inv.depth},
                            {"height", inv.height}, {"dim", inv.dim},
                            {"reg", inv.reg},       {"cohen_macaulay", inv.cohen_macaulay}};
    if (!a.condition) {
        text << "falling back to the brute-force oracle:\n";
        text << "oracle: pdim=" << inv.pdim << " depth=" << inv.depth << " height=" << inv.height
             << " dim=" << inv.dim << " reg=" << inv.reg
             << " CM=" << (inv.cohen_macaulay ? "yes" : "no") << "\n";
        payload["oracle"] = oracle_json;
        emit(opt, text.str(), payload);
        return exit_condition;
    }
    const ClosedFormReport& rep = *a.report;
    text << "closed form: reg=" << rep.reg << " height=" << rep.height << " depth=" << rep.depth
         << " dim=" << rep.dim << " CM=" << (rep.cohen_macaulay ? "yes" : "no") << " betti =";
    for (long long b : rep.betti) text << " " << b;
    text << "\n";
    payload["report"] = json{{"reg", rep.reg},   {"height", rep.height},
                             {"depth", rep.depth}, {"dim", rep.dim},
                             {"cohen_macaulay", rep.cohen_macaulay}, {"betti", rep.betti}};
    payload["oracle"] = oracle_json;
    bool agree = inv.height == rep.height && inv.depth == rep.depth && inv.dim == rep.dim &&
                 inv.reg == rep.reg && inv.cohen_macaulay == rep.cohen_macaulay &&
                 inv.pdim == static_cast<int>(rep.betti.size());
    for (size_t i = 0; i < rep.betti.size() && agree; ++i)
        agree = inv.betti.total(static_cast<int>(i) + 1) == rep.betti[i];
    text << "oracle: " << (agree ? "agrees" : "MISMATCH") << "\n";
    payload["oracle_agrees"] = agree;
    emit(opt, text.str(), payload);
    return agree ? exit_ok : exit_mismatch;
}

int cmd_export(const Options& opt) {
    const json j = load_json_file(opt.input);
    if (opt.what == "dot" && j.contains("m") && j.contains("edges")) {
        emit(opt, to_dot(graph_from_json(j)), json{});
        return exit_ok;
    }
    const Shape shape = shape_from_json(j);
    const BuiltComplex built = build_from_shape(shape, opt.specialize_flag);
    if (opt.what == "complex") {
        const json payload = to_json(built.complex);
        emit(opt, payload.dump(2) + "\n", payload);
    } else if (opt.what == "chain") {
        const json payload = to_json(cellular_chain_complex(built.complex));
        emit(opt, payload.dump(2) + "\n", payload);
    } else if (opt.what == "betti") {
        const json payload = to_json(betti_from_faces(built.complex).table);
        emit(opt, payload.dump(2) + "\n", payload);
    } else if (opt.what == "dot") {
        emit(opt, to_dot(built.complex), json{});
    } else {
        throw error(errc::bad_input, "unknown export kind '" + opt.what + "'");
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Ferrers ideals: cellular resolutions, Betti numbers and "
                 "verification"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool with_fields) {
        sub->add_option("input", opt.input, "input JSON file")->required();
        sub->add_option("--format", opt.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", opt.out, "write output to a file");
        if (with_fields) {
            sub->add_option("--field", opt.field_args,
                            "coefficient field, a prime or Q (repeatable)");
            sub->add_option("--oracle", opt.oracle, "oracle selection")
                ->check(CLI::IsMember({"koszul", "taylor", "both"}));
            sub->add_option("--jobs", opt.jobs, "parallel verification jobs")
                ->check(CLI::PositiveNumber);
        }
    };

    CLI::App* shape = app.add_subcommand("shape", "validate a shape and list its generators");
    add_common(shape, false);

    CLI::App* resolve = app.add_subcommand("resolve", "build the supporting complex and its "
                                                      "chain complex");
    add_common(resolve, false);
    resolve->add_flag("--specialize", opt.specialize_flag, "specialize the labels");

    CLI::App* betti = app.add_subcommand("betti", "Betti tables by face count and closed form");
    add_common(betti, false);
    betti->add_flag("--specialize", opt.specialize_flag, "specialize the labels");

    CLI::App* spec = app.add_subcommand("specialize", "apply a substitution to an ideal");
    add_common(spec, false);
    spec->add_option("--map", opt.map_arg, "comma-separated x-indices for y1..ym "
                                           "(default identity)");

    CLI::App* verify = app.add_subcommand("verify", "full verification run");
    add_common(verify, true);
    verify->add_flag("--specialize", opt.specialize_flag, "specialize the labels");

    CLI::App* graph = app.add_subcommand("graph", "analyze a graph's edge ideal");
    add_common(graph, true);
    graph->add_option("mode", opt.graph_mode, "analyze | shape | threshold")
        ->required()
        ->check(CLI::IsMember({"analyze", "shape", "threshold"}));

    CLI::App* exp = app.add_subcommand("export", "export complexes, chains, tables or DOT");
    add_common(exp, false);
    exp->add_flag("--specialize", opt.specialize_flag, "specialize the labels");
    exp->add_option("--what", opt.what, "complex | chain | betti | dot")
        ->check(CLI::IsMember({"complex", "chain", "betti", "dot"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return exit_invalid_input;
    }

    try {
        if (shape->parsed()) return cmd_shape(opt);
        if (resolve->parsed()) return cmd_resolve(opt);
        if (betti->parsed()) return cmd_betti(opt);
        if (spec->parsed()) return cmd_specialize(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (graph->parsed()) return cmd_graph(opt);
        if (exp->parsed()) return cmd_export(opt);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid_input;
    }
    return exit_invalid_input;
}
