// Command-line frontend. Every run prints a single JSON report:
//   {"command": ..., "inputs": ..., "warnings": [...], "timing_ms": n,
//    "payload": ...}
// Exit codes: 0 success, 1 malformed input, 2 verification failure,
// 64 usage error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "statesum/cech.hpp"
#include "statesum/errors.hpp"
#include "statesum/finite_group.hpp"
#include "statesum/holonomy.hpp"
#include "statesum/homology.hpp"
#include "statesum/homs.hpp"
#include "statesum/json_io.hpp"
#include "statesum/labelings.hpp"
#include "statesum/presentation.hpp"
#include "statesum/simplicial_complex.hpp"

using namespace statesum;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitVerification = 2;
constexpr int kExitUsage = 64;

struct Report {
    json command;
    json inputs = json::object();
    std::vector<std::string> warnings;
    json payload = json::object();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void record_input(const std::string& role, const std::string& path) {
        inputs[role] = {{"path", path}, {"fnv1a64", file_digest(path)}};
    }

    int finish(bool compact, int code) const {
        json out = {
            {"command", command},
            {"inputs", inputs},
            {"warnings", warnings},
            {"timing_ms", std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count()},
            {"payload", payload},
        };
        if (compact)
            std::cout << out.dump() << "\n";
        else
            std::cout << out.dump(2) << "\n";
        return code;
    }
};

int env_threads() {
    const char* raw = std::getenv("STATESUM_THREADS");
    if (raw == nullptr) return 0;
    int n = std::atoi(raw);
    return n < 0 ? 0 : n;
}

json verdict_json(const Verdict& v) {
    json viols = json::array();
    for (const Simplex& s : v.violations) viols.push_back(s);
    return {{"ok", v.ok}, {"violations", viols}};
}

json class_json(const CohomologyClass& c) {
    json coords = json::array();
    for (const Int& x : c.coords) coords.push_back(int_to_json(x));
    json rep = json::array();
    for (const Int& x : c.representative) rep.push_back(int_to_json(x));
    return {{"degree", c.degree},
            {"group", c.group.describe()},
            {"coords", coords},
            {"representative", rep},
            {"zero", c.is_zero()}};
}

GroupHom group_hom_from_json(const json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("images"))
        throw MalformedInputError("hom file needs 'group' and 'images'");
    GroupHom h;
    h.group = std::make_shared<const FiniteGroup>(group_from_spec(j.at("group").get<std::string>()));
    for (const auto& v : j.at("images")) {
        if (!v.is_number_integer()) throw MalformedInputError("hom images must be integers");
        h.images.push_back(v.get<int>());
    }
    for (int x : h.images)
        if (x < 0 || x >= h.group->order())
            throw MalformedInputError("hom image outside the group");
    return h;
}

// ---------------------------------------------------------------------------

struct Options {
    bool compact = false;
    std::string complex_path, group_spec, cocycle_path, input_path, gauge_path;
    std::string connection_path, path_path, cycle_path, hom_path;
    int basepoint = 0;
    int dim = -1;
    int simplify_effort = 0;
};

int run_dw(Report& rep, const Options& opt) {
    rep.record_input("complex", opt.complex_path);
    std::string name;
    ComplexPtr k = complex_from_json(load_json_file(opt.complex_path), &name);
    GroupPtr g = std::make_shared<const FiniteGroup>(group_from_spec(opt.group_spec));
    Int value = dw_invariant(*k, g, env_threads());
    rep.payload = {{"invariant", int_to_json(value)},
                   {"group", opt.group_spec},
                   {"complex", name}};
    return kExitOk;
}

int run_yetter(Report& rep, const Options& opt) {
    rep.record_input("complex", opt.complex_path);
    std::string name;
    ComplexPtr k = complex_from_json(load_json_file(opt.complex_path), &name);
    CoeffGroup cg = parse_coeff_spec(opt.group_spec);
    if (!cg.is_finite()) throw UnsupportedError("yetter needs a finite coefficient group");
    std::vector<Int> factors;
    for (const Int& m : cg.moduli()) factors.push_back(m);
    YetterResult r = yetter_invariant(*k, FinAbelianGroup::from_factors(factors));
    if (!r.warning.empty()) rep.warnings.push_back(r.warning);
    rep.payload = {{"invariant", int_to_json(r.invariant)},
                   {"verified_simply_connected", r.verified_simply_connected},
                   {"h2", r.h2.describe()},
                   {"group", opt.group_spec},
                   {"complex", name}};
    return kExitOk;
}

int run_pi1(Report& rep, const Options& opt) {
    rep.record_input("complex", opt.complex_path);
    ComplexPtr k = complex_from_json(load_json_file(opt.complex_path));
    Presentation p = present_pi1(k, opt.basepoint);
    if (opt.simplify_effort > 0) p = simplify_presentation(std::move(p), opt.simplify_effort);
    SimplyConnectedCheck sc = check_simply_connected(p);
    rep.payload = {{"presentation", presentation_to_json(p)},
                   {"abelianization", abelianization(p).describe()},
                   {"simply_connected",
                    {{"verified", sc.verified}, {"reason", sc.reason}}}};
    return kExitOk;
}

int run_homology(Report& rep, const Options& opt) {
    rep.record_input("complex", opt.complex_path);
    ComplexPtr k = complex_from_json(load_json_file(opt.complex_path));
    json rows = json::array();
    int lo = opt.dim >= 0 ? opt.dim : 0;
    int hi = opt.dim >= 0 ? opt.dim : k->dimension();
    for (int d = lo; d <= hi; ++d) {
        FinAbelianGroup h = homology(*k, d);
        rows.push_back({{"dim", d}, {"group", finabelian_to_json(h)}, {"describe", h.describe()}});
    }
    rep.payload = {{"homology", rows}};
    return kExitOk;
}

int run_cech_verify(Report& rep, const Options& opt) {
    rep.record_input("cocycle", opt.cocycle_path);
    LabeledFile f = labeled_from_json(load_json_file(opt.cocycle_path));
    Verdict v;
    if (f.edge)
        v = verify_bundle_cocycle(*f.edge);
    else if (f.triangle)
        v = verify_gerbe_cocycle(*f.triangle);
    else if (f.abelian_edge)
        v = verify_abelian_bundle_cocycle(*f.abelian_edge);
    else
        throw MalformedInputError("kind '" + f.kind + "' has no cocycle law to verify");
    rep.payload = verdict_json(v);
    rep.payload["kind"] = f.kind;
    return v.ok ? kExitOk : kExitVerification;
}

int run_cech_class(Report& rep, const Options& opt) {
    rep.record_input("cocycle", opt.cocycle_path);
    LabeledFile f = labeled_from_json(load_json_file(opt.cocycle_path));
    if (f.triangle) {
        Verdict v = verify_gerbe_cocycle(*f.triangle);
        if (!v.ok) {
            rep.payload = verdict_json(v);
            rep.payload["error"] = "not a gerbe cocycle";
            return kExitVerification;
        }
        rep.payload = class_json(characteristic_class(*f.triangle));
    } else if (f.abelian_edge) {
        Verdict v = verify_abelian_bundle_cocycle(*f.abelian_edge);
        if (!v.ok) {
            rep.payload = verdict_json(v);
            rep.payload["error"] = "not an abelian bundle cocycle";
            return kExitVerification;
        }
        rep.payload = class_json(characteristic_class_bundle(*f.abelian_edge));
    } else {
        throw MalformedInputError("kind '" + f.kind + "' has no characteristic class");
    }
    return kExitOk;
}

int run_gauge(Report& rep, const Options& opt) {
    rep.record_input("input", opt.input_path);
    rep.record_input("gauge", opt.gauge_path);
    LabeledFile in = labeled_from_json(load_json_file(opt.input_path));
    LabeledFile gf = labeled_from_json(load_json_file(opt.gauge_path));
    if (in.edge && gf.vertex_gauge) {
        rep.payload = to_json(apply_gauge(*in.edge, *gf.vertex_gauge), in.kind);
    } else if (in.triangle && gf.abelian_edge) {
        rep.payload = to_json(apply_gauge(*in.triangle, *gf.abelian_edge), in.kind);
    } else if (in.abelian_edge && gf.abelian_vertex_gauge) {
        rep.payload = to_json(apply_gauge(*in.abelian_edge, *gf.abelian_vertex_gauge), in.kind);
    } else {
        throw MalformedInputError("gauge kind '" + gf.kind + "' cannot act on '" + in.kind + "'");
    }
    return kExitOk;
}

int run_holonomy(Report& rep, const Options& opt) {
    rep.record_input("connection", opt.connection_path);
    rep.record_input("path", opt.path_path);
    LabeledFile f = labeled_from_json(load_json_file(opt.connection_path));
    if (!f.edge) throw MalformedInputError("holonomy needs a connection or bundle file");
    EdgePath p = path_from_json(load_json_file(opt.path_path));
    validate_path(*f.edge->complex, p);
    int h = loop_holonomy(*f.edge, p);
    rep.payload = {{"holonomy", h}, {"group", f.edge->group->name()}};
    return kExitOk;
}

int run_flat_check(Report& rep, const Options& opt) {
    rep.record_input("connection", opt.connection_path);
    LabeledFile f = labeled_from_json(load_json_file(opt.connection_path));
    Verdict v;
    if (f.edge)
        v = is_flat(*f.edge);
    else if (f.triangle)
        v = is_gerbe_flat(*f.triangle);
    else
        throw MalformedInputError("flat-check needs a connection or gerbe-connection file");
    rep.payload = verdict_json(v);
    rep.payload["kind"] = f.kind;
    return v.ok ? kExitOk : kExitVerification;
}

int run_reconstruct(Report& rep, const Options& opt) {
    rep.record_input("complex", opt.complex_path);
    rep.record_input("hom", opt.hom_path);
    ComplexPtr k = complex_from_json(load_json_file(opt.complex_path));
    GroupHom phi = group_hom_from_json(load_json_file(opt.hom_path));
    Presentation p = present_pi1(k, opt.basepoint);
    EdgeLabeling a = hom_to_connection(p, phi);
    rep.payload = {{"connection", to_json(a, "connection")},
                   {"generators", p.generators},
                   {"basepoint", p.basepoint}};
    return kExitOk;
}

int run_gerbe_holonomy(Report& rep, const Options& opt) {
    rep.record_input("connection", opt.connection_path);
    LabeledFile f = labeled_from_json(load_json_file(opt.connection_path));
    if (!f.triangle)
        throw MalformedInputError("gerbe-holonomy needs a gerbe-connection file");
    if (!opt.cycle_path.empty()) {
        rep.record_input("cycle", opt.cycle_path);
        TwoCycle z = twocycle_from_json(load_json_file(opt.cycle_path));
        AbValue h = two_cycle_holonomy(*f.triangle, z);
        rep.payload = {{"holonomy", abvalue_to_json(f.triangle->group, h)},
                       {"group", f.triangle->group.describe()}};
        return kExitOk;
    }
    AbelianHom psi = gerbe_holonomy_hom(*f.triangle);
    rep.payload = {{"hom", abelian_hom_to_json(psi)}, {"h2", psi.source.describe()}};
    return kExitOk;
}

int run_gerbe_reconstruct(Report& rep, const Options& opt) {
    rep.record_input("complex", opt.complex_path);
    rep.record_input("hom", opt.hom_path);
    ComplexPtr k = complex_from_json(load_json_file(opt.complex_path));
    AbelianHom psi = abelian_hom_from_json(load_json_file(opt.hom_path));
    TriangleLabeling b = hom_to_gerbe_connection(k, psi);
    rep.payload = {{"gerbe_connection", to_json(b, "gerbe-connection")}};
    return kExitOk;
}

int run_fixtures(Report& rep) {
    json rows = json::array();
    for (const FixtureInfo& f : fixture_registry()) {
        SimplicialComplex k = build_complex(f.maximal);
        rows.push_back({{"name", f.name},
                        {"description", f.description},
                        {"f_vector", k.f_vector()},
                        {"euler_characteristic", int_to_json(k.euler_characteristic())}});
    }
    rep.payload = {{"fixtures", rows}};
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"state-sum invariants and discrete holonomy on triangulated spaces"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--compact", opt.compact, "emit single-line JSON");

    auto* dw = app.add_subcommand("dw", "count homs from the fundamental group into a finite group");
    dw->add_option("--complex", opt.complex_path, "complex JSON file")->required();
    dw->add_option("--group", opt.group_spec, "group spec, e.g. sym:3")->required();

    auto* yetter = app.add_subcommand("yetter", "count homs from H2 into a finite abelian group");
    yetter->add_option("--complex", opt.complex_path, "complex JSON file")->required();
    yetter->add_option("--group", opt.group_spec, "abelian group spec, e.g. cyclic:5")->required();

    auto* pi1 = app.add_subcommand("pi1", "edge-path presentation of the fundamental group");
    pi1->add_option("--complex", opt.complex_path, "complex JSON file")->required();
    pi1->add_option("--basepoint", opt.basepoint, "basepoint vertex (default 0)");
    pi1->add_option("--simplify-effort", opt.simplify_effort, "Tietze simplification budget");

    auto* hom = app.add_subcommand("homology", "integral homology groups");
    hom->add_option("--complex", opt.complex_path, "complex JSON file")->required();
    hom->add_option("--dim", opt.dim, "single dimension (default: all)");

    auto* cv = app.add_subcommand("cech-verify", "check the cocycle law of a labeled file");
    cv->add_option("--cocycle", opt.cocycle_path, "labeled JSON file")->required();

    auto* cc = app.add_subcommand("cech-class", "characteristic class of a cocycle");
    cc->add_option("--cocycle", opt.cocycle_path, "labeled JSON file")->required();

    auto* ga = app.add_subcommand("gauge", "apply gauge data to a cocycle or labeling");
    ga->add_option("--input", opt.input_path, "labeled JSON file")->required();
    ga->add_option("--gauge", opt.gauge_path, "gauge JSON file")->required();

    auto* ho = app.add_subcommand("holonomy", "holonomy of a loop under an edge labeling");
    ho->add_option("--connection", opt.connection_path, "connection JSON file")->required();
    ho->add_option("--path", opt.path_path, "loop JSON file")->required();

    auto* fc = app.add_subcommand("flat-check", "flatness of a connection or gerbe-connection");
    fc->add_option("--connection", opt.connection_path, "labeled JSON file")->required();

    auto* rc = app.add_subcommand("reconstruct", "flat connection realizing a fundamental-group hom");
    rc->add_option("--complex", opt.complex_path, "complex JSON file")->required();
    rc->add_option("--hom", opt.hom_path, "hom JSON file {group, images}")->required();
    rc->add_option("--basepoint", opt.basepoint, "basepoint vertex (default 0)");

    auto* gh = app.add_subcommand("gerbe-holonomy", "holonomy of a gerbe-connection");
    gh->add_option("--connection", opt.connection_path, "gerbe-connection JSON file")->required();
    gh->add_option("--cycle", opt.cycle_path, "2-cycle JSON file (default: full hom on H2)");

    auto* gr = app.add_subcommand("gerbe-reconstruct", "flat gerbe-connection realizing an H2 hom");
    gr->add_option("--complex", opt.complex_path, "complex JSON file")->required();
    gr->add_option("--hom", opt.hom_path, "abelian hom JSON file")->required();

    app.add_subcommand("fixtures", "list the shipped complexes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help() << "\n";
        return kExitUsage;
    }

    Report rep;
    json argv_echo = json::array();
    for (int i = 1; i < argc; ++i) argv_echo.push_back(argv[i]);
    CLI::App* sub = app.get_subcommands().front();
    rep.command = {{"subcommand", sub->get_name()}, {"argv", argv_echo}};

    try {
        int code = kExitOk;
        if (sub == dw)
            code = run_dw(rep, opt);
        else if (sub == yetter)
            code = run_yetter(rep, opt);
        else if (sub == pi1)
            code = run_pi1(rep, opt);
        else if (sub == hom)
            code = run_homology(rep, opt);
        else if (sub == cv)
            code = run_cech_verify(rep, opt);
        else if (sub == cc)
            code = run_cech_class(rep, opt);
        else if (sub == ga)
            code = run_gauge(rep, opt);
        else if (sub == ho)
            code = run_holonomy(rep, opt);
        else if (sub == fc)
            code = run_flat_check(rep, opt);
        else if (sub == rc)
            code = run_reconstruct(rep, opt);
        else if (sub == gh)
            code = run_gerbe_holonomy(rep, opt);
        else if (sub == gr)
            code = run_gerbe_reconstruct(rep, opt);
        else
            code = run_fixtures(rep);
        return rep.finish(opt.compact, code);
    } catch (const MalformedInputError& e) {
        rep.payload = {{"error", e.what()}};
        return rep.finish(opt.compact, kExitMalformed);
    } catch (const DisconnectedError& e) {
        rep.payload = {{"error", e.what()}};
        return rep.finish(opt.compact, kExitMalformed);
    } catch (const UnsupportedError& e) {
        rep.payload = {{"error", e.what()}};
        return rep.finish(opt.compact, kExitMalformed);
    } catch (const PreconditionError& e) {
        rep.payload = {{"error", e.what()}};
        return rep.finish(opt.compact, kExitVerification);
    } catch (const NoSolutionError& e) {
        rep.payload = {{"error", e.what()}};
        return rep.finish(opt.compact, kExitVerification);
    } catch (const std::exception& e) {
        rep.payload = {{"error", e.what()}};
        return rep.finish(opt.compact, kExitMalformed);
    }
}
