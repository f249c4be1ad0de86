#include "oag/goldens.hpp"
#include "oag/report.hpp"
#include "oag/scene_io.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace oag;

namespace {

struct Options {
    std::string scene;
    bool json = false;
    int verbose = 0;
    int nmax = 0;
    int level = 3;
    std::string base = "A";
};

Scene load(const Options& o)
{
    Scene sc = load_scene(o.scene);
    if (o.nmax > 0)
        sc.congruence.nmax = o.nmax;
    sc.verbosity = o.verbose;
    return sc;
}

void dump_systems(const Scene& sc)
{
    const Ambient& amb = sc.amb;
    SpanHandle A = sc.a_span(), B = sc.b_span();
    auto basis = B.basis();
    int nb = int(basis.size());
    LinearForm b1 = span_variable(amb, basis, 0), b2 = span_variable(amb, basis, nb);
    auto systems = interval_meets_span(amb, b1, b2, A, 2 * nb);
    std::cerr << "interval [b1, b2] over B meets A iff one of " << systems.size() << " eliminated systems holds\n";
    for (const auto& s : systems)
        std::cerr << describe(amb.field(), s) << '\n';
}

int run_decide(const Options& o)
{
    Scene sc = load(o);
    Verdict v = decide_forking(sc);
    if (o.verbose > 0)
        dump_systems(sc);
    if (o.json)
        std::cout << verdict_json(sc, v).dump(2) << '\n';
    else
        std::cout << verdict_text(sc, v);
    return v.forking ? 0 : 1;
}

std::vector<GroupElement> free_part(const Scene& sc, const SpanHandle& A)
{
    std::vector<GroupElement> out;
    SpanHandle acc = A;
    for (const auto& x : sc.c_values())
        if (!span_query(sc.amb, acc, x).member) {
            out.push_back(x);
            acc = acc.join(sc.amb, {x});
        }
    return out;
}

int run_normalize(const Options& o)
{
    Scene sc = load(o);
    SpanHandle A = sc.a_span(), B = sc.b_span();
    auto c = free_part(sc, A);
    NormalizeResult r = normalize(sc.amb, c, A, B);
    auto checks = check_normal_form(sc.amb, r.basis, A, B);
    std::cout << normalize_json(sc.amb, r, checks).dump(2) << '\n';
    return 0;
}

int run_blocks(const Options& o)
{
    Scene sc = load(o);
    SpanHandle D = o.base == "A" ? sc.a_span() : sc.b_span();
    auto c = sc.c_values();
    BlockDecomposition d = val_blocks(sc.amb, c, D, o.level);
    Json j = blocks_json(sc.amb, c, D, d);
    j["base"] = o.base;
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_extensions(const Options& o)
{
    Scene sc = load(o);
    Verdict v = decide_forking(sc);
    SpaceDescriptor sd = extensions(sc, v);
    Json j = extensions_json(sc.amb, sd);
    j["independent"] = v.forking;
    std::cout << j.dump(2) << '\n';
    return v.forking ? 0 : 1;
}

int run_check(const Options& o)
{
    Scene sc = load(o);
    Json j = scene_summary_json(sc);
    j["roundtrip"] = serialize_scene(parse_scene_text(serialize_scene(sc))) == serialize_scene(sc);
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_selftest()
{
    bool all = true;
    auto report = [&](const std::string& group, const std::vector<GoldenCheck>& checks) {
        for (const auto& c : checks) {
            std::cout << (c.ok ? "PASS " : "FAIL ") << group << ": " << c.name << '\n';
            all = all && c.ok;
        }
    };
    report("orthogonality", orthogonality_checks());
    report("extension counts", extension_count_checks());
    report("independence", independence_checks());
    std::vector<GoldenCheck> props;
    for (auto& [name, sc] : golden_scenes()) {
        std::string text = serialize_scene(sc);
        props.push_back({name + " round-trips", serialize_scene(parse_scene_text(text)) == text});
        Verdict v = decide_forking(sc);
        props.push_back({name + " verdict structure",
                         v.forking == v.dividing && v.dividing == v.bounded_orbit && (!v.invariant || v.forking)});
        auto c = sc.c_values();
        props.push_back({name + " same type is reflexive", same_type_over(sc.amb, c, c, sc.a_span())});
    }
    report("properties", props);
    return all ? 0 : 1;
}

}

int main(int argc, char** argv)
{
    CLI::App app{"oagfork: forking and invariant extensions in regular ordered abelian groups"};
    app.require_subcommand(1);
    Options o;
    auto scene_cmd = [&](const std::string& name, const std::string& help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("scene", o.scene, "scene file")->required();
        c->add_flag("-v,--verbose", o.verbose, "print eliminated systems to stderr");
        c->add_option("--nmax", o.nmax, "override the stabilization bound N*");
        return c;
    };
    auto* decide = scene_cmd("decide", "decide forking, dividing and invariance");
    decide->add_flag("--json", o.json, "JSON report");
    auto* norm = scene_cmd("normalize", "normal form basis with termination traces (JSON)");
    auto* blocks = scene_cmd("blocks", "val blocks of c (JSON)");
    blocks->add_option("--level", o.level, "valuation level")->check(CLI::IsMember({1, 2, 3}));
    blocks->add_option("--base", o.base, "base span")->check(CLI::IsMember({"A", "B"}));
    auto* ext = scene_cmd("extensions", "space of invariant extensions (JSON)");
    auto* check = scene_cmd("check", "validate a scene file");
    auto* self = app.add_subcommand("selftest", "golden and property checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        if (*decide)
            return run_decide(o);
        if (*norm)
            return run_normalize(o);
        if (*blocks)
            return run_blocks(o);
        if (*ext)
            return run_extensions(o);
        if (*check)
            return run_check(o);
        if (*self)
            return run_selftest();
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
