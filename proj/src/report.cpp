#include "oag/report.hpp"

#include "oag/scene_io.hpp"

#include <sstream>

namespace oag {

Json rational_json(const Q& q) { return qstr(q); }

Json qvec_json(const QVec& v)
{
    Json a = Json::array();
    for (const auto& q : v)
        a.push_back(rational_json(q));
    return a;
}

Json zvec_json(const ZVec& v)
{
    Json a = Json::array();
    for (const auto& z : v)
        a.push_back(z.get_str());
    return a;
}

Json element_json(const Ambient& amb, const GroupElement& x)
{
    Json o = Json::object();
    for (int s = 0; s < amb.nslots(); ++s) {
        QVec c = amb.slot_coords(x, s);
        if (!is_zero(c))
            o[amb.slots()[s].name] = qvec_json(c);
    }
    return Json{{"text", element_text(amb, x)}, {"slots", o}};
}

static std::string level_name(const Ambient& amb, int level)
{
    if (level <= 0)
        return "0";
    return amb.slots()[amb.slot_of_level(level)].name;
}

Json profile_json(const Ambient& amb, const CutProfile& p)
{
    Json o;
    o["member"] = p.member;
    o["kind"] = p.member ? "member" : p.ramified ? "ramified" : "archimedean";
    o["mu"] = level_name(amb, p.mu);
    if (p.ramified) {
        o["ramifier"] = element_json(amb, p.ramifier);
        o["delta"] = level_name(amb, p.delta);
        o["side"] = p.side;
    }
    o["G"] = p.G.str(amb);
    o["H"] = p.H.str(amb);
    Json st = Json::array();
    for (int l : p.stab_levels)
        st.push_back(level_name(amb, l));
    o["stab_classes"] = st;
    return o;
}

static Json condition_json(const PrimeVerdict& p)
{
    Json o{{"prime", p.l}, {"holds", p.holds}, {"bound", p.detail.bound}};
    if (!p.holds) {
        o["N"] = p.detail.n;
        o["witness_residue"] = zvec_json(p.detail.witness);
        o["coefficients"] = zvec_json(p.detail.coefficients);
    }
    return o;
}

Json verdict_json(const Scene& scene, const Verdict& v)
{
    const Ambient& amb = scene.amb;
    Json o;
    o["independent"] = v.forking;
    o["forking_independent"] = v.forking;
    o["dividing_independent"] = v.dividing;
    o["bounded_orbit"] = v.bounded_orbit;
    o["invariant"] = v.invariant;
    Json c1{{"holds", v.condition1}};
    if (v.interval) {
        c1["witness"] = {{"c", element_json(amb, v.interval->c)},
                         {"combination", qvec_json(v.interval->combination)},
                         {"b1", element_json(amb, v.interval->b1)},
                         {"b2", element_json(amb, v.interval->b2)},
                         {"branch", v.interval->branch}};
    }
    o["condition1"] = c1;
    Json c2 = Json::array();
    for (const auto& p : v.condition2)
        c2.push_back(condition_json(p));
    o["condition2"] = c2;
    Json ie = Json::array();
    for (const auto& p : v.invariance_extra)
        ie.push_back(condition_json(p));
    o["invariance_extra"] = ie;
    Json fr = Json::array();
    for (int i : v.free_indices)
        fr.push_back(scene.c[i].name);
    o["free_subtuple"] = fr;
    o["notes"] = v.notes;
    return o;
}

Json blocks_json(const Ambient& amb, const std::vector<GroupElement>& c, const SpanHandle& D,
                 const BlockDecomposition& d)
{
    Json o;
    o["level"] = d.level;
    Json bl = Json::array();
    for (const auto& b : d.blocks) {
        Json jb;
        jb["G"] = ConvexSubgroup{b.key.g, Flavor::type_definable}.str(amb);
        if (d.level >= 2)
            jb["kind"] = b.key.arch ? "archimedean" : "ramified";
        if (d.level >= 3)
            jb["delta"] = level_name(amb, b.key.delta);
        Json mem = Json::array();
        for (int i : b.members)
            mem.push_back(Json{{"index", i}, {"profile", profile_json(amb, cut_profile(amb, c[i], D))}});
        jb["members"] = mem;
        std::vector<GroupElement> xs;
        for (int i : b.members)
            xs.push_back(c[i]);
        jb["separated"] = is_separated(amb, xs, D, d.level).separated;
        bl.push_back(jb);
    }
    o["blocks"] = bl;
    o["in_span"] = d.in_span;
    return o;
}

Json normalize_json(const Ambient& amb, const NormalizeResult& r, const std::vector<PropertyCheck>& checks)
{
    Json o;
    Json terms = Json::array();
    Json transform = Json::array();
    for (const auto& t : r.basis.terms) {
        terms.push_back(Json{{"value", element_json(amb, t.value)},
                             {"lambda", qvec_json(t.lambda)},
                             {"translation", element_json(amb, t.translation)},
                             {"role", role_name(t.role)},
                             {"over_A", profile_json(amb, t.over_a)},
                             {"over_B", profile_json(amb, t.over_b)}});
        transform.push_back(qvec_json(t.lambda));
    }
    o["basis"] = terms;
    o["transform"] = transform;
    auto trace = [](const std::vector<TraceStep>& steps) {
        Json a = Json::array();
        for (const auto& s : steps)
            a.push_back(Json{{"phase", s.phase}, {"measure", s.measure}});
        return a;
    };
    o["rho_trace"] = trace(r.rho_trace);
    o["g_trace"] = trace(r.g_trace);
    o["steps"] = r.steps;
    o["diagnostics"] = r.diagnostics;
    Json props = Json::object();
    for (const auto& c : checks) {
        Json p{{"ok", c.ok}};
        if (!c.ok)
            p["counterexample"] = qvec_json(c.counterexample);
        props[c.name] = p;
    }
    o["properties"] = props;
    return o;
}

Json extensions_json(const Ambient& amb, const SpaceDescriptor& sd)
{
    Json o;
    o["empty"] = sd.empty;
    Json fs = Json::array();
    for (const auto& f : sd.factors) {
        Json cp = Json::array();
        for (const auto& s : f.coproduct)
            cp.push_back(Json{{"label", s.label}, {"parameters", s.parameters}});
        fs.push_back(Json{{"kind", f.kind}, {"label", f.label}, {"coproduct", cp}});
    }
    o["factors"] = fs;
    Json cl = Json::array();
    for (const auto& c : sd.classifications) {
        Json subs = Json::array();
        for (const auto& s : c.subs)
            subs.push_back(Json{{"delta", level_name(amb, s.delta)},
                                {"members", s.members},
                                {"arch_over_A", s.arch_over_a},
                                {"invariant_extensions", s.invariant_extensions},
                                {"segment", segment_name(s.segment)}});
        Json plans = Json::array();
        for (int k = 0; k <= c.size_j; ++k) {
            GluingPlan g = gluing_plan(c, k);
            Json order = Json::array();
            for (const auto& e : g.order)
                order.push_back(Json{{"sub", e.sub}, {"delta", level_name(amb, e.delta)}, {"inner", e.inner}});
            plans.push_back(Json{{"inner_prefix", k}, {"order", order}, {"valid", g.valid}});
        }
        cl.push_back(Json{{"G", ConvexSubgroup{c.key.g, Flavor::type_definable}.str(amb)},
                          {"H_definable", c.h_definable},
                          {"G_definable", c.g_definable},
                          {"sub_blocks", subs},
                          {"strong_extensions", c.strong_extensions},
                          {"sizes", {{"I", c.size_i}, {"O", c.size_o}, {"J", c.size_j}}},
                          {"gluing", plans}});
    }
    o["blocks"] = cl;
    return o;
}

Json scene_summary_json(const Scene& scene)
{
    const Ambient& amb = scene.amb;
    Json o;
    o["valid"] = true;
    o["kind"] = amb.kind() == SceneKind::dense ? "dense" : "discrete";
    o["field_degree"] = amb.field().degree();
    Json slots = Json::array();
    for (const auto& s : amb.slots())
        slots.push_back(Json{{"name", s.name}, {"width", s.gens.size()}});
    o["slots"] = slots;
    o["dim_A"] = scene.a_span().dim();
    o["dim_B"] = scene.b_span().dim();
    o["tuple_length"] = scene.c.size();
    Json pr = Json::array();
    for (const auto& p : scene.congruence.primes)
        pr.push_back(Json{{"prime", p.l},
                          {"kind", p.kind == PrimeKind::divisible ? "divisible"
                                   : p.kind == PrimeKind::finite  ? "finite"
                                                                  : "infinite"},
                          {"dim", p.dim}});
    o["primes"] = pr;
    return o;
}

std::string verdict_text(const Scene& scene, const Verdict& v)
{
    const Ambient& amb = scene.amb;
    std::ostringstream os;
    os << "verdict: " << (v.forking ? "independent" : "dependent") << '\n';
    os << "  forking/dividing/bounded-orbit: " << (v.forking ? "independent" : "dependent") << '\n';
    os << "  invariant extension: " << (v.invariant ? "yes" : "no") << '\n';
    os << "  condition 1 (intervals): " << (v.condition1 ? "holds" : "fails") << '\n';
    if (v.interval)
        os << "    c' = " << element_text(amb, v.interval->c) << " lies in [" << element_text(amb, v.interval->b1)
           << ", " << element_text(amb, v.interval->b2) << "] which avoids A (" << v.interval->branch << ")\n";
    for (const auto& p : v.condition2) {
        os << "  condition 2 at l=" << p.l << ": " << (p.holds ? "holds" : "fails");
        if (!p.holds)
            os << " at N=" << p.detail.n;
        os << '\n';
    }
    for (const auto& p : v.invariance_extra) {
        os << "  finite-index coset check at l=" << p.l << ": " << (p.holds ? "holds" : "fails");
        if (!p.holds)
            os << " at N=" << p.detail.n;
        os << '\n';
    }
    for (const auto& n : v.notes)
        os << "  note: " << n << '\n';
    return os.str();
}

}
