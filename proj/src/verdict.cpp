#include "oag/verdict.hpp"

#include <set>

namespace oag {

static std::vector<GroupElement> values_of(const std::vector<NamedElement>& xs)
{
    std::vector<GroupElement> out;
    for (const auto& x : xs)
        out.push_back(x.value);
    return out;
}

std::vector<GroupElement> Scene::a_values() const { return values_of(A); }
std::vector<GroupElement> Scene::b_values() const { return values_of(B); }
std::vector<GroupElement> Scene::c_values() const { return values_of(c); }

SpanHandle Scene::a_span() const
{
    auto gens = a_values();
    if (amb.kind() == SceneKind::discrete)
        gens.push_back(amb.unit());
    return SpanHandle(amb, gens);
}

SpanHandle Scene::b_span() const
{
    auto gens = a_values();
    auto more = b_values();
    gens.insert(gens.end(), more.begin(), more.end());
    if (amb.kind() == SceneKind::discrete)
        gens.push_back(amb.unit());
    return SpanHandle(amb, gens);
}

std::vector<ZVec> Scene::residues(const std::vector<NamedElement>& xs, long l) const
{
    const PrimeSpec& p = congruence.prime(l);
    std::vector<ZVec> out;
    for (const auto& x : xs) {
        auto it = p.residues.find(x.name);
        if (it == p.residues.end())
            throw ConfigError("no residue for " + x.name + " at prime " + std::to_string(l));
        out.push_back(it->second);
    }
    return out;
}

std::optional<ZVec> Scene::unit_residue(long l) const
{
    const PrimeSpec& p = congruence.prime(l);
    if (amb.kind() == SceneKind::discrete) {
        ZVec e(size_t(p.dim), Z(0));
        if (!e.empty())
            e[0] = 1;
        return e;
    }
    auto it = p.residues.find("one");
    if (it != p.residues.end())
        return it->second;
    return std::nullopt;
}

void Scene::validate() const
{
    std::set<std::string> names;
    for (const auto* list : {&A, &B, &c})
        for (const auto& x : *list) {
            if (x.name == "one")
                throw ConfigError("the name 'one' is reserved for the unit");
            if (!names.insert(x.name).second)
                throw ConfigError("duplicate element name: " + x.name);
            amb.check(x.value);
        }
    if (c.empty())
        throw ConfigError("scene has an empty [c] section");
    std::set<long> seen;
    for (const auto& p : congruence.primes) {
        if (p.l < 2)
            throw ConfigError("invalid prime " + std::to_string(p.l));
        for (long q = 2; q * q <= p.l; ++q)
            if (p.l % q == 0)
                throw ConfigError(std::to_string(p.l) + " is not prime");
        if (!seen.insert(p.l).second)
            throw ConfigError("prime " + std::to_string(p.l) + " declared twice");
        if (p.kind == PrimeKind::divisible) {
            if (!p.residues.empty())
                throw ConfigError("divisible prime " + std::to_string(p.l) + " carries residue data");
            if (amb.kind() == SceneKind::discrete)
                throw ConfigError("discrete scenes cannot be divisible at " + std::to_string(p.l));
            continue;
        }
        if (p.dim < 1)
            throw ConfigError("prime " + std::to_string(p.l) + " needs a positive residue dimension");
        for (const auto& [name, r] : p.residues) {
            if (int(r.size()) != p.dim)
                throw ConfigError("residue of " + name + " at prime " + std::to_string(p.l) + " has wrong length");
            if (name != "one" && !names.count(name))
                throw ConfigError("residue for unknown element " + name);
        }
        for (const auto& n : names)
            if (!p.residues.count(n))
                throw ConfigError("no residue for " + n + " at prime " + std::to_string(p.l));
        if (amb.kind() == SceneKind::discrete) {
            if (p.kind == PrimeKind::infinite || p.dim != 1)
                throw ConfigError("discrete scenes have index l at every prime (finite, dimension 1)");
            auto it = p.residues.find("one");
            if (it != p.residues.end() && it->second != *unit_residue(p.l))
                throw ConfigError("residue of one must be the unit coordinate");
        }
    }
}

static std::vector<int> free_subtuple(const Ambient& amb, const SpanHandle& A, const std::vector<GroupElement>& c)
{
    std::vector<int> idx;
    SpanHandle acc = A;
    for (size_t i = 0; i < c.size(); ++i)
        if (!span_query(amb, acc, c[i]).member) {
            idx.push_back(int(i));
            acc = acc.join(amb, {c[i]});
        }
    return idx;
}

static Choice single(Conj cj) { return Choice{{std::move(cj)}}; }

static Conj zero_slots(const Ambient& amb, const LinearForm& f, int from, int to, int nv, bool& ok)
{
    Conj cj;
    ok = true;
    for (int s = from; s <= to && ok; ++s) {
        auto eqs = slot_zero(amb, f, s, nv, ok);
        cj.eqs.insert(cj.eqs.end(), eqs.begin(), eqs.end());
    }
    return cj;
}

static Choice lead_band(const Ambient& amb, const LinearForm& f, int lo, int hi, int sign, int nv)
{
    Choice ch;
    for (int u = lo; u < hi; ++u) {
        bool ok = true;
        Conj cj = lead_conj(amb, f, u, sign, nv, ok);
        if (ok)
            ch.alts.push_back(std::move(cj));
    }
    return ch;
}

CutIndependence decide_cut_independence(const Ambient& amb, const SpanHandle& A, const SpanHandle& B,
                                        const std::vector<GroupElement>& c)
{
    if (!B.contains_span(A))
        throw ConfigError("decide_cut_independence: A is not contained in B");
    CutIndependence res;
    res.free_indices = free_subtuple(amb, A, c);
    if (res.free_indices.empty())
        return res;
    std::vector<GroupElement> free;
    for (int i : res.free_indices)
        free.push_back(c[i]);
    auto abasis = A.basis();
    auto bbasis = B.basis();
    int k = int(free.size()), na = int(abasis.size()), nb = int(bbasis.size());
    int nv = k + na + 2 * nb;
    LinearForm cp = span_variable(amb, free, 0).plus(span_variable(amb, abasis, k), amb);
    LinearForm b1 = span_variable(amb, bbasis, k + na);
    LinearForm b2 = span_variable(amb, bbasis, k + na + nb);
    Choice lower = lex_choice(amb, b1.minus(cp, amb), Rel::le, nv);
    Choice upper = lex_choice(amb, cp.minus(b2, amb), Rel::le, nv);
    const FieldSpec& F = amb.field();
    int S = amb.nslots();

    for (int t = 1; t <= S; ++t) {
        std::vector<std::pair<Problem, std::string>> branches;
        if (!A.has_level(t)) {
            int lo = A.prev_level(t) + 1;
            int hi = A.next_level(t) < 0 ? S + 1 : A.next_level(t);
            for (int sigma : {1, -1}) {
                bool ok = true;
                Conj lead = lead_conj(amb, cp, t, sigma, nv, ok);
                if (!ok)
                    continue;
                Problem p;
                p.nvars = nv;
                p.choices = {single(lead), lead_band(amb, b1, lo, hi, sigma, nv),
                             lead_band(amb, b2, lo, hi, sigma, nv), lower, upper};
                branches.push_back({p, std::string("ramified at ") + amb.slots()[amb.slot_of_level(t)].name +
                                           (sigma > 0 ? " (+)" : " (-)")});
            }
        } else {
            int slot = amb.slot_of_level(t);
            bool ok = true;
            Conj top = zero_slots(amb, cp, 0, slot - 1, nv, ok);
            if (!ok)
                continue;
            QMat ann = nullspace(slot_part_space(amb, A, t), amb.width(slot));
            Choice escape;
            for (const auto& phi : ann)
                for (int sigma : {1, -1}) {
                    QVec coef(nv, Q(0));
                    Q constant = 0;
                    size_t off = amb.offset(slot);
                    for (size_t j = 0; j < phi.size(); ++j) {
                        constant += phi[j] * cp.constant.v[off + j];
                        for (const auto& [var, g] : cp.terms)
                            coef[var] += phi[j] * g.v[off + j];
                    }
                    for (auto& x : coef)
                        x *= -sigma;
                    Conj cj;
                    cj.strict.push_back(rational_strict(F, coef, constant * -sigma));
                    cj.tag = "escape";
                    escape.alts.push_back(cj);
                }
            bool ok1 = true, ok2 = true;
            Conj c1 = zero_slots(amb, b1.minus(cp, amb), 0, slot, nv, ok1);
            Conj c2 = zero_slots(amb, b2.minus(cp, amb), 0, slot, nv, ok2);
            if (!ok1 || !ok2)
                continue;
            Problem p;
            p.nvars = nv;
            p.choices = {single(top), escape, single(c1), single(c2), lower, upper};
            branches.push_back({p, "archimedean at " + amb.slots()[slot].name});
        }
        for (auto& [p, label] : branches) {
            FeasResult r = solve_parallel(F, p);
            res.leaves += r.leaves;
            if (!r.sat)
                continue;
            CutWitness w;
            w.c = cp.eval(r.witness, amb);
            w.b1 = b1.eval(r.witness, amb);
            w.b2 = b2.eval(r.witness, amb);
            w.combination = QVec(r.witness.begin(), r.witness.begin() + k);
            w.branch = label;
            if (compare_elements(amb, w.b1, w.c) > 0 || compare_elements(amb, w.c, w.b2) > 0 ||
                !interval_meets_span(amb, LinearForm::of(w.b1), LinearForm::of(w.b2), A, 0).empty())
                throw std::logic_error("decide_cut_independence: witness failed verification");
            res.independent = false;
            res.witness = w;
            return res;
        }
    }
    return res;
}

void check_verdict_structure(const Verdict& v)
{
    if (v.forking != v.dividing || v.dividing != v.bounded_orbit)
        throw std::logic_error("verdict: forking, dividing and bounded orbit disagree");
    if (v.invariant && !v.forking)
        throw std::logic_error("verdict: invariant but forking");
    bool all2 = v.condition1;
    for (const auto& p : v.condition2)
        all2 = all2 && p.holds;
    if (all2 != v.forking)
        throw std::logic_error("verdict: conditions do not match the forking verdict");
}

Verdict decide_forking(const Scene& scene)
{
    scene.validate();
    const Ambient& amb = scene.amb;
    Verdict v;
    SpanHandle A = scene.a_span();
    SpanHandle B = scene.b_span();
    auto cvals = scene.c_values();
    CutIndependence ci = decide_cut_independence(amb, A, B, cvals);
    v.condition1 = ci.independent;
    v.interval = ci.witness;
    v.free_indices = ci.free_indices;
    if (ci.free_indices.size() < cvals.size())
        v.notes.push_back("reduced c to a free subtuple of size " + std::to_string(ci.free_indices.size()));

    const auto& primes = scene.congruence.primes;
    std::vector<PrimeVerdict> results(primes.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (size_t i = 0; i < primes.size(); ++i) {
        const PrimeSpec& p = primes[i];
        PrimeVerdict pv;
        pv.l = p.l;
        pv.kind = p.kind;
        if (p.kind != PrimeKind::divisible) {
            size_t m = size_t(p.dim);
            auto unit = scene.unit_residue(p.l);
            auto C = scene.residues(scene.c, p.l);
            auto ares = scene.residues(scene.A, p.l);
            auto bres = ares;
            auto more = scene.residues(scene.B, p.l);
            bres.insert(bres.end(), more.begin(), more.end());
            auto Ap = saturate_special(ares, m, unit);
            auto Bp = saturate_special(bres, m, unit);
            if (p.kind == PrimeKind::infinite)
                pv.detail = infinite_index_condition(C, Ap, Bp, p.l, m, scene.congruence.nmax);
            else
                pv.detail = finite_index_condition(C, Ap, p.l, m, scene.congruence.nmax);
            pv.holds = pv.detail.holds;
        }
        results[i] = pv;
    }
    for (const auto& pv : results) {
        if (pv.kind == PrimeKind::infinite)
            v.condition2.push_back(pv);
        else if (pv.kind == PrimeKind::finite)
            v.invariance_extra.push_back(pv);
    }
    bool ok = v.condition1;
    for (const auto& p : v.condition2)
        ok = ok && p.holds;
    v.forking = v.dividing = v.bounded_orbit = ok;
    bool inv = ok;
    for (const auto& p : v.invariance_extra)
        inv = inv && p.holds;
    v.invariant = inv;
    if (ok && !inv)
        v.notes.push_back("non-forking but not invariant: some finite-index prime fails the coset condition");
    check_verdict_structure(v);
    return v;
}

bool same_type_over(const Ambient& amb, const std::vector<GroupElement>& x, const std::vector<GroupElement>& y,
                    const SpanHandle& D)
{
    if (x.size() != y.size())
        throw UsageError("same_type_over: tuples of different length");
    int n = int(x.size());
    auto basis = D.basis();
    int nv = n + int(basis.size());
    LinearForm fx, fy;
    fx.constant = fy.constant = amb.zero();
    for (int i = 0; i < n; ++i) {
        fx.add_term(i, x[i], amb);
        fy.add_term(i, y[i], amb);
    }
    LinearForm b = span_variable(amb, basis, n);
    LinearForm dx = fx.minus(b, amb), dy = fy.minus(b, amb);
    LinearForm ndy = b.minus(fy, amb);
    const std::pair<Rel, int> queries[3][2] = {
        {{Rel::lt, 0}, {Rel::eq, 0}},
        {{Rel::lt, 0}, {Rel::lt, 1}},
        {{Rel::eq, 0}, {Rel::lt, 0}},
    };
    for (const auto& q : queries) {
        Problem p;
        p.nvars = nv;
        p.choices.push_back(lex_choice(amb, dx, q[0].first, nv));
        p.choices.push_back(lex_choice(amb, q[1].second ? ndy : dy, q[1].first, nv));
        if (solve(amb.field(), p).sat)
            return false;
    }
    return true;
}

SpaceDescriptor extensions(const Scene& scene, const Verdict& v)
{
    std::vector<PrimeFactorInfo> primes;
    for (const auto& p : v.condition2)
        primes.push_back(PrimeFactorInfo{p.l, "infinite", p.holds});
    for (const auto& p : v.invariance_extra)
        primes.push_back(PrimeFactorInfo{p.l, "finite", p.holds});
    return space_descriptor(scene.amb, scene.c_values(), scene.a_span(), scene.b_span(), v.forking, primes);
}

}
