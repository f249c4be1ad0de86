#include "oag/cut_analysis.hpp"

namespace oag {

std::string ConvexSubgroup::str(const Ambient& amb) const
{
    if (key <= 0)
        return "0";
    int level = (key + 1) / 2;
    if (level > amb.nslots())
        return "M";
    const std::string& name = amb.slots()[amb.slot_of_level(level)].name;
    return (key % 2 ? "<" : "<=") + name;
}

static std::vector<int> structural_stab(const SpanHandle& A, const ConvexSubgroup& G)
{
    std::vector<int> out;
    for (int l : A.levels())
        if (2 * l <= G.key)
            out.push_back(l);
    return out;
}

static GroupElement level_representative(const Ambient& amb, const SpanHandle& A, int level)
{
    const auto& rows = A.echelon().rows;
    for (size_t i = 0; i < rows.size(); ++i)
        if (A.row_levels()[i] == level) {
            GroupElement g{rows[i]};
            return sign_of(amb, g) < 0 ? amb.scale(g, Q(-1)) : g;
        }
    return amb.zero();
}

// Subtract the best span-A match of the leading class while that class lies in the span's chain.
static int descend(const Ambient& amb, const GroupElement& d, const SpanHandle& A, int& steps)
{
    GroupElement r = d;
    steps = 0;
    while (true) {
        int level = arch_class(amb, r).level;
        if (level == 0 || !A.has_level(level))
            return level;
        int slot = amb.slot_of_level(level);
        QMat parts;
        std::vector<GroupElement> rows;
        for (size_t i = 0; i < A.echelon().rows.size(); ++i)
            if (A.row_levels()[i] == level) {
                rows.push_back(GroupElement{A.echelon().rows[i]});
                parts.push_back(amb.slot_coords(rows.back(), slot));
            }
        QVec coeffs;
        if (!solve_combination(parts, amb.slot_coords(r, slot), coeffs))
            return level;
        r = amb.sub(r, amb.combine(rows, coeffs));
        ++steps;
    }
}

static bool probe_in_stab(const Ambient& amb, const GroupElement& d, const SpanHandle& A, int level)
{
    GroupElement step = level_representative(amb, A, level);
    auto basis = A.basis();
    int nv = int(basis.size());
    LinearForm a = span_variable(amb, basis, 0);
    LinearForm lo = LinearForm::of(d).minus(a, amb);
    LinearForm hi = a.minus(LinearForm::of(amb.add(d, step)), amb);
    return !feasible(amb, {Atom{lo, Rel::lt}, Atom{hi, Rel::lt}}, nv).sat;
}

CutProfile cut_profile(const Ambient& amb, const GroupElement& d, const SpanHandle& A, ProfileMode mode)
{
    CutProfile p;
    Reduction r = reduce(amb, A, d);
    p.mu = r.mu;
    if (r.mu == 0) {
        p.member = true;
        p.ramifier = d;
        p.G = ConvexSubgroup::up_to(0, Flavor::type_definable);
        p.H = ConvexSubgroup::up_to(0, Flavor::vee_definable);
        return p;
    }
    p.descent_mu = descend(amb, d, A, p.descent_steps);
    int prev = A.prev_level(r.mu);
    if (A.has_level(r.mu)) {
        p.G = ConvexSubgroup::below(r.mu, Flavor::type_definable);
    } else {
        p.ramified = true;
        p.ramifier = r.part;
        p.delta = r.mu;
        p.side = sign_of(amb, r.residue);
        int next = A.next_level(r.mu);
        p.G = ConvexSubgroup::below(next < 0 ? amb.nslots() + 1 : next, Flavor::type_definable);
    }
    p.H = ConvexSubgroup::up_to(prev, Flavor::vee_definable);
    p.stab_levels = structural_stab(A, p.G);
    if (mode == ProfileMode::probe) {
        std::vector<int> probed;
        for (int l : A.levels())
            if (probe_in_stab(amb, d, A, l))
                probed.push_back(l);
        p.stab_probe_agrees = probed == p.stab_levels;
        p.stab_levels = probed;
    }
    return p;
}

CutDescriptor cut_descriptor(const Ambient& amb, const GroupElement& d, const SpanHandle& A)
{
    CutProfile p = cut_profile(amb, d, A);
    CutDescriptor c;
    c.G = p.G;
    c.H = p.H;
    if (p.member) {
        c.kind = CutKind::member_of_span;
        c.point = d;
    } else if (p.ramified) {
        c.kind = CutKind::ram_component;
        c.point = p.ramifier;
        c.side = p.side;
    } else {
        c.kind = CutKind::arch_coset;
        c.point = d;
    }
    return c;
}

std::vector<Choice> cut_shape(const Ambient& amb, const GroupElement& d, const CutProfile& p,
                              const SpanHandle& A, const LinearForm& x, int nvars)
{
    std::vector<Choice> out;
    if (p.member) {
        Choice ch = lex_choice(amb, x.minus(LinearForm::of(d), amb), Rel::eq, nvars);
        out.push_back(ch);
        return out;
    }
    if (!p.ramified) {
        Choice ch;
        Conj cj;
        cj.tag = "coset";
        bool ok = true;
        LinearForm diff = x.minus(LinearForm::of(d), amb);
        for (int s = 0; s <= amb.slot_of_level(p.mu) && ok; ++s) {
            auto eqs = slot_zero(amb, diff, s, nvars, ok);
            cj.eqs.insert(cj.eqs.end(), eqs.begin(), eqs.end());
        }
        if (ok)
            ch.alts.push_back(cj);
        out.push_back(ch);
        return out;
    }
    int prev = A.prev_level(p.delta);
    int next = A.next_level(p.delta);
    int top = next < 0 ? amb.nslots() + 1 : next;
    LinearForm diff = x.minus(LinearForm::of(p.ramifier), amb);
    Choice ch;
    for (int u = prev + 1; u < top; ++u) {
        bool ok = true;
        Conj cj = lead_conj(amb, diff, u, p.side, nvars, ok);
        if (!ok)
            continue;
        cj.tag = "lead " + amb.slots()[amb.slot_of_level(u)].name;
        ch.alts.push_back(cj);
    }
    out.push_back(ch);
    return out;
}

static std::optional<GroupElement> shape_witness(const Ambient& amb, const GroupElement& d, const CutProfile& p,
                                                 const SpanHandle& A, const SpanHandle& B, bool below)
{
    auto basis = B.basis();
    int nv = int(basis.size());
    LinearForm b = span_variable(amb, basis, 0);
    Problem prob;
    prob.nvars = nv;
    prob.choices = cut_shape(amb, d, p, A, b, nv);
    LinearForm cmp = below ? b.minus(LinearForm::of(d), amb) : LinearForm::of(d).minus(b, amb);
    prob.choices.push_back(lex_choice(amb, cmp, Rel::le, nv));
    FeasResult r = solve(amb.field(), prob);
    if (!r.sat)
        return std::nullopt;
    return b.eval(r.witness, amb);
}

LeanResult leaning(const Ambient& amb, const GroupElement& d, const SpanHandle& A, const SpanHandle& B)
{
    if (!B.contains_span(A))
        throw UsageError("leaning: A is not contained in B");
    CutProfile p = cut_profile(amb, d, A);
    if (p.member)
        throw UsageError("leaning: element lies in the span of A");
    LeanResult r;
    r.below = shape_witness(amb, d, p, A, B, true);
    r.above = shape_witness(amb, d, p, A, B, false);
    if (r.below && r.above)
        r.lean = Lean::trapped;
    else if (r.below)
        r.lean = Lean::right;
    else if (r.above)
        r.lean = Lean::left;
    else
        r.lean = Lean::both;
    return r;
}

UnaryIndependence unary_cut_independent(const Ambient& amb, const GroupElement& d, const SpanHandle& A,
                                        const SpanHandle& B)
{
    UnaryIndependence u;
    if (span_query(amb, A, d).member)
        return u;
    LeanResult l = leaning(amb, d, A, B);
    if (l.lean == Lean::trapped) {
        u.independent = false;
        u.b1 = *l.below;
        u.b2 = *l.above;
    }
    return u;
}

std::string lean_name(Lean l)
{
    switch (l) {
    case Lean::left: return "left";
    case Lean::right: return "right";
    case Lean::both: return "both";
    default: return "trapped";
    }
}

}
