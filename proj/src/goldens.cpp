#include "oag/goldens.hpp"

namespace oag {

FieldSpec field_sqrt2() { return FieldSpec(Poly{Q(-2), Q(0), Q(1)}, Q(1), Q(2)); }

FieldSpec field_sqrt2_sqrt3() { return FieldSpec(Poly{Q(1), Q(0), Q(-10), Q(0), Q(1)}, Q(3), Q(4)); }

FieldElement sqrt2_in(const FieldSpec& F)
{
    if (F.degree() == 2)
        return F.theta();
    return F.make({Q(0), Q(-9, 2), Q(0), Q(1, 2)});
}

FieldElement sqrt3_in(const FieldSpec& F) { return F.make({Q(0), Q(11, 2), Q(0), Q(-1, 2)}); }

static GroupElement elem(const Ambient& amb, const std::vector<std::pair<std::string, QVec>>& parts)
{
    GroupElement x = amb.zero();
    for (const auto& [name, coords] : parts) {
        int s = amb.slot_index(name);
        for (size_t j = 0; j < coords.size(); ++j)
            x.v[amb.offset(s) + j] = coords[j];
    }
    return x;
}

Scene golden_orthogonality()
{
    FieldSpec F = field_sqrt2();
    Scene sc;
    sc.amb = Ambient(F, SceneKind::dense,
                     {Slot{"s0", {F.one(), F.theta()}}, Slot{"s1", {F.one()}}, Slot{"s2", {F.one(), F.theta()}},
                      Slot{"s3", {F.one(), F.theta()}}});
    const Ambient& a = sc.amb;
    sc.A = {{"e0", elem(a, {{"s0", {1, 0}}})}, {"e2", elem(a, {{"s2", {1, 0}}})}, {"e3", elem(a, {{"s3", {1, 0}}})}};
    sc.c = {{"c1", elem(a, {{"s3", {0, 1}}})}, {"c2", elem(a, {{"s0", {0, 1}}})}, {"c3", elem(a, {{"s1", {1}}})}};
    return sc;
}

Scene golden_extension_counts()
{
    FieldSpec F = field_sqrt2();
    Scene sc;
    sc.amb = Ambient(F, SceneKind::dense, {Slot{"one", {F.one(), F.theta()}}, Slot{"eps", {F.one(), F.theta()}}});
    const Ambient& a = sc.amb;
    sc.A = {{"unit", elem(a, {{"one", {1, 0}}})}};
    sc.B = {{"r2", elem(a, {{"one", {0, 1}}})}};
    sc.c = {{"c1", elem(a, {{"one", {0, 1}}, {"eps", {1, 0}}})}, {"c2", elem(a, {{"eps", {0, 1}}})}};
    return sc;
}

Scene golden_finite_satisfiability()
{
    FieldSpec F = FieldSpec::rationals();
    Scene sc;
    sc.amb = Ambient(F, SceneKind::dense, {Slot{"one", {F.one()}}, Slot{"eps", {F.one()}}, Slot{"low", {F.one()}}});
    const Ambient& a = sc.amb;
    sc.A = {{"unit", elem(a, {{"one", {1}}})}};
    sc.B = {{"e", elem(a, {{"eps", {1}}})}};
    sc.c = {{"c", elem(a, {{"low", {1}}})}};
    return sc;
}

Scene golden_nonforking_vs_seq()
{
    FieldSpec F = field_sqrt2_sqrt3();
    FieldElement r2 = sqrt2_in(F), r3 = sqrt3_in(F);
    Scene sc;
    sc.amb = Ambient(F, SceneKind::dense, {Slot{"one", {F.one(), r2, r3}}, Slot{"eps", {F.one(), r2}}});
    const Ambient& a = sc.amb;
    sc.A = {{"unit", elem(a, {{"one", {1, 0, 0}}})}};
    sc.B = {{"r2", elem(a, {{"one", {0, 1, 0}}})}, {"r3", elem(a, {{"one", {0, 0, 1}}})}};
    sc.c = {{"c1", elem(a, {{"one", {0, 1, 0}}, {"eps", {1, 0}}})},
            {"c2", elem(a, {{"one", {0, 0, 1}}, {"eps", {0, 1}}})}};
    return sc;
}

Scene golden_seqstar()
{
    FieldSpec F = field_sqrt2();
    Scene sc;
    sc.amb = Ambient(F, SceneKind::dense,
                     {Slot{"one", {F.one(), F.theta()}}, Slot{"c2", {F.one()}}, Slot{"eps", {F.one()}}});
    const Ambient& a = sc.amb;
    sc.A = {{"unit", elem(a, {{"one", {1, 0}}})}, {"c2", elem(a, {{"c2", {1}}})}};
    sc.B = {{"r2", elem(a, {{"one", {0, 1}}})}};
    sc.c = {{"c1", elem(a, {{"one", {0, 1}}, {"eps", {1}}})}};
    return sc;
}

std::vector<std::pair<std::string, Scene>> golden_scenes()
{
    return {{"orthogonality", golden_orthogonality()},
            {"extension_counts", golden_extension_counts()},
            {"finite_satisfiability", golden_finite_satisfiability()},
            {"nonforking_vs_seq", golden_nonforking_vs_seq()},
            {"seqstar", golden_seqstar()}};
}

}

namespace oag {

std::vector<GoldenCheck> orthogonality_checks()
{
    Scene sc = golden_orthogonality();
    const Ambient& amb = sc.amb;
    SpanHandle A = sc.a_span();
    auto c = sc.c_values();
    CutProfile p1 = cut_profile(amb, c[0], A), p2 = cut_profile(amb, c[1], A), p3 = cut_profile(amb, c[2], A);
    ConvexSubgroup Hprime = ConvexSubgroup::up_to(A.prev_level(p3.delta), Flavor::type_definable);
    int lowest = *A.levels().begin();
    std::vector<GoldenCheck> out;
    out.push_back({"G(c2/A) = G(c3/A)", p2.G.same_classes(p3.G)});
    out.push_back({"H(c2/A) = H(c3/A) = H'", p2.H.same_classes(p3.H) && p3.H.same_classes(Hprime)});
    out.push_back({"G(c1/A) is the infinitesimal descriptor",
                   p1.G.same_classes(ConvexSubgroup::below(lowest, Flavor::type_definable))});
    out.push_back({"H(c1/A) is trivial", p1.H.key == 0});
    out.push_back({"c3 ramified with ramifier 0", p3.ramified && is_zero(p3.ramifier.v)});
    out.push_back({"c1 and c2 Archimedean", !p1.ramified && !p1.member && !p2.ramified && !p2.member});
    out.push_back({"weakly orthogonal {c2},{c1}", weakly_orthogonal(amb, {c[1]}, {c[0]}, A)});
    out.push_back({"weakly orthogonal {c2},{c3}", weakly_orthogonal(amb, {c[1]}, {c[2]}, A)});
    return out;
}

std::vector<GoldenCheck> extension_count_checks()
{
    Scene sc = golden_extension_counts();
    const Ambient& amb = sc.amb;
    SpanHandle A = sc.a_span(), B = sc.b_span();
    auto c = sc.c_values();
    auto single = [&](int i) {
        BlockClassification cls = classify_block(amb, c, {i}, A, B);
        return cls.subs.size() == 1 ? cls.subs[0].invariant_extensions : -1;
    };
    BlockClassification pair = classify_block(amb, c, {0, 1}, A, B);
    std::vector<GoldenCheck> out;
    out.push_back({"c1 = sqrt2 + eps has 1 invariant extension", single(0) == 1});
    out.push_back({"c2 = eps sqrt2 has 2 invariant extensions", single(1) == 2});
    out.push_back({"pair block strong count = |J| + 1 = 1",
                   pair.strong_extensions == pair.size_j + 1 && pair.strong_extensions == 1});
    return out;
}

std::vector<GoldenCheck> independence_checks(unsigned seed)
{
    std::vector<GoldenCheck> out;
    Verdict v1 = decide_forking(golden_finite_satisfiability());
    out.push_back({"finite satisfiability scene independent", v1.forking && v1.invariant});
    Scene s2 = golden_nonforking_vs_seq();
    Verdict v2 = decide_forking(s2);
    out.push_back({"non-forking vs sequential scene independent", v2.forking});

    Scene s3 = golden_seqstar();
    Verdict v3 = decide_forking(s3);
    bool witness_ok = false;
    if (!v3.forking && v3.interval) {
        const Ambient& a = s3.amb;
        GroupElement r2 = s3.B[0].value, c2 = s3.A[1].value;
        witness_ok = v3.interval->b1 == r2 && v3.interval->b2 == a.add(r2, c2);
    }
    out.push_back({"c1 over span(A, c2) dependent with witness [sqrt2, sqrt2 + c2]", witness_ok});

    const Ambient& amb = s2.amb;
    GroupElement r2 = s2.B[0].value, r3 = s2.B[1].value;
    GroupElement c1 = s2.c[0].value, c2 = s2.c[1].value;
    int eps_level = amb.level_of_slot(amb.slot_index("eps"));
    unsigned state = seed * 2654435761u + 12345u;
    auto next = [&]() {
        state = state * 1103515245u + 12345u;
        return int((state >> 16) % 9) - 4;
    };
    bool all = true;
    for (int trial = 0; trial < 20; ++trial) {
        Q f1a = next(), f1b = next(), f2a = next(), f2b = next();
        if (sgn(f1a * f2b - f1b * f2a) == 0) {
            f1a = 1;
            f1b = 0;
            f2a = 0;
            f2b = 1;
        }
        GroupElement d1 = amb.combine({c1, c2}, {f1a, f1b});
        GroupElement d2 = amb.combine({c1, c2}, {f2a, f2b});
        GroupElement b = amb.add(amb.sub(d1, amb.combine({r2, r3}, {f1a, f1b})), amb.combine({r2, r3}, {f2a, f2b}));
        all = all && arch_class(amb, amb.sub(d2, b)).level == eps_level;
    }
    out.push_back({"Delta(d2 - b) = Delta(eps) for the constructed b", all});
    return out;
}

}
