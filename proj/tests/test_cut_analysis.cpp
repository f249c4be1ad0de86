#include "support.hpp"

#include <doctest.h>

using namespace oag;
using namespace support;

TEST_CASE("orthogonality example profiles")
{
    for (const auto& c : orthogonality_checks()) {
        INFO(c.name);
        CHECK(c.ok);
    }
}

TEST_CASE("members have the trivial profile")
{
    Scene s = golden_orthogonality();
    SpanHandle A = s.a_span();
    CutProfile p = cut_profile(s.amb, s.A[1].value, A);
    CHECK(p.member);
    CHECK(p.G.key == 0);
    CHECK(cut_descriptor(s.amb, s.A[1].value, A).kind == CutKind::member_of_span);
}

TEST_CASE("cut descriptors of the orthogonality example")
{
    Scene s = golden_orthogonality();
    SpanHandle A = s.a_span();
    auto c = s.c_values();
    CutDescriptor d2 = cut_descriptor(s.amb, c[1], A);
    CHECK(d2.kind == CutKind::arch_coset);
    CHECK(d2.point == c[1]);
    CutDescriptor d3 = cut_descriptor(s.amb, c[2], A);
    CHECK(d3.kind == CutKind::ram_component);
    CHECK(is_zero(d3.point.v));
    CHECK(d3.side == 1);
}

TEST_CASE("leaning")
{
    Scene fs = golden_finite_satisfiability();
    LeanResult l = leaning(fs.amb, fs.c[0].value, fs.a_span(), fs.b_span());
    CHECK(l.lean == Lean::left);
    CHECK(l.above.has_value());
    CHECK(leaning(fs.amb, fs.c[0].value, fs.a_span(), fs.a_span()).lean == Lean::both);

    Scene ns = golden_nonforking_vs_seq();
    CHECK(leaning(ns.amb, ns.c[0].value, ns.a_span(), ns.b_span()).lean != Lean::trapped);
    CHECK_THROWS_AS(leaning(ns.amb, ns.A[0].value, ns.a_span(), ns.b_span()), UsageError);
    CHECK_THROWS_AS(leaning(ns.amb, ns.c[0].value, ns.b_span(), ns.a_span()), UsageError);
}

TEST_CASE("unary cut independence")
{
    Scene fs = golden_finite_satisfiability();
    CHECK(unary_cut_independent(fs.amb, fs.A[0].value, fs.a_span(), fs.b_span()).independent);
    CHECK(unary_cut_independent(fs.amb, fs.c[0].value, fs.a_span(), fs.b_span()).independent);

    Scene s = golden_seqstar();
    const Ambient& amb = s.amb;
    SpanHandle A = s.a_span();
    SpanHandle B = A.join(amb, s.b_values());
    GroupElement d = s.c[0].value;
    UnaryIndependence u = unary_cut_independent(amb, d, A, B);
    REQUIRE_FALSE(u.independent);
    CHECK(compare_elements(amb, u.b1, d) <= 0);
    CHECK(compare_elements(amb, d, u.b2) <= 0);
    CHECK(span_query(amb, B, u.b1).member);
    CHECK(span_query(amb, B, u.b2).member);
    auto cond = interval_meets_span(amb, LinearForm::of(u.b1), LinearForm::of(u.b2), A, 0);
    bool meets = false;
    for (const auto& sys : cond)
        meets = meets || holds(amb.field(), sys, {});
    CHECK_FALSE(meets);
}

TEST_CASE("profile laws on random data")
{
    Rng r(71);
    for (int iter = 0; iter < 200; ++iter) {
        RandomScene rs = random_scene(r, 4, 2);
        const Ambient& amb = rs.amb;
        SpanHandle A(amb, rs.A), B(amb, rs.B);
        GroupElement x = random_element(amb, r, 4), y = random_element(amb, r, 4);
        CutProfile px = cut_profile(amb, x, A), py = cut_profile(amb, y, A);
        CHECK(px.H.key <= px.G.key);
        CHECK(py.H.key <= py.G.key);
        if (!px.member && !py.member && px.G.key < py.G.key)
            CHECK(px.G.key < py.H.key);

        CutProfile probe = cut_profile(amb, x, A, ProfileMode::probe);
        CHECK(probe.G.key == px.G.key);
        CHECK(probe.H.key == px.H.key);

        if (px.ramified) {
            CHECK_FALSE(A.has_level(px.delta));
            CHECK(px.G.contains_level(px.delta));
            CHECK_FALSE(px.H.contains_level(px.delta));
            CHECK(arch_class(amb, amb.sub(x, px.ramifier)).level == px.delta);
            for (const auto& a : A.basis()) {
                int lvl = arch_class(amb, a).level;
                if (!px.G.contains_level(lvl))
                    continue;
                GroupElement other = amb.add(px.ramifier, amb.scale(a, Q(r.uniform(-3, 3))));
                if (compare_elements(amb, x, px.ramifier) * compare_elements(amb, x, other) > 0)
                    CHECK(arch_class(amb, amb.sub(x, other)).level >= px.delta);
            }
        }

        if (!span_query(amb, B, x).member && unary_cut_independent(amb, x, A, B).independent) {
            CutProfile pb = cut_profile(amb, x, B);
            CHECK(pb.H.key >= px.H.key);
            CHECK(pb.G.key <= px.G.key);
        }

        if (!rs.A.empty()) {
            GroupElement a = amb.scale(rs.A[0], Q(r.uniform(-3, 3)));
            CutDescriptor d0 = cut_descriptor(amb, x, A), d1 = cut_descriptor(amb, amb.add(x, a), A);
            CHECK(d0.kind == d1.kind);
            CHECK(d0.G.key == d1.G.key);
            CHECK(d0.H.key == d1.H.key);
            CHECK(d0.side == d1.side);
            if (d0.kind != CutKind::arch_coset)
                CHECK(d1.point == amb.add(d0.point, a));
        }
    }
}
