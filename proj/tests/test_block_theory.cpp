#include "support.hpp"

#include <doctest.h>

using namespace oag;
using namespace support;

namespace {

struct P5Scene {
    Ambient amb;
    GroupElement one, r2, d1, d2;
};

P5Scene p5_scene()
{
    FieldSpec F = field_sqrt2();
    P5Scene s;
    s.amb = Ambient(F, SceneKind::dense,
                    {Slot{"one", {F.one(), F.theta()}}, Slot{"eps", {F.one(), F.theta()}}, Slot{"low", {F.one()}}});
    s.one = parse_element(s.amb, "one:1,0");
    s.r2 = parse_element(s.amb, "one:0,1");
    s.d1 = parse_element(s.amb, "one:0,1 eps:1,0");
    s.d2 = parse_element(s.amb, "eps:1,0 low:1");
    return s;
}

bool all_ok(const std::vector<PropertyCheck>& checks)
{
    for (const auto& c : checks)
        if (!c.ok)
            return false;
    return true;
}

}

TEST_CASE("val2 order of the orthogonality example")
{
    Scene s = golden_orthogonality();
    auto c = s.c_values();
    SpanHandle A = s.a_span();
    BlockDecomposition d = val_blocks(s.amb, c, A, 2);
    CHECK(d.blocks.size() == 3);
    BlockKey k1 = val_key(cut_profile(s.amb, c[0], A), 2), k2 = val_key(cut_profile(s.amb, c[1], A), 2),
             k3 = val_key(cut_profile(s.amb, c[2], A), 2);
    CHECK(k1 < k3);
    CHECK(k3 < k2);
    CHECK(val_blocks(s.amb, {c[0]}, A, 2).blocks.size() == 1);
}

TEST_CASE("eps and eps sqrt2 form one ramified val3 block")
{
    Scene s = golden_nonforking_vs_seq();
    const Ambient& amb = s.amb;
    SpanHandle B = s.b_span();
    GroupElement e1 = parse_element(amb, "eps:1,0"), e2 = parse_element(amb, "eps:0,1");
    BlockDecomposition d = val_blocks(amb, {e1, e2}, B, 3);
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0].members.size() == 2);
    CHECK(d.blocks[0].key.delta == amb.level_of_slot(amb.slot_index("eps")));
    auto rays = pplus_rays(amb, {e1, e2}, B);
    CHECK(rays.size() == 2);
    CHECK(rays_free(rays));
    CHECK(is_separated(amb, {e1, e2}, B).separated);
    CHECK(pplus_rays(amb, {e1}, B).size() == 1);
    CHECK(rays_free(pplus_rays(amb, {e1}, B)));
    CHECK_THROWS_AS(pplus_rays(amb, {s.c[0].value}, s.a_span()), UsageError);
}

TEST_CASE("lower order perturbation gives equal rays")
{
    P5Scene s = p5_scene();
    SpanHandle B(s.amb, {s.one, s.r2});
    GroupElement x = parse_element(s.amb, "eps:1,0"), xh = parse_element(s.amb, "eps:1,0 low:5");
    auto rays = pplus_rays(s.amb, {x, xh}, B);
    REQUIRE(rays.size() == 2);
    CHECK(rays[0] == rays[1]);
    CHECK_FALSE(rays_free(rays));
}

TEST_CASE("proportional pair is not separated")
{
    Scene s = golden_orthogonality();
    GroupElement x = s.c[1].value;
    SeparationResult r = is_separated(s.amb, {x, s.amb.scale(x, 2)}, s.a_span());
    CHECK_FALSE(r.separated);
    REQUIRE(r.combination.size() == 2);
    CHECK(r.combination[0] == -2 * r.combination[1]);
}

TEST_CASE("normalize keeps a normal singleton and the sequential pair")
{
    Scene s = golden_orthogonality();
    NormalizeResult r = normalize(s.amb, {s.c[1].value}, s.a_span(), s.a_span());
    REQUIRE(r.basis.terms.size() == 1);
    CHECK(r.basis.terms[0].value == s.c[1].value);
    CHECK(r.basis.terms[0].lambda == QVec{Q(1)});

    Scene n = golden_nonforking_vs_seq();
    auto c = n.c_values();
    NormalizeResult rn = normalize(n.amb, c, n.a_span(), n.b_span());
    REQUIRE(rn.basis.terms.size() == 2);
    CHECK(rn.basis.terms[0].value == c[0]);
    CHECK(rn.basis.terms[1].value == c[1]);
    CHECK(all_ok(check_normal_form(n.amb, rn.basis, n.a_span(), n.b_span())));
}

TEST_CASE("normalize repairs a P5 collision and g decreases")
{
    P5Scene s = p5_scene();
    SpanHandle A(s.amb, {s.one}), B(s.amb, {s.one, s.r2});
    CHECK_FALSE(all_ok(check_normal_form(s.amb, enumerate_basis(s.amb, {s.d1, s.d2}, A, B), A, B)));
    NormalizeResult r = normalize(s.amb, {s.d1, s.d2}, A, B);
    CHECK(all_ok(check_normal_form(s.amb, r.basis, A, B)));
    CHECK(r.basis.terms[0].value != s.d1);
    REQUIRE(r.g_trace.size() >= 2);
    for (size_t i = 1; i < r.g_trace.size(); ++i)
        CHECK(measure_less(r.g_trace[i].measure, r.g_trace[i - 1].measure));
}

TEST_CASE("planted d' plus d~ collision fails P2 or P5 before normalization")
{
    P5Scene s = p5_scene();
    SpanHandle A(s.amb, {s.one}), B(s.amb, {s.one, s.r2});
    auto checks = check_normal_form(s.amb, enumerate_basis(s.amb, {s.d1, s.d2}, A, B), A, B);
    bool some = false;
    for (const auto& c : checks)
        if (!c.ok)
            some = true;
    CHECK(some);
}

TEST_CASE("empty basis is vacuously normal")
{
    Scene s = golden_orthogonality();
    CHECK(all_ok(check_normal_form(s.amb, NormalFormBasis{}, s.a_span(), s.a_span())));
}

TEST_CASE("normalize refuses tuples that are not free over A")
{
    Scene s = golden_orthogonality();
    CHECK_THROWS_AS(normalize(s.amb, {s.A[0].value}, s.a_span(), s.a_span()), UsageError);
}

TEST_CASE("key refinement, transform replay and normal forms on random scenes")
{
    Rng r(91);
    int independent = 0;
    for (int iter = 0; iter < 300; ++iter) {
        RandomScene rs = iter % 2 ? shared_lead_scene(r) : random_scene(r, 4, 3);
        const Ambient& amb = rs.amb;
        SpanHandle A(amb, rs.A), B(amb, rs.B);
        auto c = free_over(amb, A, rs.c);
        if (c.empty())
            continue;
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < c.size(); ++j) {
                CutProfile pi = cut_profile(amb, c[i], B), pj = cut_profile(amb, c[j], B);
                if (pi.member || pj.member)
                    continue;
                if (val_key(pi, 3) == val_key(pj, 3))
                    CHECK(val_key(pi, 2) == val_key(pj, 2));
                if (val_key(pi, 2) == val_key(pj, 2))
                    CHECK(val_key(pi, 1) == val_key(pj, 1));
            }
        NormalizeResult res = normalize(amb, c, A, B);
        QMat lam;
        for (const auto& t : res.basis.terms) {
            CHECK(amb.add(amb.combine(c, t.lambda), t.translation) == t.value);
            lam.push_back(t.lambda);
        }
        CHECK(rank_of(lam, c.size()) == int(c.size()));
        for (const auto* trace : {&res.rho_trace, &res.g_trace})
            for (size_t i = 1; i < trace->size(); ++i)
                CHECK(measure_less((*trace)[i].measure, (*trace)[i - 1].measure));
        if (decide_cut_independence(amb, A, B, c).independent) {
            ++independent;
            CHECK(all_ok(check_normal_form(amb, res.basis, A, B)));
            std::vector<GroupElement> vals;
            for (const auto& t : res.basis.terms)
                vals.push_back(t.value);
            CHECK(is_separated(amb, vals, A).separated);
        }
    }
    CHECK(independent >= 100);
}
