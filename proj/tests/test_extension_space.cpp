#include "support.hpp"

#include <doctest.h>

using namespace oag;
using namespace support;

TEST_CASE("invariant extension counts")
{
    for (const auto& c : extension_count_checks()) {
        INFO(c.name);
        CHECK(c.ok);
    }
}

TEST_CASE("block whose G grows over B has a single extension")
{
    Scene s = golden_finite_satisfiability();
    BlockClassification cls = classify_block(s.amb, s.c_values(), {0}, s.a_span(), s.b_span());
    CHECK_FALSE(cls.g_definable);
    CHECK(cls.size_i == 1);
    CHECK(cls.size_o == 0);
    CHECK(cls.size_j == 0);
    CHECK(cls.strong_extensions == 1);
}

TEST_CASE("gluing orders")
{
    BlockClassification all_outer;
    all_outer.subs = {{1, {0}, false, 1, Segment::O}, {2, {2}, false, 1, Segment::O}, {3, {1}, false, 1, Segment::O}};
    GluingPlan p = gluing_plan(all_outer);
    REQUIRE(p.order.size() == 3);
    CHECK(p.valid);
    CHECK(p.order[0].delta == 3);
    CHECK(p.order[2].delta == 1);

    BlockClassification all_inner = all_outer;
    for (auto& s : all_inner.subs)
        s.segment = Segment::I;
    GluingPlan q = gluing_plan(all_inner);
    CHECK(q.order[0].delta == 1);
    CHECK(q.order[2].delta == 3);
    for (const auto& e : q.order)
        CHECK(e.inner);

    BlockClassification single;
    single.subs = {{2, {0}, false, 2, Segment::J}};
    CHECK(gluing_plan(single).order.size() == 1);
}

TEST_CASE("weak orthogonality")
{
    Scene s = golden_orthogonality();
    auto c = s.c_values();
    SpanHandle A = s.a_span();
    CHECK(weakly_orthogonal(s.amb, {c[1]}, {c[0]}, A));
    CHECK_FALSE(weakly_orthogonal(s.amb, {c[1]}, {c[1]}, A));
    Scene n = golden_nonforking_vs_seq();
    GroupElement e1 = parse_element(n.amb, "eps:1,0"), e2 = parse_element(n.amb, "eps:0,1");
    CHECK_FALSE(weakly_orthogonal(n.amb, {e1}, {e2}, n.b_span()));
}

TEST_CASE("space descriptors")
{
    Scene s = golden_extension_counts();
    auto c = s.c_values();
    SpaceDescriptor dep = space_descriptor(s.amb, c, s.a_span(), s.b_span(), false, {});
    CHECK(dep.empty);

    SpaceDescriptor two = space_descriptor(s.amb, {c[1]}, s.a_span(), s.b_span(), true, {});
    CHECK_FALSE(two.empty);
    REQUIRE(two.factors.size() == 1);
    CHECK(two.factors[0].coproduct.size() == 2);
    for (const auto& sm : two.factors[0].coproduct)
        CHECK(sm.parameters == 0);

    Scene o = golden_orthogonality();
    SpaceDescriptor arch = space_descriptor(o.amb, {o.c[1].value}, o.a_span(), o.a_span(), true, {});
    REQUIRE(arch.factors.size() == 1);
    REQUIRE(arch.factors[0].coproduct.size() == 1);
    CHECK(arch.factors[0].coproduct[0].parameters == 1);
}

TEST_CASE("classification laws on random independent blocks")
{
    Rng r(121);
    int classified = 0;
    for (int iter = 0; iter < 400 && classified < 80; ++iter) {
        RandomScene rs = iter % 2 ? shared_lead_scene(r) : random_scene(r, 4, 3);
        const Ambient& amb = rs.amb;
        SpanHandle A(amb, rs.A), B(amb, rs.B);
        auto c = free_over(amb, A, rs.c);
        if (c.empty() || !decide_cut_independence(amb, A, B, c).independent)
            continue;
        NormalizeResult nr = normalize(amb, c, A, B);
        std::vector<GroupElement> vals;
        for (const auto& t : nr.basis.terms)
            vals.push_back(t.value);
        SpaceDescriptor sd = space_descriptor(amb, c, A, B, true, {});
        CHECK(sd.factors.size() == val_blocks(amb, vals, B, 1).blocks.size());
        BlockDecomposition d2 = val_blocks(amb, vals, B, 2);
        for (const auto& blk : d2.blocks) {
            bool ram = true;
            for (int i : blk.members)
                ram = ram && cut_profile(amb, vals[i], B).ramified;
            if (!ram)
                continue;
            BlockClassification cls = classify_block(amb, vals, blk.members, A, B);
            ++classified;
            CHECK(cls.strong_extensions == cls.size_j + 1);
            CHECK(cls.size_i + cls.size_o + cls.size_j == int(cls.subs.size()));
            for (int k = 0; k <= cls.size_j; ++k) {
                GluingPlan plan = gluing_plan(cls, k);
                CHECK(plan.valid);
                bool seen_outer = false;
                for (const auto& e : plan.order) {
                    if (!e.inner)
                        seen_outer = true;
                    else
                        CHECK_FALSE(seen_outer);
                }
            }
            std::vector<GroupElement> moved;
            for (int i : blk.members) {
                GroupElement x = amb.scale(vals[i], Q(r.uniform(1, 3)));
                for (const auto& a : rs.A)
                    x = amb.add(x, amb.scale(a, Q(r.uniform(-2, 2))));
                moved.push_back(x);
            }
            std::vector<int> idx;
            for (size_t i = 0; i < moved.size(); ++i)
                idx.push_back(int(i));
            BlockClassification again = classify_block(amb, moved, idx, A, B);
            CHECK(again.size_i == cls.size_i);
            CHECK(again.size_o == cls.size_o);
            CHECK(again.size_j == cls.size_j);
            CHECK(again.strong_extensions == cls.strong_extensions);
        }
    }
    CHECK(classified >= 20);
}
