#include "support.hpp"

#include <doctest.h>

using namespace oag;
using namespace support;

namespace {

Ambient three_slots()
{
    FieldSpec F = field_sqrt2();
    return Ambient(F, SceneKind::dense,
                   {Slot{"s0", {F.one(), F.theta()}}, Slot{"s1", {F.one(), F.theta()}}, Slot{"s2", {F.one(), F.theta()}}});
}

GroupElement at(const Ambient& amb, std::initializer_list<std::pair<int, QVec>> parts)
{
    GroupElement x = amb.zero();
    for (const auto& [s, q] : parts)
        for (size_t j = 0; j < q.size(); ++j)
            x.v[amb.offset(s) + j] = q[j];
    return x;
}

}

TEST_CASE("lexicographic comparison")
{
    Ambient amb = three_slots();
    GroupElement c1 = at(amb, {{2, {0, 1}}}), c2 = at(amb, {{0, {0, 1}}});
    CHECK(compare_elements(amb, c1, c2) < 0);
    CHECK(compare_elements(amb, c1, c1) == 0);
    CHECK(compare_elements(amb, at(amb, {{1, {5, 0}}}), at(amb, {{2, {1000000, 0}}})) > 0);
    CHECK(compare_elements(amb, at(amb, {{0, {-1, 1}}}), amb.zero()) > 0);
    CHECK_THROWS_AS(compare_elements(amb, c1, GroupElement{QVec(2)}), ConfigError);
}

TEST_CASE("archimedean classes")
{
    Ambient amb = three_slots();
    CHECK(arch_class(amb, at(amb, {{1, {3, 0}}, {2, {0, 1}}})).level == 2);
    CHECK(arch_class(amb, amb.zero()).is_zero());
    CHECK(arch_class(amb, at(amb, {{0, {0, 1}}})).level == 3);
}

TEST_CASE("span membership")
{
    FieldSpec F = field_sqrt2();
    Ambient amb(F, SceneKind::dense, {Slot{"s0", {F.one(), F.theta()}}, Slot{"s1", {F.one()}}});
    GroupElement e1 = at(amb, {{0, {1, 0}}}), r2 = at(amb, {{0, {0, 1}}});
    SpanHandle V(amb, {e1});
    CHECK(span_query(amb, V, e1).member);
    CHECK_FALSE(span_query(amb, V, r2).member);
    Rng r(3);
    auto g = random_tuple(amb, r, 2, 4);
    SpanHandle W(amb, g);
    GroupElement x = amb.combine(g, {Q(3, 7), Q(-5, 2)});
    CHECK(span_query(amb, W, x).member);
    CHECK(is_zero(span_query(amb, W, x).residue.v));
}

TEST_CASE("archimedean classes of spans")
{
    FieldSpec F = field_sqrt2();
    Ambient amb(F, SceneKind::dense, {Slot{"s0", {F.one(), F.theta()}}, Slot{"s1", {F.one(), F.theta()}}});
    auto one = arch_classes_of_span(amb, SpanHandle(amb, {at(amb, {{1, {2, 1}}})}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].first.level == 1);
    CHECK(one[0].second == 1);
    auto two = arch_classes_of_span(amb, SpanHandle(amb, {at(amb, {{0, {1, 0}}}), at(amb, {{0, {0, 1}}})}));
    REQUIRE(two.size() == 1);
    CHECK(two[0].second == 2);
    auto split = arch_classes_of_span(amb, SpanHandle(amb, {at(amb, {{0, {1, 0}}}), at(amb, {{1, {1, 0}}})}));
    CHECK(split.size() == 2);
}

TEST_CASE("order and valuation laws on random elements")
{
    Rng r(5);
    for (int iter = 0; iter < 200; ++iter) {
        Ambient amb = random_ambient(r, 3);
        GroupElement x = random_element(amb, r, 4), y = random_element(amb, r, 4), z = random_element(amb, r, 4);
        int c = compare_elements(amb, x, y);
        CHECK(compare_elements(amb, amb.add(x, z), amb.add(y, z)) == c);
        CHECK(compare_elements(amb, y, x) == -c);
        int dx = arch_class(amb, x).level, dy = arch_class(amb, y).level;
        CHECK(arch_class(amb, amb.sub(x, y)).level <= std::max(dx, dy));
        if (dx < dy)
            CHECK(arch_class(amb, amb.add(x, y)).level == dy);
        if (dx == dy && dx != 0) {
            GroupElement ax = sign_of(amb, x) < 0 ? amb.scale(x, -1) : x;
            GroupElement ay = sign_of(amb, y) < 0 ? amb.scale(y, -1) : y;
            int slot = amb.slot_of_level(dx);
            double ratio = amb.field().to_double(amb.slot_value(ax, slot)) /
                           amb.field().to_double(amb.slot_value(ay, slot));
            Q n = Q(long(ratio) + 1);
            CHECK(compare_elements(amb, ax, amb.scale(ay, n)) < 0);
        }
        SpanHandle V(amb, random_tuple(amb, r, r.uniform(0, 3), 3));
        CHECK(arch_classes_of_span(amb, V).size() <= V.dim());
    }
}

TEST_CASE("span handles are canonical")
{
    Rng r(8);
    for (int iter = 0; iter < 50; ++iter) {
        Ambient amb = random_ambient(r, 3);
        auto g = random_tuple(amb, r, 2, 4);
        std::vector<GroupElement> h = {amb.add(g[0], g[1]), amb.scale(g[1], Q(3))};
        CHECK(SpanHandle(amb, g) == SpanHandle(amb, h));
    }
}

TEST_CASE("discrete scenes need a unit slot")
{
    FieldSpec F = field_sqrt2();
    CHECK_THROWS_AS(Ambient(F, SceneKind::discrete, {Slot{"s0", {F.one()}}, Slot{"u", {F.theta()}}}), ConfigError);
    Ambient ok(F, SceneKind::discrete, {Slot{"s0", {F.one()}}, Slot{"u", {F.one()}}});
    CHECK(arch_class(ok, ok.unit()).level == 1);
    CHECK_THROWS_AS(Ambient(F, SceneKind::dense, {}), ConfigError);
}
