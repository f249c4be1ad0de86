#include "oag/extension_space.hpp"

#include <algorithm>
#include <map>

namespace oag {

std::string segment_name(Segment s)
{
    switch (s) {
    case Segment::I: return "I";
    case Segment::O: return "O";
    default: return "J";
    }
}

BlockClassification classify_block(const Ambient& amb, const std::vector<GroupElement>& c,
                                   const std::vector<int>& block, const SpanHandle& A, const SpanHandle& B)
{
    if (block.empty())
        throw UsageError("classify_block: empty block");
    BlockClassification cls;
    std::map<int, SubBlock> subs;
    bool first = true;
    for (int i : block) {
        CutProfile pb = cut_profile(amb, c[i], B);
        if (!pb.ramified)
            throw UsageError("classify_block: member is not ramified over B");
        BlockKey k = val_key(pb, 2);
        if (first)
            cls.key = k;
        else if (!(k == cls.key))
            throw UsageError("classify_block: members do not share one val2 value over B");
        first = false;
        SubBlock& s = subs[pb.delta];
        s.delta = pb.delta;
        s.members.push_back(i);
        CutProfile pa = cut_profile(amb, c[i], A);
        if (!pa.ramified && !pa.member)
            s.arch_over_a = true;
    }
    std::vector<GroupElement> xs;
    for (int i : block)
        xs.push_back(c[i]);
    if (!is_separated(amb, xs, B, 3).separated)
        throw UsageError("classify_block: block is not val3-separated over B");
    int delta0 = subs.begin()->first;
    int prev = B.prev_level(delta0);
    int next = B.next_level(delta0);
    cls.h_definable = prev == 0 || A.has_level(prev);
    cls.g_definable = next < 0 || A.has_level(next);
    for (auto& [d, s] : subs)
        cls.subs.push_back(s);
    size_t n = cls.subs.size();
    size_t o_start = n;
    if (!cls.h_definable) {
        o_start = 0;
        for (auto& s : cls.subs)
            s.segment = Segment::O;
    } else if (!cls.g_definable) {
        for (auto& s : cls.subs)
            s.segment = Segment::I;
    } else {
        for (size_t i = 0; i < n; ++i)
            if (cls.subs[i].arch_over_a) {
                o_start = i;
                break;
            }
        for (size_t i = 0; i < n; ++i)
            cls.subs[i].segment = i >= o_start ? Segment::O : Segment::J;
    }
    for (auto& s : cls.subs) {
        s.invariant_extensions = (s.arch_over_a || !cls.h_definable || !cls.g_definable) ? 1 : 2;
        if (s.segment == Segment::I)
            ++cls.size_i;
        else if (s.segment == Segment::O)
            ++cls.size_o;
        else
            ++cls.size_j;
    }
    cls.strong_extensions = cls.size_j + 1;
    return cls;
}

GluingPlan gluing_plan(const BlockClassification& cls, int inner_prefix)
{
    GluingPlan plan;
    std::vector<GluingEntry> inner, outer;
    int j_seen = 0;
    for (size_t i = 0; i < cls.subs.size(); ++i) {
        const auto& s = cls.subs[i];
        bool in = s.segment == Segment::I || (s.segment == Segment::J && j_seen++ < inner_prefix);
        (in ? inner : outer).push_back(GluingEntry{int(i), s.delta, in});
    }
    int last_inner = inner.empty() ? -1 : inner.back().sub;
    int first_outer = outer.empty() ? int(cls.subs.size()) : outer.front().sub;
    plan.valid = last_inner < first_outer;
    plan.order = inner;
    for (auto it = outer.rbegin(); it != outer.rend(); ++it)
        plan.order.push_back(*it);
    return plan;
}

static BlockKey common_key(const Ambient& amb, const std::vector<GroupElement>& block, const SpanHandle& D)
{
    if (block.empty())
        throw UsageError("weakly_orthogonal: empty block");
    BlockKey k = val_key(cut_profile(amb, block[0], D), 2);
    for (const auto& x : block)
        if (!(val_key(cut_profile(amb, x, D), 2) == k))
            throw UsageError("weakly_orthogonal: block members carry different val2 values");
    return k;
}

bool weakly_orthogonal(const Ambient& amb, const std::vector<GroupElement>& block_i,
                       const std::vector<GroupElement>& block_j, const SpanHandle& D)
{
    return !(common_key(amb, block_i, D) == common_key(amb, block_j, D));
}

SpaceDescriptor space_descriptor(const Ambient& amb, const std::vector<GroupElement>& c, const SpanHandle& A,
                                 const SpanHandle& B, bool cut_independent,
                                 const std::vector<PrimeFactorInfo>& primes)
{
    SpaceDescriptor sd;
    if (!cut_independent) {
        sd.empty = true;
        return sd;
    }
    std::vector<GroupElement> free;
    {
        SpanHandle acc = A;
        for (const auto& x : c)
            if (!span_query(amb, acc, x).member) {
                free.push_back(x);
                acc = acc.join(amb, {x});
            }
    }
    NormalizeResult nr = normalize(amb, free, A, B);
    std::vector<GroupElement> d;
    for (const auto& t : nr.basis.terms)
        d.push_back(t.value);
    BlockDecomposition v1 = val_blocks(amb, d, B, 1);
    for (const auto& blk : v1.blocks) {
        std::vector<int> arch, ram;
        for (int i : blk.members) {
            CutProfile p = cut_profile(amb, d[i], B);
            (p.ramified ? ram : arch).push_back(i);
        }
        Factor f;
        f.kind = "val1";
        f.label = ConvexSubgroup{blk.key.g, Flavor::type_definable}.str(amb);
        int na = int(arch.size());
        if (ram.empty()) {
            f.coproduct.push_back(Summand{na, "arch"});
        } else {
            BlockClassification cls = classify_block(amb, d, ram, A, B);
            for (int k = 0; k <= cls.size_j; ++k) {
                GluingPlan plan = gluing_plan(cls, k);
                int outer = 0;
                for (const auto& e : plan.order)
                    if (!e.inner)
                        outer += int(cls.subs[e.sub].members.size());
                Summand s;
                s.parameters = na > 0 ? na + outer : 0;
                s.label = "inner_prefix=" + std::to_string(k);
                f.coproduct.push_back(s);
            }
            sd.classifications.push_back(cls);
        }
        sd.factors.push_back(f);
    }
    for (const auto& p : primes) {
        Factor f;
        f.kind = "prime";
        f.label = std::to_string(p.prime) + ":" + p.kind;
        if (p.kind == "finite" && !p.invariant)
            f.coproduct.push_back(Summand{int(free.size()), "Z_" + std::to_string(p.prime) + "-subspace"});
        else
            f.coproduct.push_back(Summand{0, "point"});
        sd.factors.push_back(f);
    }
    return sd;
}

}
