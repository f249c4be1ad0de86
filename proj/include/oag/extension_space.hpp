#pragma once

#include "oag/block_theory.hpp"

namespace oag {

enum class Segment { I, O, J };

struct SubBlock {
    int delta = 0;
    std::vector<int> members;
    bool arch_over_a = false;
    int invariant_extensions = 1;
    Segment segment = Segment::J;
};

struct BlockClassification {
    BlockKey key;
    bool h_definable = true;
    bool g_definable = true;
    std::vector<SubBlock> subs;
    int strong_extensions = 1;
    int size_i = 0, size_o = 0, size_j = 0;
};

// block holds indices into c.
BlockClassification classify_block(const Ambient& amb, const std::vector<GroupElement>& c,
                                   const std::vector<int>& block, const SpanHandle& A, const SpanHandle& B);

struct GluingEntry {
    int sub = 0;
    int delta = 0;
    bool inner = false;
};

struct GluingPlan {
    std::vector<GluingEntry> order;
    bool valid = true;
};

// inner_prefix: how many sub-blocks of J take their inner extension.
GluingPlan gluing_plan(const BlockClassification& cls, int inner_prefix = 0);

bool weakly_orthogonal(const Ambient& amb, const std::vector<GroupElement>& block_i,
                       const std::vector<GroupElement>& block_j, const SpanHandle& D);

struct Summand {
    int parameters = 0;
    std::string label;
};

struct Factor {
    std::string kind;
    std::string label;
    std::vector<Summand> coproduct;
};

struct SpaceDescriptor {
    bool empty = false;
    std::vector<Factor> factors;
    std::vector<BlockClassification> classifications;
};

struct PrimeFactorInfo {
    long prime = 0;
    std::string kind;
    bool invariant = true;
};

SpaceDescriptor space_descriptor(const Ambient& amb, const std::vector<GroupElement>& c, const SpanHandle& A,
                                 const SpanHandle& B, bool cut_independent,
                                 const std::vector<PrimeFactorInfo>& primes);

std::string segment_name(Segment s);

}
