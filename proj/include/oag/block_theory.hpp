#pragma once

#include "oag/cut_analysis.hpp"

namespace oag {

// val keys: G descriptor, then ramified (0) before Archimedean (1), then delta.
struct BlockKey {
    int g = 0;
    int arch = 0;
    int delta = 0;

    auto operator<=>(const BlockKey&) const = default;
};

BlockKey val_key(const CutProfile& p, int level);

struct Block {
    BlockKey key;
    std::vector<int> members;
};

struct BlockDecomposition {
    int level = 3;
    std::vector<Block> blocks;
    std::vector<int> in_span;
};

BlockDecomposition val_blocks(const Ambient& amb, const std::vector<GroupElement>& c, const SpanHandle& D,
                              int level);

struct SeparationResult {
    bool separated = true;
    QVec combination;
};

SeparationResult is_separated(const Ambient& amb, const std::vector<GroupElement>& c, const SpanHandle& D,
                              int level = 3);

struct RayClass {
    int level = 0;
    QVec direction;

    bool operator==(const RayClass&) const = default;
};

std::vector<RayClass> pplus_rays(const Ambient& amb, const std::vector<GroupElement>& block, const SpanHandle& D);
bool rays_free(const std::vector<RayClass>& rays);

enum class Role { d, dprime, dtilde };

struct NormalTerm {
    GroupElement value;
    QVec lambda;
    GroupElement translation;
    Role role = Role::d;
    CutProfile over_a;
    CutProfile over_b;
};

struct NormalFormBasis {
    std::vector<NormalTerm> terms;
};

struct TraceStep {
    std::string phase;
    std::vector<long> measure;
};

struct NormalizeResult {
    NormalFormBasis basis;
    std::vector<TraceStep> rho_trace;
    std::vector<TraceStep> g_trace;
    std::vector<std::string> diagnostics;
    int steps = 0;
};

// Terms are classified by their profiles over A and B.
NormalFormBasis enumerate_basis(const Ambient& amb, const std::vector<GroupElement>& c, const SpanHandle& A,
                                const SpanHandle& B);

NormalizeResult normalize(const Ambient& amb, const std::vector<GroupElement>& c, const SpanHandle& A,
                          const SpanHandle& B);

struct PropertyCheck {
    std::string name;
    bool ok = true;
    QVec counterexample;
};

std::vector<PropertyCheck> check_normal_form(const Ambient& amb, const NormalFormBasis& basis, const SpanHandle& A,
                                             const SpanHandle& B);

bool measure_less(const std::vector<long>& a, const std::vector<long>& b);
std::string role_name(Role r);

}
