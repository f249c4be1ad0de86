#pragma once

#include "oag/lex_linear.hpp"

#include <optional>

namespace oag {

enum class Flavor { type_definable, vee_definable };

// Convex subgroup of the finite chain. key 2L means classes <= L, key 2L-1 classes < L.
struct ConvexSubgroup {
    int key = 0;
    Flavor flavor = Flavor::type_definable;

    static ConvexSubgroup below(int level, Flavor f) { return {2 * level - 1, f}; }
    static ConvexSubgroup up_to(int level, Flavor f) { return {level <= 0 ? 0 : 2 * level, f}; }
    bool contains_level(int level) const { return level == 0 || 2 * level <= key; }
    bool same_classes(const ConvexSubgroup& o) const { return key == o.key; }
    std::string str(const Ambient& amb) const;
};

struct CutProfile {
    bool member = false;
    int mu = 0;
    bool ramified = false;
    GroupElement ramifier;
    int delta = 0;
    int side = 0;
    ConvexSubgroup G;
    ConvexSubgroup H;
    std::vector<int> stab_levels;
    bool stab_probe_agrees = true;
    int descent_steps = 0;
    int descent_mu = 0;
};

enum class ProfileMode { structural, probe };

CutProfile cut_profile(const Ambient& amb, const GroupElement& d, const SpanHandle& A,
                       ProfileMode mode = ProfileMode::structural);

enum class CutKind { member_of_span, arch_coset, ram_component };

struct CutDescriptor {
    CutKind kind = CutKind::member_of_span;
    GroupElement point;
    ConvexSubgroup G;
    ConvexSubgroup H;
    int side = 0;
};

CutDescriptor cut_descriptor(const Ambient& amb, const GroupElement& d, const SpanHandle& A);

// Choices expressing "x realizes the same cut over A as the profiled element".
std::vector<Choice> cut_shape(const Ambient& amb, const GroupElement& d, const CutProfile& p,
                              const SpanHandle& A, const LinearForm& x, int nvars);

enum class Lean { left, right, both, trapped };

struct LeanResult {
    Lean lean = Lean::both;
    std::optional<GroupElement> below;
    std::optional<GroupElement> above;
};

LeanResult leaning(const Ambient& amb, const GroupElement& d, const SpanHandle& A, const SpanHandle& B);

struct UnaryIndependence {
    bool independent = true;
    GroupElement b1, b2;
};

UnaryIndependence unary_cut_independent(const Ambient& amb, const GroupElement& d, const SpanHandle& A,
                                        const SpanHandle& B);

std::string lean_name(Lean l);

}
