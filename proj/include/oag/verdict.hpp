#pragma once

#include "oag/congruence.hpp"
#include "oag/extension_space.hpp"

#include <optional>

namespace oag {

struct NamedElement {
    std::string name;
    GroupElement value;
};

struct Scene {
    int version = 1;
    Ambient amb;
    CongruenceSpec congruence;
    std::vector<NamedElement> A, B, c;
    int verbosity = 0;

    std::vector<GroupElement> a_values() const;
    std::vector<GroupElement> b_values() const;
    std::vector<GroupElement> c_values() const;
    // Rational spans; discrete scenes include the unit.
    SpanHandle a_span() const;
    SpanHandle b_span() const;
    // Residue vectors at prime l, indexed like the element list.
    std::vector<ZVec> residues(const std::vector<NamedElement>& xs, long l) const;
    std::optional<ZVec> unit_residue(long l) const;
    void validate() const;
};

struct CutWitness {
    GroupElement c, b1, b2;
    QVec combination;
    std::string branch;
};

struct CutIndependence {
    bool independent = true;
    std::optional<CutWitness> witness;
    std::vector<int> free_indices;
    long leaves = 0;
};

CutIndependence decide_cut_independence(const Ambient& amb, const SpanHandle& A, const SpanHandle& B,
                                        const std::vector<GroupElement>& c);

struct PrimeVerdict {
    long l = 0;
    PrimeKind kind = PrimeKind::divisible;
    bool holds = true;
    ConditionResult detail;
};

// true means independent (no forking, no dividing, bounded orbit, invariant extension).
struct Verdict {
    bool forking = true;
    bool dividing = true;
    bool bounded_orbit = true;
    bool invariant = true;
    bool condition1 = true;
    std::optional<CutWitness> interval;
    std::vector<PrimeVerdict> condition2;
    std::vector<PrimeVerdict> invariance_extra;
    std::vector<int> free_indices;
    std::vector<std::string> notes;
};

Verdict decide_forking(const Scene& scene);
void check_verdict_structure(const Verdict& v);

bool same_type_over(const Ambient& amb, const std::vector<GroupElement>& x, const std::vector<GroupElement>& y,
                    const SpanHandle& D);

SpaceDescriptor extensions(const Scene& scene, const Verdict& v);

}
