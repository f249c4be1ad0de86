#pragma once

#include "oag/linalg.hpp"
#include "oag/numberfield.hpp"

#include <memory>
#include <set>
#include <string>

namespace oag {

enum class SceneKind { dense, discrete };

struct Slot {
    std::string name;
    std::vector<FieldElement> gens;
};

// Levels: the most significant slot has level S, the least significant level 1,
// and level 0 is the class of the zero element.
struct ArchClass {
    int level = 0;

    bool is_zero() const { return level == 0; }
    auto operator<=>(const ArchClass&) const = default;
};

struct GroupElement {
    QVec v;

    bool operator==(const GroupElement& o) const { return v == o.v; }
};

class Ambient {
public:
    Ambient() = default;
    Ambient(FieldSpec field, SceneKind kind, std::vector<Slot> slots);

    const FieldSpec& field() const { return field_; }
    SceneKind kind() const { return kind_; }
    const std::vector<Slot>& slots() const { return slots_; }
    int nslots() const { return int(slots_.size()); }
    size_t dim() const { return dim_; }
    size_t offset(int slot) const { return offsets_[slot]; }
    size_t width(int slot) const { return slots_[slot].gens.size(); }
    int slot_of_coord(size_t i) const { return coord_slot_[i]; }
    int level_of_slot(int slot) const { return nslots() - slot; }
    int slot_of_level(int level) const { return nslots() - level; }
    int slot_index(const std::string& name) const;

    GroupElement zero() const { return GroupElement{QVec(dim_, Q(0))}; }
    GroupElement unit() const;
    GroupElement basis_vector(size_t i) const;
    FieldElement slot_value(const GroupElement& x, int slot) const;
    QVec slot_coords(const GroupElement& x, int slot) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement scale(const GroupElement& a, const Q& s) const;
    GroupElement combine(const std::vector<GroupElement>& xs, const QVec& coeffs) const;

    void check(const GroupElement& x) const;
    void sanity_check_independence(unsigned seed = 7) const;

    bool operator==(const Ambient& o) const;

private:
    FieldSpec field_;
    SceneKind kind_ = SceneKind::dense;
    std::vector<Slot> slots_;
    std::vector<size_t> offsets_;
    std::vector<int> coord_slot_;
    size_t dim_ = 0;
};

int compare_elements(const Ambient& amb, const GroupElement& x, const GroupElement& y);
int sign_of(const Ambient& amb, const GroupElement& x);
ArchClass arch_class(const Ambient& amb, const GroupElement& x);

class SpanHandle {
public:
    SpanHandle() = default;
    SpanHandle(const Ambient& amb, std::vector<GroupElement> gens);

    static SpanHandle whole(const Ambient& amb);

    const std::vector<GroupElement>& generators() const { return gens_; }
    const Echelon& echelon() const { return ech_; }
    std::vector<GroupElement> basis() const;
    size_t dim() const { return ech_.rows.size(); }
    const std::set<int>& levels() const { return levels_; }
    bool has_level(int level) const { return levels_.count(level) > 0; }
    int prev_level(int level) const;
    int next_level(int level) const;
    int top() const { return levels_.empty() ? 0 : *levels_.rbegin(); }
    SpanHandle join(const Ambient& amb, const std::vector<GroupElement>& more) const;
    bool contains_span(const SpanHandle& other) const;
    const std::vector<int>& row_levels() const { return row_level_; }

    bool operator==(const SpanHandle& o) const { return ech_.rows == o.ech_.rows; }

private:
    std::vector<GroupElement> gens_;
    Echelon ech_;
    std::set<int> levels_;
    std::vector<int> row_level_;
};

struct SpanQuery {
    bool member = false;
    GroupElement residue;
};

struct Reduction {
    GroupElement part;
    GroupElement residue;
    int mu = 0;
};

SpanQuery span_query(const Ambient& amb, const SpanHandle& V, const GroupElement& x);
std::vector<std::pair<ArchClass, int>> arch_classes_of_span(const Ambient& amb, const SpanHandle& V);
Reduction reduce(const Ambient& amb, const SpanHandle& V, const GroupElement& x);
QMat slot_part_space(const Ambient& amb, const SpanHandle& V, int level);

// Basis of the space of coefficient vectors l with sum l_i x_i in D + M_{<=level}.
QMat lambda_subspace(const Ambient& amb, const std::vector<GroupElement>& xs, const SpanHandle& D,
                     int level);

}
