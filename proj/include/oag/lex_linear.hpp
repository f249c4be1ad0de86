#pragma once

#include "oag/model.hpp"

#include <map>
#include <string>

namespace oag {

enum class Rel { lt, le, eq };

struct LinearForm {
    std::map<int, GroupElement> terms;
    GroupElement constant;

    static LinearForm of(const GroupElement& c) { return LinearForm{{}, c}; }
    LinearForm& add_term(int var, const GroupElement& g, const Ambient& amb);
    LinearForm plus(const LinearForm& o, const Ambient& amb) const;
    LinearForm minus(const LinearForm& o, const Ambient& amb) const;
    GroupElement eval(const QVec& x, const Ambient& amb) const;
};

// A span-valued unknown: one rational variable per basis vector, starting at first_var.
LinearForm span_variable(const Ambient& amb, const std::vector<GroupElement>& basis, int first_var);

struct Atom {
    LinearForm form;
    Rel rel;
};

// sum coef_i x_i + constant  rel  0
struct Constraint {
    std::vector<FieldElement> coef;
    FieldElement constant;
    Rel rel;
};

struct RatEq {
    QVec coef;
    Q constant;
};

struct SlotSystem {
    int nvars = 0;
    std::vector<Constraint> cons;
    std::vector<std::string> provenance;
};

struct Conj {
    std::vector<RatEq> eqs;
    std::vector<Constraint> strict;
    std::string tag;
};

struct Choice {
    std::vector<Conj> alts;
};

struct Problem {
    int nvars = 0;
    std::vector<Choice> choices;
};

struct FeasResult {
    bool sat = false;
    QVec witness;
    std::vector<int> branch;
    long leaves = 0;
};

Q simplest_between(const Q& lo, const Q& hi);

Constraint slot_constraint(const Ambient& amb, const LinearForm& f, int slot, Rel rel, int nvars);
std::vector<RatEq> slot_zero(const Ambient& amb, const LinearForm& f, int slot, int nvars, bool& consistent);
Choice lex_choice(const Ambient& amb, const LinearForm& f, Rel rel, int nvars);
Conj lead_conj(const Ambient& amb, const LinearForm& f, int level, int sign, int nvars, bool& ok);
RatEq rational_eq(const QVec& coef, const Q& constant);
Constraint rational_strict(const FieldSpec& F, const QVec& coef, const Q& constant);

FeasResult solve(const FieldSpec& F, const Problem& p);
FeasResult solve_parallel(const FieldSpec& F, const Problem& p);
FeasResult feasible(const Ambient& amb, const std::vector<Atom>& atoms, int nvars);

bool holds(const FieldSpec& F, const Constraint& c, const QVec& x);
bool holds(const FieldSpec& F, const SlotSystem& s, const QVec& x);
bool holds(const Ambient& amb, const Atom& a, const QVec& x);
SlotSystem fm_eliminate(const FieldSpec& F, const SlotSystem& system, const std::vector<int>& vars);
bool real_feasible(const FieldSpec& F, const SlotSystem& system);
bool trivially_false(const FieldSpec& F, const SlotSystem& s);
std::vector<SlotSystem> interval_meets_span(const Ambient& amb, const LinearForm& b1, const LinearForm& b2,
                                            const SpanHandle& V, int nvars);
std::string describe(const FieldSpec& F, const SlotSystem& s);

}
