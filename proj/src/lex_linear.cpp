#include "oag/lex_linear.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>

namespace oag {

LinearForm& LinearForm::add_term(int var, const GroupElement& g, const Ambient& amb)
{
    auto it = terms.find(var);
    if (it == terms.end())
        terms.emplace(var, g);
    else
        it->second = amb.add(it->second, g);
    return *this;
}

LinearForm LinearForm::plus(const LinearForm& o, const Ambient& amb) const
{
    LinearForm r = *this;
    r.constant = amb.add(constant, o.constant);
    for (const auto& [v, g] : o.terms)
        r.add_term(v, g, amb);
    return r;
}

LinearForm LinearForm::minus(const LinearForm& o, const Ambient& amb) const
{
    LinearForm r = *this;
    r.constant = amb.sub(constant, o.constant);
    for (const auto& [v, g] : o.terms)
        r.add_term(v, amb.scale(g, Q(-1)), amb);
    return r;
}

GroupElement LinearForm::eval(const QVec& x, const Ambient& amb) const
{
    GroupElement r = constant;
    for (const auto& [v, g] : terms)
        if (sgn(x[v]) != 0)
            r = amb.add(r, amb.scale(g, x[v]));
    return r;
}

LinearForm span_variable(const Ambient& amb, const std::vector<GroupElement>& basis, int first_var)
{
    LinearForm f = LinearForm::of(amb.zero());
    for (size_t i = 0; i < basis.size(); ++i)
        f.add_term(first_var + int(i), basis[i], amb);
    return f;
}

Q simplest_between(const Q& lo, const Q& hi)
{
    if (sgn(lo) < 0 && sgn(hi) > 0)
        return 0;
    if (sgn(hi) <= 0)
        return -simplest_between(-hi, -lo);
    Z fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (Q(fl + 1) < hi)
        return Q(fl + 1);
    Q a = lo - fl, b = hi - fl;
    if (sgn(a) == 0) {
        Q inv = 1 / b;
        Z y;
        mpz_fdiv_q(y.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
        return Q(fl) + Q(1) / Q(y + 1);
    }
    Q y = simplest_between(1 / b, 1 / a);
    return Q(fl) + 1 / y;
}

static bool constant_only(const Constraint& c)
{
    for (const auto& e : c.coef)
        for (const auto& q : e.c)
            if (sgn(q) != 0)
                return false;
    return true;
}

static bool rel_holds(int s, Rel rel)
{
    switch (rel) {
    case Rel::lt: return s < 0;
    case Rel::le: return s <= 0;
    default: return s == 0;
    }
}

static void normalize(Constraint& c)
{
    const Q* first = nullptr;
    for (const auto& e : c.coef) {
        for (const auto& q : e.c)
            if (sgn(q) != 0) {
                first = &q;
                break;
            }
        if (first)
            break;
    }
    if (!first)
        for (const auto& q : c.constant.c)
            if (sgn(q) != 0) {
                first = &q;
                break;
            }
    if (!first)
        return;
    Q s = abs(*first);
    if (s == 1)
        return;
    Q inv = 1 / s;
    for (auto& e : c.coef)
        for (auto& q : e.c)
            q *= inv;
    for (auto& q : c.constant.c)
        q *= inv;
}

static QVec key_of(const Constraint& c)
{
    QVec k;
    for (const auto& e : c.coef)
        k.insert(k.end(), e.c.begin(), e.c.end());
    k.insert(k.end(), c.constant.c.begin(), c.constant.c.end());
    k.push_back(Q(int(c.rel)));
    return k;
}

RatEq rational_eq(const QVec& coef, const Q& constant) { return RatEq{coef, constant}; }

Constraint rational_strict(const FieldSpec& F, const QVec& coef, const Q& constant)
{
    Constraint c;
    for (const auto& q : coef)
        c.coef.push_back(F.from_rational(q));
    c.constant = F.from_rational(constant);
    c.rel = Rel::lt;
    return c;
}

Constraint slot_constraint(const Ambient& amb, const LinearForm& f, int slot, Rel rel, int nvars)
{
    const FieldSpec& F = amb.field();
    Constraint c;
    c.coef.assign(nvars, F.zero());
    for (const auto& [v, g] : f.terms)
        c.coef[v] = F.add(c.coef[v], amb.slot_value(g, slot));
    c.constant = amb.slot_value(f.constant, slot);
    c.rel = rel;
    return c;
}

std::vector<RatEq> slot_zero(const Ambient& amb, const LinearForm& f, int slot, int nvars, bool& consistent)
{
    std::vector<RatEq> out;
    size_t off = amb.offset(slot);
    for (size_t j = 0; j < amb.width(slot); ++j) {
        RatEq e{QVec(nvars, Q(0)), f.constant.v[off + j]};
        bool any = false;
        for (const auto& [v, g] : f.terms) {
            e.coef[v] += g.v[off + j];
            any = any || sgn(e.coef[v]) != 0;
        }
        if (!any) {
            if (sgn(e.constant) != 0)
                consistent = false;
            continue;
        }
        out.push_back(std::move(e));
    }
    return out;
}

Conj lead_conj(const Ambient& amb, const LinearForm& f, int level, int sign, int nvars, bool& ok)
{
    Conj cj;
    ok = true;
    int slot = amb.slot_of_level(level);
    for (int s = 0; s < slot && ok; ++s) {
        auto eqs = slot_zero(amb, f, s, nvars, ok);
        cj.eqs.insert(cj.eqs.end(), eqs.begin(), eqs.end());
    }
    if (!ok)
        return cj;
    LinearForm g = f;
    if (sign > 0) {
        g.constant = amb.scale(g.constant, Q(-1));
        for (auto& [v, e] : g.terms)
            e = amb.scale(e, Q(-1));
    }
    Constraint c = slot_constraint(amb, g, slot, Rel::lt, nvars);
    if (constant_only(c)) {
        if (amb.field().sign(c.constant) >= 0)
            ok = false;
    } else {
        cj.strict.push_back(std::move(c));
    }
    return cj;
}

Choice lex_choice(const Ambient& amb, const LinearForm& f, Rel rel, int nvars)
{
    Choice ch;
    int S = amb.nslots();
    if (rel != Rel::lt) {
        Conj cj;
        cj.tag = "zero";
        bool ok = true;
        for (int s = 0; s < S && ok; ++s) {
            auto eqs = slot_zero(amb, f, s, nvars, ok);
            cj.eqs.insert(cj.eqs.end(), eqs.begin(), eqs.end());
        }
        if (ok)
            ch.alts.push_back(std::move(cj));
    }
    if (rel == Rel::eq)
        return ch;
    for (int s = S - 1; s >= 0; --s) {
        bool ok = true;
        Conj cj = lead_conj(amb, f, amb.level_of_slot(s), -1, nvars, ok);
        if (!ok)
            continue;
        cj.tag = "lead " + amb.slots()[s].name;
        ch.alts.push_back(std::move(cj));
    }
    return ch;
}

struct EqState {
    QMat rows;
    std::vector<int> piv;
};

static int add_eq(EqState& st, const RatEq& e, int nv)
{
    QVec v = e.coef;
    v.resize(nv);
    v.push_back(e.constant);
    for (size_t i = 0; i < st.rows.size(); ++i) {
        int p = st.piv[i];
        if (sgn(v[p]) == 0)
            continue;
        Q f = v[p];
        for (int j = 0; j <= nv; ++j)
            v[j] -= f * st.rows[i][j];
    }
    int p = -1;
    for (int j = nv - 1; j >= 0; --j)
        if (sgn(v[j]) != 0) {
            p = j;
            break;
        }
    if (p < 0)
        return sgn(v[nv]) == 0 ? 0 : -1;
    Q lead = v[p];
    for (int j = 0; j <= nv; ++j)
        v[j] /= lead;
    for (auto& r : st.rows) {
        if (sgn(r[p]) == 0)
            continue;
        Q f = r[p];
        for (int j = 0; j <= nv; ++j)
            r[j] -= f * v[j];
    }
    st.rows.push_back(std::move(v));
    st.piv.push_back(p);
    return 1;
}

static void substitute(const FieldSpec& F, Constraint& c, const QVec& row, int p, int nv)
{
    if (F.sign(c.coef[p]) == 0 && is_zero(c.coef[p].c))
        return;
    FieldElement a = c.coef[p];
    if (is_zero(a.c))
        return;
    for (int f = 0; f < nv; ++f)
        if (f != p && sgn(row[f]) != 0)
            c.coef[f] = F.sub(c.coef[f], F.scale(a, row[f]));
    c.constant = F.sub(c.constant, F.scale(a, row[nv]));
    c.coef[p] = F.zero();
}

static bool fm_solve(const FieldSpec& F, std::vector<Constraint> cons, int nv, QVec& x);

namespace {

struct Dfs {
    const FieldSpec& F;
    const Problem& p;
    long leaves = 0;
    std::vector<int> branch;
    QVec witness;

    Dfs(const FieldSpec& F_, const Problem& p_) : F(F_), p(p_) {}

    bool run(size_t depth, const EqState& st, const std::vector<Constraint>& strict)
    {
        int nv = p.nvars;
        if (depth == p.choices.size()) {
            ++leaves;
            QVec x(nv, Q(0));
            if (!fm_solve(F, strict, nv, x))
                return false;
            for (int i = int(st.rows.size()) - 1; i >= 0; --i) {
                Q v = -st.rows[i][nv];
                for (int j = 0; j < nv; ++j)
                    if (j != st.piv[i] && sgn(st.rows[i][j]) != 0)
                        v -= st.rows[i][j] * x[j];
                x[st.piv[i]] = v;
            }
            witness = x;
            return true;
        }
        const auto& alts = p.choices[depth].alts;
        for (size_t a = 0; a < alts.size(); ++a) {
            EqState ns = st;
            size_t before = ns.rows.size();
            bool bad = false;
            for (const auto& e : alts[a].eqs) {
                if (add_eq(ns, e, nv) < 0) {
                    bad = true;
                    break;
                }
            }
            if (bad)
                continue;
            std::vector<Constraint> nstrict;
            nstrict.reserve(strict.size() + alts[a].strict.size());
            auto push = [&](Constraint c, bool fresh) {
                size_t from = fresh ? 0 : before;
                for (size_t i = from; i < ns.rows.size(); ++i)
                    substitute(F, c, ns.rows[i], ns.piv[i], nv);
                if (constant_only(c)) {
                    if (!rel_holds(F.sign(c.constant), c.rel))
                        return false;
                    return true;
                }
                nstrict.push_back(std::move(c));
                return true;
            };
            for (const auto& c : strict)
                if (!push(c, false)) {
                    bad = true;
                    break;
                }
            if (bad)
                continue;
            for (const auto& c : alts[a].strict) {
                Constraint cc = c;
                cc.coef.resize(nv, F.zero());
                if (!push(cc, true)) {
                    bad = true;
                    break;
                }
            }
            if (bad)
                continue;
            branch.push_back(int(a));
            if (run(depth + 1, ns, nstrict))
                return true;
            branch.pop_back();
        }
        return false;
    }
};

}

FeasResult solve(const FieldSpec& F, const Problem& p)
{
    Dfs d(F, p);
    FeasResult r;
    r.sat = d.run(0, EqState{}, {});
    r.leaves = d.leaves;
    if (r.sat) {
        r.witness = d.witness;
        r.branch = d.branch;
    }
    return r;
}

FeasResult solve_parallel(const FieldSpec& F, const Problem& p)
{
    size_t split = 0;
    long combos = 1;
    long want = 8L * std::max(1, omp_get_max_threads());
    while (split < p.choices.size() && combos < want) {
        combos *= long(std::max<size_t>(1, p.choices[split].alts.size()));
        ++split;
    }
    for (size_t i = 0; i < split; ++i)
        if (p.choices[i].alts.empty())
            return FeasResult{};
    if (split == 0)
        return solve(F, p);
    std::vector<long> radix(split);
    for (size_t i = 0; i < split; ++i)
        radix[i] = long(p.choices[i].alts.size());
    std::atomic<long> best{combos};
    std::vector<FeasResult> results(combos);
#pragma omp parallel for schedule(dynamic, 1)
    for (long idx = 0; idx < combos; ++idx) {
        if (idx > best.load())
            continue;
        Problem sub;
        sub.nvars = p.nvars;
        long rem = idx;
        std::vector<int> prefix(split);
        for (int i = int(split) - 1; i >= 0; --i) {
            prefix[i] = int(rem % radix[i]);
            rem /= radix[i];
        }
        for (size_t i = 0; i < split; ++i)
            sub.choices.push_back(Choice{{p.choices[i].alts[prefix[i]]}});
        for (size_t i = split; i < p.choices.size(); ++i)
            sub.choices.push_back(p.choices[i]);
        FeasResult r = solve(F, sub);
        if (r.sat) {
            for (size_t i = 0; i < split; ++i)
                r.branch[i] = prefix[i];
            results[idx] = r;
            long cur = best.load();
            while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
            }
        } else {
            results[idx].leaves = r.leaves;
        }
    }
    FeasResult out;
    for (const auto& r : results)
        out.leaves += r.leaves;
    long b = best.load();
    if (b < combos) {
        long leaves = out.leaves;
        out = results[b];
        out.leaves = leaves;
    }
    return out;
}

FeasResult feasible(const Ambient& amb, const std::vector<Atom>& atoms, int nvars)
{
    Problem p;
    p.nvars = nvars;
    for (const auto& a : atoms)
        p.choices.push_back(lex_choice(amb, a.form, a.rel, nvars));
    return solve(amb.field(), p);
}

static FieldElement eval_rest(const FieldSpec& F, const Constraint& c, const QVec& x, int skip)
{
    FieldElement r = c.constant;
    for (size_t i = 0; i < c.coef.size(); ++i)
        if (int(i) != skip && sgn(x[i]) != 0 && !is_zero(c.coef[i].c))
            r = F.add(r, F.scale(c.coef[i], x[i]));
    return r;
}

bool holds(const FieldSpec& F, const Constraint& c, const QVec& x)
{
    return rel_holds(F.sign(eval_rest(F, c, x, -1)), c.rel);
}

bool holds(const FieldSpec& F, const SlotSystem& s, const QVec& x)
{
    for (const auto& c : s.cons)
        if (!holds(F, c, x))
            return false;
    return true;
}

bool holds(const Ambient& amb, const Atom& a, const QVec& x)
{
    return rel_holds(sign_of(amb, a.form.eval(x, amb)), a.rel);
}

static bool combine_into(const FieldSpec& F, const Constraint& up, const Constraint& lo, int v,
                         Constraint& out)
{
    FieldElement a = up.coef[v];
    FieldElement b = F.neg(lo.coef[v]);
    out.coef.resize(up.coef.size());
    for (size_t i = 0; i < up.coef.size(); ++i)
        out.coef[i] = F.add(F.mul(b, up.coef[i]), F.mul(a, lo.coef[i]));
    out.coef[v] = F.zero();
    out.constant = F.add(F.mul(b, up.constant), F.mul(a, lo.constant));
    out.rel = (up.rel == Rel::lt || lo.rel == Rel::lt) ? Rel::lt : Rel::le;
    return true;
}

static void eliminate_eq(const FieldSpec& F, std::vector<Constraint>& cons, size_t which, int v)
{
    Constraint eq = cons[which];
    cons.erase(cons.begin() + long(which));
    FieldElement a = eq.coef[v];
    int sa = F.sign(a);
    FieldElement absa = sa < 0 ? F.neg(a) : a;
    for (auto& c : cons) {
        if (is_zero(c.coef[v].c))
            continue;
        FieldElement k = c.coef[v];
        if (sa < 0)
            k = F.neg(k);
        for (size_t i = 0; i < c.coef.size(); ++i)
            c.coef[i] = F.sub(F.mul(absa, c.coef[i]), F.mul(k, eq.coef[i]));
        c.coef[v] = F.zero();
        c.constant = F.sub(F.mul(absa, c.constant), F.mul(k, eq.constant));
    }
}

// One elimination step; returns false when a constant constraint fails.
static bool eliminate_var(const FieldSpec& F, std::vector<Constraint>& cons, int v, bool keep_false)
{
    for (size_t i = 0; i < cons.size(); ++i)
        if (cons[i].rel == Rel::eq && F.sign(cons[i].coef[v]) != 0) {
            eliminate_eq(F, cons, i, v);
            goto cleanup;
        }
    {
        std::vector<Constraint> up, lo, rest;
        for (auto& c : cons) {
            int s = F.sign(c.coef[v]);
            if (s > 0)
                up.push_back(std::move(c));
            else if (s < 0)
                lo.push_back(std::move(c));
            else {
                c.coef[v] = F.zero();
                rest.push_back(std::move(c));
            }
        }
        for (const auto& u : up)
            for (const auto& l : lo) {
                Constraint c;
                combine_into(F, u, l, v, c);
                rest.push_back(std::move(c));
            }
        cons = std::move(rest);
    }
cleanup:
    std::vector<Constraint> out;
    std::set<QVec> seen;
    bool ok = true;
    for (auto& c : cons) {
        normalize(c);
        if (constant_only(c)) {
            if (rel_holds(F.sign(c.constant), c.rel))
                continue;
            ok = false;
            if (!keep_false)
                continue;
        }
        if (seen.insert(key_of(c)).second)
            out.push_back(std::move(c));
    }
    cons = std::move(out);
    return ok;
}

static int pick_var(const FieldSpec& F, const std::vector<Constraint>& cons, int nv)
{
    int best = -1;
    long best_cost = 0;
    for (int v = 0; v < nv; ++v) {
        long up = 0, lo = 0;
        bool eq = false;
        for (const auto& c : cons) {
            if (is_zero(c.coef[v].c))
                continue;
            if (c.rel == Rel::eq) {
                eq = true;
                continue;
            }
            if (F.sign(c.coef[v]) > 0)
                ++up;
            else
                ++lo;
        }
        if (up + lo == 0 && !eq)
            continue;
        long cost = eq ? -1 : up * lo - up - lo;
        if (best < 0 || cost <= best_cost) {
            best = v;
            best_cost = cost;
        }
    }
    return best;
}

static bool choose_value(const FieldSpec& F, const std::vector<Constraint>& cons, int v, QVec& x)
{
    bool has_lo = false, has_up = false, lo_strict = false, up_strict = false;
    FieldElement lo, up;
    for (const auto& c : cons) {
        int s = F.sign(c.coef[v]);
        if (s == 0)
            continue;
        FieldElement bound = F.neg(F.mul(eval_rest(F, c, x, v), F.inv(c.coef[v])));
        bool strict = c.rel == Rel::lt;
        if (c.rel == Rel::eq) {
            if (!F.is_rational(bound))
                return false;
            x[v] = bound.c[0];
            return true;
        }
        if (s > 0) {
            int cmp = has_up ? F.compare(bound, up) : -1;
            if (cmp < 0 || (cmp == 0 && strict)) {
                up = bound;
                up_strict = strict;
            }
            has_up = true;
        } else {
            int cmp = has_lo ? F.compare(bound, lo) : 1;
            if (cmp > 0 || (cmp == 0 && strict)) {
                lo = bound;
                lo_strict = strict;
            }
            has_lo = true;
        }
    }
    if (has_lo && has_up) {
        int cmp = F.compare(lo, up);
        if (cmp > 0 || (cmp == 0 && (lo_strict || up_strict)))
            return false;
        if (cmp == 0) {
            if (!F.is_rational(lo))
                return false;
            x[v] = lo.c[0];
            return true;
        }
        for (unsigned bits = 16; bits < 4096; bits *= 2) {
            auto [ll, lh] = F.enclose(lo, bits);
            auto [ul, uh] = F.enclose(up, bits);
            if (lh < ul) {
                x[v] = simplest_between(lh, ul);
                return true;
            }
        }
        return false;
    }
    if (has_lo) {
        auto [ll, lh] = F.enclose(lo, 16);
        x[v] = simplest_between(lh, lh + Q(abs(lh) + 2));
        return true;
    }
    if (has_up) {
        auto [ul, uh] = F.enclose(up, 16);
        x[v] = simplest_between(ul - Q(abs(ul) + 2), ul);
        return true;
    }
    x[v] = 0;
    return true;
}

static bool fm_solve(const FieldSpec& F, std::vector<Constraint> cons, int nv, QVec& x)
{
    std::vector<std::vector<Constraint>> stages;
    std::vector<int> order;
    for (auto& c : cons)
        normalize(c);
    while (true) {
        int v = pick_var(F, cons, nv);
        if (v < 0)
            break;
        stages.push_back(cons);
        order.push_back(v);
        if (!eliminate_var(F, cons, v, false))
            return false;
    }
    for (const auto& c : cons)
        if (!rel_holds(F.sign(c.constant), c.rel))
            return false;
    for (int i = int(order.size()) - 1; i >= 0; --i)
        if (!choose_value(F, stages[i], order[i], x))
            return false;
    return true;
}

SlotSystem fm_eliminate(const FieldSpec& F, const SlotSystem& system, const std::vector<int>& vars)
{
    SlotSystem out = system;
    for (auto& c : out.cons) {
        c.coef.resize(out.nvars, F.zero());
        normalize(c);
    }
    for (int v : vars)
        eliminate_var(F, out.cons, v, true);
    out.provenance.push_back("eliminated " + std::to_string(vars.size()) + " variables");
    return out;
}

bool trivially_false(const FieldSpec& F, const SlotSystem& s)
{
    for (const auto& c : s.cons)
        if (constant_only(c) && !rel_holds(F.sign(c.constant), c.rel))
            return true;
    return false;
}

bool real_feasible(const FieldSpec& F, const SlotSystem& system)
{
    std::vector<int> all;
    for (int v = 0; v < system.nvars; ++v)
        all.push_back(v);
    return !trivially_false(F, fm_eliminate(F, system, all));
}

static Constraint eq_constraint(const FieldSpec& F, const RatEq& e, int nv)
{
    Constraint c;
    for (int i = 0; i < nv; ++i)
        c.coef.push_back(F.from_rational(i < int(e.coef.size()) ? e.coef[i] : Q(0)));
    c.constant = F.from_rational(e.constant);
    c.rel = Rel::eq;
    return c;
}

std::vector<SlotSystem> interval_meets_span(const Ambient& amb, const LinearForm& b1, const LinearForm& b2,
                                            const SpanHandle& V, int nvars)
{
    const FieldSpec& F = amb.field();
    auto basis = V.basis();
    int total = nvars + int(basis.size());
    LinearForm a = span_variable(amb, basis, nvars);
    Choice lo = lex_choice(amb, b1.minus(a, amb), Rel::le, total);
    Choice hi = lex_choice(amb, a.minus(b2, amb), Rel::le, total);
    std::vector<int> lam;
    for (int i = nvars; i < total; ++i)
        lam.push_back(i);
    std::vector<SlotSystem> out;
    std::set<std::vector<QVec>> seen;
    for (size_t i = 0; i < lo.alts.size(); ++i)
        for (size_t j = 0; j < hi.alts.size(); ++j) {
            SlotSystem s;
            s.nvars = total;
            for (const auto* cj : {&lo.alts[i], &hi.alts[j]}) {
                for (const auto& e : cj->eqs)
                    s.cons.push_back(eq_constraint(F, e, total));
                for (const auto& c : cj->strict) {
                    Constraint cc = c;
                    cc.coef.resize(total, F.zero());
                    s.cons.push_back(cc);
                }
            }
            SlotSystem r = fm_eliminate(F, s, lam);
            if (trivially_false(F, r))
                continue;
            r.nvars = nvars;
            for (auto& c : r.cons)
                c.coef.resize(nvars);
            std::vector<QVec> key;
            for (const auto& c : r.cons)
                key.push_back(key_of(c));
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second)
                continue;
            r.provenance = {"b1<=a: " + lo.alts[i].tag, "a<=b2: " + hi.alts[j].tag};
            out.push_back(std::move(r));
        }
    return out;
}

static std::string fe_str(const FieldElement& e)
{
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < e.c.size(); ++i)
        os << (i ? " " : "") << qstr(e.c[i]);
    os << "]";
    return os.str();
}

std::string describe(const FieldSpec&, const SlotSystem& s)
{
    std::ostringstream os;
    for (const auto& p : s.provenance)
        os << "# " << p << "\n";
    for (const auto& c : s.cons) {
        for (size_t i = 0; i < c.coef.size(); ++i)
            if (!is_zero(c.coef[i].c))
                os << fe_str(c.coef[i]) << "*x" << i << " + ";
        os << fe_str(c.constant) << (c.rel == Rel::lt ? " < 0" : c.rel == Rel::le ? " <= 0" : " = 0") << "\n";
    }
    return os.str();
}

}
