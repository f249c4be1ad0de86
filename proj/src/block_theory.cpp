#include "oag/block_theory.hpp"

#include <algorithm>
#include <map>

namespace oag {

BlockKey val_key(const CutProfile& p, int level)
{
    BlockKey k{p.G.key, 0, 0};
    if (level >= 2)
        k.arch = p.ramified ? 0 : 1;
    if (level >= 3 && p.ramified)
        k.delta = p.delta;
    return k;
}

BlockDecomposition val_blocks(const Ambient& amb, const std::vector<GroupElement>& c, const SpanHandle& D,
                              int level)
{
    BlockDecomposition out;
    out.level = level;
    std::map<BlockKey, std::vector<int>> groups;
    for (size_t i = 0; i < c.size(); ++i) {
        CutProfile p = cut_profile(amb, c[i], D);
        if (p.member)
            out.in_span.push_back(int(i));
        else
            groups[val_key(p, level)].push_back(int(i));
    }
    for (auto& [k, m] : groups)
        out.blocks.push_back(Block{k, m});
    return out;
}

static int drop_threshold(const SpanHandle& D, const BlockKey& key, int level)
{
    int top = (key.g + 1) / 2;
    if (level == 1 || (level == 2 && key.arch == 0))
        return D.prev_level(top);
    if (key.arch == 1)
        return top - 1;
    return key.delta - 1;
}

SeparationResult is_separated(const Ambient& amb, const std::vector<GroupElement>& c, const SpanHandle& D,
                              int level)
{
    SeparationResult r;
    BlockDecomposition bd = val_blocks(amb, c, D, level);
    if (!bd.in_span.empty()) {
        r.separated = false;
        r.combination.assign(c.size(), Q(0));
        r.combination[bd.in_span[0]] = 1;
        return r;
    }
    for (const auto& b : bd.blocks) {
        std::vector<GroupElement> xs;
        for (int i : b.members)
            xs.push_back(c[i]);
        QMat L = lambda_subspace(amb, xs, D, drop_threshold(D, b.key, level));
        if (L.empty())
            continue;
        r.separated = false;
        r.combination.assign(c.size(), Q(0));
        for (size_t j = 0; j < b.members.size(); ++j)
            r.combination[b.members[j]] = L[0][j];
        return r;
    }
    return r;
}

std::vector<RayClass> pplus_rays(const Ambient& amb, const std::vector<GroupElement>& block, const SpanHandle& D)
{
    std::vector<RayClass> out;
    for (const auto& x : block) {
        CutProfile p = cut_profile(amb, x, D);
        if (!p.ramified)
            throw UsageError("pplus_rays: block member is not ramified");
        GroupElement diff = amb.sub(x, p.ramifier);
        RayClass ray;
        ray.level = p.delta;
        ray.direction = amb.slot_coords(diff, amb.slot_of_level(p.delta));
        for (const auto& q : ray.direction)
            if (sgn(q) != 0) {
                Q s = abs(q);
                for (auto& e : ray.direction)
                    e /= s;
                break;
            }
        out.push_back(ray);
    }
    return out;
}

bool rays_free(const std::vector<RayClass>& rays)
{
    std::map<int, QMat> by_level;
    for (const auto& r : rays)
        by_level[r.level].push_back(r.direction);
    for (const auto& [l, m] : by_level)
        if (rank_of(m, m[0].size()) != int(m.size()))
            return false;
    return true;
}

std::string role_name(Role r)
{
    switch (r) {
    case Role::d: return "d";
    case Role::dprime: return "d'";
    default: return "d~";
    }
}

bool measure_less(const std::vector<long>& a, const std::vector<long>& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

// A vector of K_s not in K_{s-1} for the most significant level s accepted by pred.
template <class Pred>
bool jump_vector(const Ambient& amb, const std::vector<GroupElement>& xs, const SpanHandle& D, Pred pred, QVec& out,
                 int& at)
{
    if (xs.empty())
        return false;
    size_t k = xs.size();
    for (int s = amb.nslots(); s >= 0; --s) {
        if (!pred(s))
            continue;
        QMat hi = lambda_subspace(amb, xs, D, s);
        if (hi.empty())
            continue;
        QMat lo = s == 0 ? QMat{} : lambda_subspace(amb, xs, D, s - 1);
        if (lo.size() == hi.size())
            continue;
        Echelon e = rref(lo, k);
        for (const auto& v : hi)
            if (!in_row_space(e, v)) {
                out = v;
                at = s;
                return true;
            }
    }
    return false;
}

struct Pipeline {
    const Ambient& amb;
    const std::vector<GroupElement>& c;
    const SpanHandle& A;
    const SpanHandle& B;
    NormalizeResult res;
    std::vector<QVec> tilde;
    std::vector<QVec> v;
    std::vector<Role> role;
    std::vector<int> dC;
    std::vector<int> dCB;

    GroupElement value(const QVec& lam) const { return reduce(amb, A, amb.combine(c, lam)).residue; }
    int level(const QVec& lam) const { return arch_class(amb, value(lam)).level; }

    std::vector<GroupElement> values(const std::vector<int>& idx) const
    {
        std::vector<GroupElement> out;
        for (int i : idx)
            out.push_back(value(v[i]));
        return out;
    }

    QVec combine_lambda(const std::vector<int>& idx, const QVec& mu) const
    {
        QVec out(c.size(), Q(0));
        for (size_t j = 0; j < idx.size(); ++j)
            if (sgn(mu[j]) != 0)
                for (size_t t = 0; t < c.size(); ++t)
                    out[t] += mu[j] * v[idx[j]][t];
        return out;
    }

    int pick(const std::vector<int>& idx, const QVec& mu, const std::vector<int>& allowed) const
    {
        int best = -1, best_level = -1;
        for (size_t j = 0; j < idx.size(); ++j) {
            if (sgn(mu[j]) == 0)
                continue;
            if (!allowed.empty() && std::find(allowed.begin(), allowed.end(), idx[j]) == allowed.end())
                continue;
            int l = level(v[idx[j]]);
            if (l > best_level) {
                best = idx[j];
                best_level = l;
            }
        }
        return best;
    }

    std::vector<long> rho() const
    {
        std::vector<long> F(dC.size() + 1, 0);
        for (const auto& lam : v) {
            int l = level(lam);
            size_t i = 0;
            while (i < dC.size() && dC[i] <= l)
                ++i;
            ++F[i];
        }
        std::reverse(F.begin(), F.end());
        return F;
    }

    std::vector<long> gmeasure() const
    {
        std::vector<long> F(dCB.size() + 1, 0);
        for (size_t i = 0; i < v.size(); ++i) {
            if (role[i] != Role::dprime)
                continue;
            int mu = reduce(amb, B, value(v[i])).mu;
            auto it = std::find(dCB.begin(), dCB.end(), mu);
            ++F[it == dCB.end() ? 0 : 1 + (it - dCB.begin())];
        }
        std::reverse(F.begin(), F.end());
        return F;
    }

    void p1()
    {
        size_t k = c.size();
        SpanHandle C = A.join(amb, c);
        for (int l : C.levels())
            if (!A.has_level(l))
                dC.push_back(l);
        SpanHandle CB = B.join(amb, c);
        for (int l : CB.levels())
            if (!B.has_level(l))
                dCB.push_back(l);
        for (int delta : dC) {
            QMat hi = lambda_subspace(amb, c, A, delta);
            QMat acc = lambda_subspace(amb, c, A, delta - 1);
            for (const auto& row : hi) {
                QMat trial = acc;
                trial.push_back(row);
                if (rank_of(trial, k) > rank_of(acc, k)) {
                    acc = trial;
                    tilde.push_back(row);
                }
            }
        }
        for (auto& e : complement_basis(tilde, k))
            v.push_back(e);
        role.assign(v.size(), Role::d);
    }

    bool descend(QVec& lam)
    {
        for (int guard = 0; guard < 4 * amb.nslots() + 4; ++guard) {
            GroupElement r = value(lam);
            int l = arch_class(amb, r).level;
            if (l == 0) {
                res.diagnostics.push_back("P2: a combination fell into span A");
                return false;
            }
            if (A.has_level(l))
                return true;
            int slot = amb.slot_of_level(l);
            QMat parts;
            std::vector<const QVec*> used;
            for (const auto& t : tilde)
                if (level(t) == l) {
                    parts.push_back(amb.slot_coords(value(t), slot));
                    used.push_back(&t);
                }
            QVec w;
            if (!solve_combination(parts, amb.slot_coords(r, slot), w)) {
                res.diagnostics.push_back("P2: graded lift does not cover a ramified class");
                return false;
            }
            for (size_t j = 0; j < used.size(); ++j)
                for (size_t t = 0; t < c.size(); ++t)
                    lam[t] -= w[j] * (*used[j])[t];
        }
        res.diagnostics.push_back("P2: descent did not terminate");
        return false;
    }

    void p2()
    {
        res.rho_trace.push_back({"P1", rho()});
        int cap = 8 * int(v.size() * (dC.size() + 1)) + 8;
        for (int it = 0; it < cap; ++it) {
            std::vector<int> idx(v.size());
            for (size_t i = 0; i < v.size(); ++i)
                idx[i] = int(i);
            QVec mu;
            int at = 0;
            bool found = jump_vector(amb, values(idx), A, [&](int s) { return s == 0 || !A.has_level(s); }, mu, at);
            if (!found)
                return;
            if (at == 0) {
                res.diagnostics.push_back("P2: basis is not free over A");
                return;
            }
            int t = pick(idx, mu, {});
            QVec e = combine_lambda(idx, mu);
            if (!descend(e))
                return;
            auto before = rho();
            QVec old = v[t];
            v[t] = e;
            auto after = rho();
            res.rho_trace.push_back({"P2", after});
            ++res.steps;
            if (!measure_less(after, before)) {
                res.diagnostics.push_back("P2: rho did not decrease");
                v[t] = old;
                return;
            }
        }
        res.diagnostics.push_back("P2: iteration cap reached");
    }

    std::map<int, std::vector<int>, std::greater<int>> groups_by_ga(bool only_d) const
    {
        std::map<int, std::vector<int>, std::greater<int>> g;
        for (size_t i = 0; i < v.size(); ++i) {
            if (only_d && role[i] != Role::d)
                continue;
            CutProfile p = cut_profile(amb, value(v[i]), A);
            if (p.member || p.ramified)
                continue;
            g[p.G.key].push_back(int(i));
        }
        return g;
    }

    void p3()
    {
        int cap = 4 * int(v.size() * (amb.nslots() + 1)) + 8;
        for (int it = 0; it < cap; ++it) {
            bool changed = false;
            for (const auto& [key, idx] : groups_by_ga(false)) {
                int t = (key + 1) / 2;
                QMat L = lambda_subspace(amb, values(idx), A, t - 1);
                if (L.empty())
                    continue;
                int term = pick(idx, L[0], {});
                v[term] = combine_lambda(idx, L[0]);
                ++res.steps;
                changed = true;
                break;
            }
            if (!changed)
                return;
        }
        res.diagnostics.push_back("P3: iteration cap reached");
    }

    void p4()
    {
        int cap = int(v.size()) + 2;
        for (int it = 0; it < cap; ++it) {
            bool changed = false;
            for (const auto& [key, idx] : groups_by_ga(true)) {
                QVec mu;
                int at = 0;
                if (!jump_vector(amb, values(idx), B, [&](int s) { return s == 0 || !B.has_level(s); }, mu, at))
                    continue;
                if (at == 0)
                    res.diagnostics.push_back("P4: a combination lies in span B, treated as delta 0");
                int term = pick(idx, mu, {});
                v[term] = combine_lambda(idx, mu);
                role[term] = Role::dprime;
                ++res.steps;
                changed = true;
                break;
            }
            if (!changed)
                return;
        }
        res.diagnostics.push_back("P4: iteration cap reached");
    }

    void p5()
    {
        res.g_trace.push_back({"P4", gmeasure()});
        int cap = 8 * int(v.size() * (dCB.size() + 1)) + 8;
        for (int it = 0; it < cap; ++it) {
            std::map<std::pair<int, int>, std::pair<std::vector<int>, std::vector<QVec>>> blocks;
            for (size_t i = 0; i < v.size(); ++i) {
                if (role[i] != Role::dprime)
                    continue;
                CutProfile pb = cut_profile(amb, value(v[i]), B);
                if (!pb.ramified)
                    continue;
                auto& blk = blocks[{pb.G.key, pb.delta}];
                blk.first.push_back(int(i));
            }
            for (const auto& t : tilde) {
                CutProfile pa = cut_profile(amb, value(t), A);
                CutProfile pb = cut_profile(amb, value(t), B);
                auto it2 = blocks.find({pb.G.key, pa.delta});
                if (it2 != blocks.end())
                    it2->second.second.push_back(t);
            }
            bool changed = false;
            for (auto& [key, blk] : blocks) {
                int delta = key.second;
                const auto& dp = blk.first;
                std::vector<GroupElement> xs = values(dp);
                for (const auto& t : blk.second)
                    xs.push_back(value(t));
                QMat L = lambda_subspace(amb, xs, B, delta - 1);
                const QVec* hit = nullptr;
                for (const auto& row : L) {
                    bool nz = false;
                    for (size_t j = 0; j < dp.size(); ++j)
                        nz = nz || sgn(row[j]) != 0;
                    if (nz) {
                        hit = &row;
                        break;
                    }
                }
                if (!hit)
                    continue;
                QVec mu(hit->begin(), hit->begin() + long(dp.size()));
                QVec e = combine_lambda(dp, mu);
                for (size_t j = 0; j < blk.second.size(); ++j)
                    for (size_t t = 0; t < c.size(); ++t)
                        e[t] += (*hit)[dp.size() + j] * blk.second[j][t];
                int term = pick(dp, mu, {});
                auto before = gmeasure();
                QVec old = v[term];
                v[term] = e;
                auto after = gmeasure();
                res.g_trace.push_back({"P5", after});
                ++res.steps;
                if (!measure_less(after, before)) {
                    res.diagnostics.push_back("P5: g did not decrease");
                    v[term] = old;
                    return;
                }
                changed = true;
                break;
            }
            if (!changed)
                return;
        }
        res.diagnostics.push_back("P5: iteration cap reached");
    }
};

NormalTerm make_term(const Ambient& amb, const std::vector<GroupElement>& c, const SpanHandle& A,
                     const SpanHandle& B, const QVec& lam)
{
    NormalTerm t;
    t.lambda = lam;
    GroupElement raw = amb.combine(c, lam);
    Reduction r = reduce(amb, A, raw);
    t.value = r.residue;
    t.translation = amb.scale(r.part, Q(-1));
    t.over_a = cut_profile(amb, t.value, A);
    t.over_b = cut_profile(amb, t.value, B);
    if (t.over_a.ramified)
        t.role = Role::dtilde;
    else if (!t.over_b.member && !t.over_b.ramified)
        t.role = Role::d;
    else
        t.role = Role::dprime;
    return t;
}

void sort_terms(NormalFormBasis& b)
{
    std::stable_sort(b.terms.begin(), b.terms.end(),
                     [](const NormalTerm& x, const NormalTerm& y) { return int(x.role) < int(y.role); });
}

}

NormalFormBasis enumerate_basis(const Ambient& amb, const std::vector<GroupElement>& c, const SpanHandle& A,
                                const SpanHandle& B)
{
    NormalFormBasis b;
    for (size_t i = 0; i < c.size(); ++i) {
        QVec lam(c.size(), Q(0));
        lam[i] = 1;
        b.terms.push_back(make_term(amb, c, A, B, lam));
    }
    return b;
}

NormalizeResult normalize(const Ambient& amb, const std::vector<GroupElement>& c, const SpanHandle& A,
                          const SpanHandle& B)
{
    if (!lambda_subspace(amb, c, A, 0).empty())
        throw UsageError("normalize: input is not free over A");
    Pipeline p{amb, c, A, B, {}, {}, {}, {}, {}, {}};
    p.p1();
    p.p2();
    p.p3();
    p.p4();
    p.p5();
    NormalizeResult out = std::move(p.res);
    for (const auto& t : p.v)
        out.basis.terms.push_back(make_term(amb, c, A, B, t));
    for (const auto& t : p.tilde)
        out.basis.terms.push_back(make_term(amb, c, A, B, t));
    sort_terms(out.basis);
    for (const auto& chk : check_normal_form(amb, out.basis, A, B))
        if (!chk.ok)
            out.diagnostics.push_back("normal form check failed: " + chk.name);
    return out;
}

std::vector<PropertyCheck> check_normal_form(const Ambient& amb, const NormalFormBasis& basis, const SpanHandle& A,
                                             const SpanHandle& B)
{
    std::vector<PropertyCheck> out;
    size_t n = basis.terms.size();
    auto expand = [&](const std::vector<int>& idx, const QVec& mu) {
        QVec full(n, Q(0));
        for (size_t j = 0; j < idx.size(); ++j)
            full[idx[j]] = mu[j];
        return full;
    };
    auto vals = [&](const std::vector<int>& idx) {
        std::vector<GroupElement> xs;
        for (int i : idx)
            xs.push_back(basis.terms[i].value);
        return xs;
    };
    std::vector<int> all, dd, dtil;
    for (size_t i = 0; i < n; ++i) {
        all.push_back(int(i));
        if (basis.terms[i].role == Role::dtilde)
            dtil.push_back(int(i));
        else
            dd.push_back(int(i));
    }

    PropertyCheck free{"free_over_B", true, {}};
    QMat L = lambda_subspace(amb, vals(all), B, 0);
    if (!L.empty()) {
        free.ok = false;
        free.counterexample = L[0];
    }
    out.push_back(free);

    PropertyCheck p1{"P1", true, {}};
    std::map<std::pair<int, int>, std::vector<int>> tblocks;
    for (int i : dtil)
        tblocks[{basis.terms[i].over_b.G.key, basis.terms[i].over_a.delta}].push_back(i);
    for (const auto& [key, idx] : tblocks) {
        int slot = amb.slot_of_level(key.second);
        QMat rows;
        for (int i : idx)
            rows.push_back(amb.slot_coords(basis.terms[i].value, slot));
        bool bad = false;
        for (int i : idx)
            bad = bad || arch_class(amb, basis.terms[i].value).level > key.second;
        QMat ns;
        if (!rows.empty()) {
            QMat cols(rows[0].size(), QVec(rows.size()));
            for (size_t a = 0; a < rows.size(); ++a)
                for (size_t b = 0; b < rows[0].size(); ++b)
                    cols[b][a] = rows[a][b];
            ns = nullspace(cols, rows.size());
        }
        if (bad || !ns.empty()) {
            p1.ok = false;
            p1.counterexample = ns.empty() ? QVec(n, Q(0)) : expand(idx, ns[0]);
            break;
        }
    }
    out.push_back(p1);

    PropertyCheck p2{"P2", true, {}};
    QVec mu;
    int at = 0;
    if (jump_vector(amb, vals(dd), A, [&](int s) { return s == 0 || !A.has_level(s); }, mu, at)) {
        p2.ok = false;
        p2.counterexample = expand(dd, mu);
    }
    out.push_back(p2);

    PropertyCheck p3{"P3", true, {}};
    std::map<int, std::vector<int>> ga;
    for (int i : dd)
        if (!basis.terms[i].over_a.ramified && !basis.terms[i].over_a.member)
            ga[basis.terms[i].over_a.G.key].push_back(i);
    for (const auto& [key, idx] : ga) {
        QMat K = lambda_subspace(amb, vals(idx), A, (key + 1) / 2 - 1);
        if (!K.empty()) {
            p3.ok = false;
            p3.counterexample = expand(idx, K[0]);
            break;
        }
    }
    out.push_back(p3);

    PropertyCheck p4{"P4", true, {}};
    std::map<int, std::vector<int>> gb;
    for (int i : dd)
        if (basis.terms[i].role == Role::d)
            gb[basis.terms[i].over_b.G.key].push_back(i);
    for (const auto& [key, idx] : gb) {
        if (jump_vector(amb, vals(idx), B, [&](int s) { return s == 0 || !B.has_level(s); }, mu, at)) {
            p4.ok = false;
            p4.counterexample = expand(idx, mu);
            break;
        }
    }
    out.push_back(p4);

    PropertyCheck p5{"P5", true, {}};
    std::map<std::pair<int, int>, std::vector<int>> rb;
    for (int i : dd)
        if (basis.terms[i].role == Role::dprime)
            rb[{basis.terms[i].over_b.G.key, basis.terms[i].over_b.mu}].push_back(i);
    for (const auto& [key, idx] : rb) {
        std::vector<int> blk = idx;
        for (int i : dtil)
            if (basis.terms[i].over_b.G.key == key.first && basis.terms[i].over_a.delta == key.second)
                blk.push_back(i);
        int delta = key.second;
        bool bad = delta == 0 || B.has_level(delta);
        for (int i : blk)
            bad = bad || reduce(amb, B, basis.terms[i].value).mu > delta;
        QMat K = delta > 0 ? lambda_subspace(amb, vals(blk), B, delta - 1) : QMat{};
        if (bad || !K.empty()) {
            p5.ok = false;
            p5.counterexample = K.empty() ? expand(blk, QVec(blk.size(), Q(1))) : expand(blk, K[0]);
            break;
        }
    }
    out.push_back(p5);
    return out;
}

}
