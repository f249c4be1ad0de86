#pragma once

#include "oag/goldens.hpp"
#include "oag/report.hpp"
#include "oag/scene_io.hpp"

#include <mpfr.h>

#include <functional>
#include <random>

namespace support {

using namespace oag;

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen); }
    Q rational(int height, int den = 1)
    {
        Q q(uniform(-height, height), uniform(1, den));
        q.canonicalize();
        return q;
    }
};

inline Ambient random_ambient(Rng& r, int max_slots = 3, bool allow_sqrt2 = true)
{
    bool quad = allow_sqrt2 && r.coin();
    FieldSpec F = quad ? field_sqrt2() : FieldSpec::rationals();
    int S = r.uniform(1, max_slots);
    std::vector<Slot> slots;
    for (int s = 0; s < S; ++s) {
        Slot sl{"s" + std::to_string(s), {F.one()}};
        if (quad && r.coin(0.6))
            sl.gens.push_back(F.theta());
        slots.push_back(sl);
    }
    return Ambient(F, SceneKind::dense, slots);
}

inline GroupElement random_element(const Ambient& amb, Rng& r, int height, double density = 0.6)
{
    GroupElement x = amb.zero();
    for (auto& q : x.v)
        if (r.coin(density))
            q = r.uniform(-height, height);
    return x;
}

inline std::vector<GroupElement> random_tuple(const Ambient& amb, Rng& r, int n, int height)
{
    std::vector<GroupElement> out;
    for (int i = 0; i < n; ++i)
        out.push_back(random_element(amb, r, height));
    return out;
}

struct RandomScene {
    Ambient amb;
    std::vector<GroupElement> A, B, c;
};

inline RandomScene random_scene(Rng& r, int height = 4, int max_tuple = 3)
{
    RandomScene rs;
    rs.amb = random_ambient(r);
    rs.A = random_tuple(rs.amb, r, r.uniform(0, 2), height);
    rs.B = rs.A;
    auto more = random_tuple(rs.amb, r, r.uniform(0, 2), height);
    rs.B.insert(rs.B.end(), more.begin(), more.end());
    rs.c = random_tuple(rs.amb, r, r.uniform(1, max_tuple), height);
    return rs;
}

// Members share an irrational leading part, so their differences are ramified over A.
inline RandomScene shared_lead_scene(Rng& r)
{
    RandomScene rs;
    FieldSpec F = field_sqrt2();
    int S = r.uniform(2, 3);
    std::vector<Slot> slots;
    for (int s = 0; s < S; ++s) {
        Slot sl{"s" + std::to_string(s), {F.one()}};
        if (s == 0 || r.coin())
            sl.gens.push_back(F.theta());
        slots.push_back(sl);
    }
    rs.amb = Ambient(F, SceneKind::dense, slots);
    GroupElement a = rs.amb.zero();
    a.v[0] = 1;
    rs.A = {a};
    if (r.coin())
        rs.A.push_back(random_element(rs.amb, r, 3, 0.5));
    rs.B = rs.A;
    auto more = random_tuple(rs.amb, r, r.uniform(0, 2), 3);
    rs.B.insert(rs.B.end(), more.begin(), more.end());
    GroupElement lead = rs.amb.zero();
    lead.v[1] = 1;
    int n = r.uniform(2, 3);
    for (int i = 0; i < n; ++i) {
        GroupElement low = random_element(rs.amb, r, 3, 0.6);
        low.v[0] = 0;
        low.v[1] = 0;
        rs.c.push_back(rs.amb.add(rs.amb.scale(lead, Q(r.uniform(1, 3))), low));
    }
    return rs;
}

inline std::vector<GroupElement> free_over(const Ambient& amb, const SpanHandle& A, const std::vector<GroupElement>& c)
{
    std::vector<GroupElement> out;
    SpanHandle acc = A;
    for (const auto& x : c)
        if (!span_query(amb, acc, x).member) {
            out.push_back(x);
            acc = acc.join(amb, {x});
        }
    return out;
}

// ---- polyhedral oracle: vertex enumeration of the closure inside a box, then face centroids ----

using FVec = std::vector<FieldElement>;

inline FieldElement eval_constraint(const FieldSpec& F, const Constraint& c, const FVec& x)
{
    FieldElement v = c.constant;
    for (size_t i = 0; i < x.size(); ++i)
        v = F.add(v, F.mul(c.coef[i], x[i]));
    return v;
}

inline bool solve_square(const FieldSpec& F, std::vector<FVec> m, FVec rhs, FVec& out)
{
    size_t n = rhs.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = n;
        for (size_t r = col; r < n; ++r)
            if (!F.is_zero(m[r][col])) {
                piv = r;
                break;
            }
        if (piv == n)
            return false;
        std::swap(m[col], m[piv]);
        std::swap(rhs[col], rhs[piv]);
        FieldElement inv = F.inv(m[col][col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || F.is_zero(m[r][col]))
                continue;
            FieldElement f = F.mul(m[r][col], inv);
            for (size_t j = col; j < n; ++j)
                m[r][j] = F.sub(m[r][j], F.mul(f, m[col][j]));
            rhs[r] = F.sub(rhs[r], F.mul(f, rhs[col]));
        }
    }
    out.resize(n);
    for (size_t i = 0; i < n; ++i)
        out[i] = F.mul(rhs[i], F.inv(m[i][i]));
    return true;
}

inline bool poly_feasible(const FieldSpec& F, std::vector<Constraint> cons, int nv, const Q& box = 10000,
                          FVec* witness = nullptr)
{
    for (auto& c : cons)
        c.coef.resize(nv, F.zero());
    if (nv == 0) {
        for (const auto& c : cons) {
            int s = F.sign(c.constant);
            if ((c.rel == Rel::lt && s >= 0) || (c.rel == Rel::le && s > 0) || (c.rel == Rel::eq && s != 0))
                return false;
        }
        return true;
    }
    for (int i = 0; i < nv; ++i)
        for (int sg : {1, -1}) {
            Constraint b;
            b.coef.assign(nv, F.zero());
            b.coef[i] = F.from_rational(Q(sg));
            b.constant = F.from_rational(-box);
            b.rel = Rel::le;
            cons.push_back(b);
        }
    size_t m = cons.size();
    auto closed_ok = [&](const FVec& x, unsigned long& tight) {
        tight = 0;
        for (size_t j = 0; j < m; ++j) {
            int s = F.sign(eval_constraint(F, cons[j], x));
            if (s > 0 || (cons[j].rel == Rel::eq && s != 0))
                return false;
            if (s == 0)
                tight |= 1ul << j;
        }
        return true;
    };
    std::vector<FVec> verts;
    std::vector<unsigned long> masks;
    std::vector<size_t> pick(nv);
    std::function<void(size_t, size_t)> rec = [&](size_t depth, size_t from) {
        if (depth == size_t(nv)) {
            std::vector<FVec> mat;
            FVec rhs;
            for (size_t j : pick) {
                mat.push_back(cons[j].coef);
                rhs.push_back(F.neg(cons[j].constant));
            }
            FVec x;
            unsigned long t;
            if (solve_square(F, mat, rhs, x) && closed_ok(x, t)) {
                for (const auto& v : verts)
                    if (v == x)
                        return;
                verts.push_back(x);
                masks.push_back(t);
            }
            return;
        }
        for (size_t j = from; j < m; ++j) {
            pick[depth] = j;
            rec(depth + 1, j + 1);
        }
    };
    rec(0, 0);
    if (verts.empty())
        return false;
    std::set<unsigned long> faces;
    for (size_t a = 0; a < verts.size(); ++a)
        faces.insert(masks[a]);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<unsigned long> cur(faces.begin(), faces.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j)
                if (faces.insert(cur[i] & cur[j]).second)
                    grew = true;
    }
    for (unsigned long T : faces) {
        FVec cen(nv, F.zero());
        int k = 0;
        for (size_t a = 0; a < verts.size(); ++a)
            if ((masks[a] & T) == T) {
                for (int i = 0; i < nv; ++i)
                    cen[i] = F.add(cen[i], verts[a][i]);
                ++k;
            }
        for (auto& e : cen)
            e = F.scale(e, Q(1, k));
        bool ok = true;
        for (const auto& c : cons) {
            int s = F.sign(eval_constraint(F, c, cen));
            if ((c.rel == Rel::lt && s >= 0) || (c.rel == Rel::le && s > 0) || (c.rel == Rel::eq && s != 0)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            if (witness)
                *witness = cen;
            return true;
        }
    }
    return false;
}

// ---- lex oracle: independent slot-by-slot expansion into polyhedral branches ----

inline Constraint slot_value_constraint(const Ambient& amb, const LinearForm& f, int slot, int nv, Rel rel)
{
    const FieldSpec& F = amb.field();
    Constraint c;
    c.coef.assign(nv, F.zero());
    c.constant = amb.slot_value(f.constant, slot);
    for (const auto& [v, g] : f.terms)
        c.coef[v] = F.add(c.coef[v], amb.slot_value(g, slot));
    c.rel = rel;
    return c;
}

inline std::vector<Constraint> slot_coords_zero(const Ambient& amb, const LinearForm& f, int slot, int nv)
{
    const FieldSpec& F = amb.field();
    std::vector<Constraint> out;
    for (size_t j = 0; j < amb.width(slot); ++j) {
        Constraint c;
        c.coef.assign(nv, F.zero());
        size_t k = amb.offset(slot) + j;
        c.constant = F.from_rational(f.constant.v[k]);
        for (const auto& [v, g] : f.terms)
            c.coef[v] = F.add(c.coef[v], F.from_rational(g.v[k]));
        c.rel = Rel::eq;
        out.push_back(c);
    }
    return out;
}

inline std::vector<std::vector<Constraint>> atom_branches(const Ambient& amb, const Atom& a, int nv)
{
    std::vector<std::vector<Constraint>> out;
    std::vector<Constraint> prefix;
    for (int s = 0; s < amb.nslots(); ++s) {
        if (a.rel != Rel::eq) {
            auto br = prefix;
            br.push_back(slot_value_constraint(amb, a.form, s, nv, Rel::lt));
            out.push_back(br);
        }
        auto z = slot_coords_zero(amb, a.form, s, nv);
        prefix.insert(prefix.end(), z.begin(), z.end());
    }
    if (a.rel != Rel::lt)
        out.push_back(prefix);
    return out;
}

inline bool lex_oracle(const Ambient& amb, const std::vector<Atom>& atoms, int nv)
{
    std::vector<std::vector<std::vector<Constraint>>> br;
    for (const auto& a : atoms)
        br.push_back(atom_branches(amb, a, nv));
    std::vector<Constraint> cur;
    std::function<bool(size_t)> rec = [&](size_t i) {
        if (i == br.size())
            return poly_feasible(amb.field(), cur, nv);
        for (const auto& b : br[i]) {
            size_t before = cur.size();
            cur.insert(cur.end(), b.begin(), b.end());
            bool ok = rec(i + 1);
            cur.resize(before);
            if (ok)
                return true;
        }
        return false;
    };
    return rec(0);
}

inline bool atom_holds(const Ambient& amb, const Atom& a, const QVec& x)
{
    int s = sign_of(amb, a.form.eval(x, amb));
    return a.rel == Rel::lt ? s < 0 : a.rel == Rel::le ? s <= 0 : s == 0;
}

// ---- separatedness oracle: bounded-height combination search ----

inline std::optional<BlockKey> key_of(const Ambient& amb, const GroupElement& x, const SpanHandle& D, int level)
{
    CutProfile p = cut_profile(amb, x, D);
    if (p.member)
        return std::nullopt;
    return val_key(p, level);
}

inline bool separated_oracle(const Ambient& amb, const std::vector<GroupElement>& c, const SpanHandle& D, int level,
                             int height = 6)
{
    size_t n = c.size();
    std::vector<std::optional<BlockKey>> keys;
    for (const auto& x : c) {
        keys.push_back(key_of(amb, x, D, level));
        if (!keys.back())
            return false;
    }
    std::vector<int> lam(n, -height);
    while (true) {
        bool nz = false;
        std::optional<BlockKey> mx;
        for (size_t i = 0; i < n; ++i)
            if (lam[i] != 0) {
                nz = true;
                if (!mx || *mx < *keys[i])
                    mx = keys[i];
            }
        if (nz) {
            QVec q(n);
            for (size_t i = 0; i < n; ++i)
                q[i] = lam[i];
            auto k = key_of(amb, amb.combine(c, q), D, level);
            if (!k || !(*k == *mx))
                return false;
        }
        size_t i = 0;
        while (i < n && lam[i] == height)
            lam[i++] = -height;
        if (i == n)
            break;
        ++lam[i];
    }
    return true;
}

// ---- congruence oracle: explicit subgroups of (Z/l^N)^k ----

struct ModSpace {
    long mod = 1;
    int k = 0;
    size_t size = 1;
    ModSpace(long l, int N, int k_) : k(k_)
    {
        for (int i = 0; i < N; ++i)
            mod *= l;
        for (int i = 0; i < k; ++i)
            size *= size_t(mod);
    }
    size_t encode(const ZVec& x) const
    {
        size_t code = 0;
        for (int i = k - 1; i >= 0; --i) {
            Z r;
            mpz_fdiv_r_ui(r.get_mpz_t(), x[i].get_mpz_t(), (unsigned long)mod);
            code = code * size_t(mod) + r.get_ui();
        }
        return code;
    }
    ZVec decode(size_t code) const
    {
        ZVec x(k);
        for (int i = 0; i < k; ++i) {
            x[i] = long(code % size_t(mod));
            code /= size_t(mod);
        }
        return x;
    }
    size_t add(size_t a, size_t b) const
    {
        size_t out = 0, mul = 1;
        for (int i = 0; i < k; ++i) {
            size_t d = (a % size_t(mod) + b % size_t(mod)) % size_t(mod);
            out += d * mul;
            mul *= size_t(mod);
            a /= size_t(mod);
            b /= size_t(mod);
        }
        return out;
    }
    std::vector<char> subgroup(const std::vector<ZVec>& gens) const
    {
        std::vector<char> in(size, 0);
        std::vector<size_t> queue{0}, g;
        in[0] = 1;
        for (const auto& x : gens)
            g.push_back(encode(x));
        for (size_t h = 0; h < queue.size(); ++h)
            for (size_t s : g) {
                size_t y = add(queue[h], s);
                if (!in[y]) {
                    in[y] = 1;
                    queue.push_back(y);
                }
            }
        return in;
    }
};

inline ZVec scaled(const ZVec& x, const Z& f)
{
    ZVec y = x;
    for (auto& e : y)
        e *= f;
    return y;
}

inline bool oracle_member(const ZVec& x, const std::vector<ZVec>& S, long l, int N)
{
    ModSpace sp(l, N, int(x.size()));
    return sp.subgroup(S)[sp.encode(x)];
}

inline bool oracle_infinite_at(const std::vector<ZVec>& C, const std::vector<ZVec>& Ap, const std::vector<ZVec>& Bp,
                               long l, int N, int k)
{
    ModSpace sp(l, N, k);
    auto c = sp.subgroup(C), a = sp.subgroup(Ap), b = sp.subgroup(Bp);
    for (size_t i = 0; i < sp.size; ++i)
        if (c[i] && b[i] && !a[i])
            return false;
    return true;
}

inline bool oracle_finite_at(const std::vector<ZVec>& C, const std::vector<ZVec>& Ap, long l, int N, int k)
{
    ModSpace sp(l, N, k);
    auto a = sp.subgroup(Ap);
    for (const auto& x : C)
        if (!a[sp.encode(x)])
            return false;
    return true;
}

// Unary l-type equality from the definition: for every f mod l^N and s in S, f x = s iff f y = s.
inline bool oracle_ltype_at(const ZVec& x, const ZVec& y, const std::vector<ZVec>& S, long l, int N)
{
    ModSpace sp(l, N, int(x.size()));
    auto s = sp.subgroup(S);
    for (long f = 0; f < sp.mod; ++f) {
        size_t fx = sp.encode(scaled(x, f)), fy = sp.encode(scaled(y, f));
        if (s[fx] != s[fy])
            return false;
        if (s[fx] && fx != fy)
            return false;
    }
    return true;
}

inline std::vector<ZVec> random_lattice(Rng& r, int k, int count, int height)
{
    std::vector<ZVec> out;
    for (int i = 0; i < count; ++i) {
        ZVec v(k);
        for (auto& e : v)
            e = r.uniform(-height, height);
        out.push_back(v);
    }
    return out;
}

// ---- high-precision numeric evaluation of field elements ----

struct Mpfr {
    mpfr_t v;
    explicit Mpfr(mpfr_prec_t p) { mpfr_init2(v, p); }
    ~Mpfr() { mpfr_clear(v); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
};

inline void set_q(mpfr_t out, const Q& q) { mpfr_set_q(out, q.get_mpq_t(), MPFR_RNDN); }

inline void eval_poly(mpfr_t out, const QVec& p, const mpfr_t x, mpfr_prec_t prec)
{
    Mpfr c(prec);
    mpfr_set_ui(out, 0, MPFR_RNDN);
    for (int i = int(p.size()) - 1; i >= 0; --i) {
        mpfr_mul(out, out, x, MPFR_RNDN);
        set_q(c.v, p[i]);
        mpfr_add(out, out, c.v, MPFR_RNDN);
    }
}

// Returns the sign of e(theta) at 200 bits, or 2 when the magnitude is below 1e-45.
inline int numeric_sign(const FieldSpec& F, const FieldElement& e)
{
    const mpfr_prec_t prec = 200;
    Mpfr lo(prec), hi(prec), mid(prec), flo(prec), fm(prec), val(prec), tiny(prec);
    set_q(lo.v, F.given_lo());
    set_q(hi.v, F.given_hi());
    eval_poly(flo.v, F.minpoly(), lo.v, prec);
    for (int it = 0; it < 260; ++it) {
        mpfr_add(mid.v, lo.v, hi.v, MPFR_RNDN);
        mpfr_div_ui(mid.v, mid.v, 2, MPFR_RNDN);
        eval_poly(fm.v, F.minpoly(), mid.v, prec);
        if (mpfr_zero_p(fm.v)) {
            mpfr_set(lo.v, mid.v, MPFR_RNDN);
            break;
        }
        if (mpfr_sgn(fm.v) == mpfr_sgn(flo.v)) {
            mpfr_set(lo.v, mid.v, MPFR_RNDN);
            mpfr_set(flo.v, fm.v, MPFR_RNDN);
        } else {
            mpfr_set(hi.v, mid.v, MPFR_RNDN);
        }
    }
    eval_poly(val.v, e.c, lo.v, prec);
    mpfr_set_str(tiny.v, "1e-45", 10, MPFR_RNDN);
    if (mpfr_cmpabs(val.v, tiny.v) < 0)
        return 2;
    return mpfr_sgn(val.v) > 0 ? 1 : -1;
}

}
