#include "oag/congruence.hpp"

#include "oag/linalg.hpp"

#include <algorithm>
#include <climits>

namespace oag {

const PrimeSpec& CongruenceSpec::prime(long l) const
{
    for (const auto& p : primes)
        if (p.l == l)
            return p;
    throw ConfigError("prime " + std::to_string(l) + " is not declared");
}

Z ipow(long l, int n)
{
    Z r;
    mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)l, (unsigned long)std::max(n, 0));
    return r;
}

static Z fdiv(const Z& a, const Z& b)
{
    Z q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

static Z fmod(const Z& a, const Z& b)
{
    Z r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

static ZMat identity(size_t n)
{
    ZMat I(n, ZVec(n, Z(0)));
    for (size_t i = 0; i < n; ++i)
        I[i][i] = 1;
    return I;
}

ZMat mat_mul(const ZMat& a, const ZMat& b)
{
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    ZMat r(n, ZVec(m, Z(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (size_t j = 0; j < m; ++j)
                    r[i][j] += a[i][t] * b[t][j];
    return r;
}

ZMat columns_to_matrix(const std::vector<ZVec>& cols, size_t m)
{
    ZMat M(m, ZVec(cols.size(), Z(0)));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < m && i < cols[j].size(); ++i)
            M[i][j] = cols[j][i];
    return M;
}

static ZMat row_hnf(ZMat H)
{
    size_t rows = H.size(), cols = rows ? H[0].size() : 0, row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        while (true) {
            size_t best = rows;
            for (size_t i = row; i < rows; ++i)
                if (H[i][col] != 0 && (best == rows || abs(H[i][col]) < abs(H[best][col])))
                    best = i;
            if (best == rows)
                break;
            std::swap(H[row], H[best]);
            bool clean = true;
            for (size_t i = row + 1; i < rows; ++i) {
                if (H[i][col] == 0)
                    continue;
                Z q = fdiv(H[i][col], H[row][col]);
                for (size_t j = 0; j < cols; ++j)
                    H[i][j] -= q * H[row][j];
                clean = clean && H[i][col] == 0;
            }
            if (clean)
                break;
        }
        if (H[row][col] == 0)
            continue;
        if (H[row][col] < 0)
            for (auto& e : H[row])
                e = -e;
        for (size_t i = 0; i < row; ++i) {
            Z q = fdiv(H[i][col], H[row][col]);
            if (q != 0)
                for (size_t j = 0; j < cols; ++j)
                    H[i][j] -= q * H[row][j];
        }
        ++row;
    }
    return H;
}

HermiteSmith hermite_smith(const ZMat& mat)
{
    HermiteSmith hs;
    size_t m = mat.size(), n = m ? mat[0].size() : 0;
    hs.hnf = row_hnf(mat);
    ZMat D = mat;
    ZMat U = identity(m), V = identity(n);
    auto row_sub = [&](size_t i, size_t t, const Z& q) {
        for (size_t j = 0; j < n; ++j)
            D[i][j] -= q * D[t][j];
        for (size_t j = 0; j < m; ++j)
            U[i][j] -= q * U[t][j];
    };
    auto col_sub = [&](size_t j, size_t t, const Z& q) {
        for (size_t i = 0; i < m; ++i)
            D[i][j] -= q * D[i][t];
        for (size_t i = 0; i < n; ++i)
            V[i][j] -= q * V[i][t];
    };
    auto swap_rows = [&](size_t a, size_t b) {
        std::swap(D[a], D[b]);
        std::swap(U[a], U[b]);
    };
    auto swap_cols = [&](size_t a, size_t b) {
        for (auto& r : D)
            std::swap(r[a], r[b]);
        for (auto& r : V)
            std::swap(r[a], r[b]);
    };
    size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        size_t pi = m, pj = n;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j)
                if (D[i][j] != 0 && (pi == m || abs(D[i][j]) < abs(D[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == m)
            break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        while (true) {
            bool clean = true;
            for (size_t i = t + 1; i < m; ++i)
                if (D[i][t] != 0) {
                    row_sub(i, t, fdiv(D[i][t], D[t][t]));
                    clean = clean && D[i][t] == 0;
                }
            for (size_t j = t + 1; j < n; ++j)
                if (D[t][j] != 0) {
                    col_sub(j, t, fdiv(D[t][j], D[t][t]));
                    clean = clean && D[t][j] == 0;
                }
            if (!clean) {
                size_t bi = t, bj = t;
                for (size_t i = t + 1; i < m; ++i)
                    if (D[i][t] != 0 && abs(D[i][t]) < abs(D[bi][bj])) {
                        bi = i;
                        bj = t;
                    }
                for (size_t j = t + 1; j < n; ++j)
                    if (D[t][j] != 0 && abs(D[t][j]) < abs(D[bi][bj])) {
                        bi = t;
                        bj = j;
                    }
                swap_rows(t, bi);
                swap_cols(t, bj);
                continue;
            }
            bool found = false;
            for (size_t i = t + 1; i < m && !found; ++i)
                for (size_t j = t + 1; j < n && !found; ++j)
                    if (fmod(D[i][j], D[t][t]) != 0) {
                        row_sub(t, i, Z(-1));
                        found = true;
                    }
            if (!found)
                break;
        }
        if (D[t][t] < 0) {
            for (auto& e : D[t])
                e = -e;
            for (auto& e : U[t])
                e = -e;
        }
        hs.divisors.push_back(D[t][t]);
    }
    hs.rank = int(t);
    hs.snf = D;
    hs.U = U;
    hs.V = V;
    return hs;
}

bool integer_solve(const ZMat& M, const ZVec& x, ZVec* z)
{
    size_t m = M.size();
    if (m == 0)
        return true;
    size_t n = M[0].size();
    HermiteSmith hs = hermite_smith(M);
    ZVec ux(m, Z(0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            ux[i] += hs.U[i][j] * x[j];
    ZVec y(n, Z(0));
    for (size_t i = 0; i < m; ++i) {
        if (int(i) < hs.rank) {
            if (fmod(ux[i], hs.divisors[i]) != 0)
                return false;
            y[i] = ux[i] / hs.divisors[i];
        } else if (ux[i] != 0) {
            return false;
        }
    }
    if (z) {
        z->assign(n, Z(0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                (*z)[i] += hs.V[i][j] * y[j];
    }
    return true;
}

std::vector<ZVec> integer_kernel(const ZMat& M)
{
    if (M.empty())
        return {};
    size_t n = M[0].size();
    HermiteSmith hs = hermite_smith(M);
    std::vector<ZVec> out;
    for (size_t j = size_t(hs.rank); j < n; ++j) {
        ZVec v(n);
        for (size_t i = 0; i < n; ++i)
            v[i] = hs.V[i][j];
        out.push_back(v);
    }
    return out;
}

std::vector<ZVec> saturate_special(const std::vector<ZVec>& gens, size_t m, const std::optional<ZVec>& unit)
{
    std::vector<ZVec> all = gens;
    if (unit)
        all.push_back(*unit);
    if (all.empty() || m == 0)
        return {};
    HermiteSmith hs = hermite_smith(columns_to_matrix(all, m));
    QMat Uq(m, QVec(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            Uq[i][j] = Q(hs.U[i][j]);
    QMat Ui = mat_inverse(Uq);
    ZMat rows;
    for (int j = 0; j < hs.rank; ++j) {
        ZVec v(m);
        for (size_t i = 0; i < m; ++i)
            v[i] = Ui[i][j].get_num();
        rows.push_back(v);
    }
    ZMat H = row_hnf(rows);
    std::vector<ZVec> out;
    for (auto& r : H) {
        bool nz = false;
        for (const auto& e : r)
            nz = nz || e != 0;
        if (nz)
            out.push_back(r);
    }
    return out;
}

static size_t dim_of(const std::vector<ZVec>& S, const ZVec& x) { return S.empty() ? x.size() : S[0].size(); }

bool member_mod_lN(const ZVec& x, const std::vector<ZVec>& S, long l, int N)
{
    size_t m = dim_of(S, x);
    Z mod = ipow(l, N);
    std::vector<ZVec> cols = S;
    for (size_t i = 0; i < m; ++i) {
        ZVec e(m, Z(0));
        e[i] = mod;
        cols.push_back(e);
    }
    return integer_solve(columns_to_matrix(cols, m), x);
}

int lvaluation(const Z& v, long l)
{
    if (v == 0)
        return INT_MAX;
    Z t = abs(v);
    int k = 0;
    while (fmod(t, Z(l)) == 0) {
        t /= l;
        ++k;
    }
    return k;
}

int stabilization_bound(long l, const std::vector<std::vector<ZVec>>& families, size_t m)
{
    int best = 0;
    for (const auto& f : families) {
        if (f.empty())
            continue;
        HermiteSmith hs = hermite_smith(columns_to_matrix(f, m));
        for (const auto& d : hs.divisors)
            best = std::max(best, lvaluation(d, l));
    }
    return best + 1;
}

static std::vector<ZVec> cat(std::initializer_list<const std::vector<ZVec>*> parts)
{
    std::vector<ZVec> out;
    for (const auto* p : parts)
        out.insert(out.end(), p->begin(), p->end());
    return out;
}

static void reduce_mod(ZVec& v, const Z& mod)
{
    for (auto& e : v)
        e = fmod(e, mod);
}

bool infinite_index_at(const std::vector<ZVec>& C, const std::vector<ZVec>& Ap, const std::vector<ZVec>& Bp, long l,
                       size_t m, int N, ZVec* witness, ZVec* coeffs)
{
    if (C.empty() || m == 0)
        return true;
    Z mod = ipow(l, N);
    std::vector<ZVec> cols = C;
    for (size_t i = 0; i < m; ++i) {
        ZVec e(m, Z(0));
        e[i] = mod;
        cols.push_back(e);
    }
    size_t n1 = cols.size();
    for (const auto& b : Bp) {
        ZVec nb = b;
        for (auto& e : nb)
            e = -e;
        cols.push_back(nb);
    }
    for (size_t i = 0; i < m; ++i) {
        ZVec e(m, Z(0));
        e[i] = -mod;
        cols.push_back(e);
    }
    for (const auto& k : integer_kernel(columns_to_matrix(cols, m))) {
        ZVec x(m, Z(0));
        for (size_t j = 0; j < n1; ++j)
            if (k[j] != 0)
                for (size_t i = 0; i < m; ++i)
                    x[i] += k[j] * cols[j][i];
        if (member_mod_lN(x, Ap, l, N))
            continue;
        if (witness) {
            *witness = x;
            reduce_mod(*witness, mod);
        }
        if (coeffs) {
            coeffs->assign(k.begin(), k.begin() + long(C.size()));
            reduce_mod(*coeffs, mod);
        }
        return false;
    }
    return true;
}

ConditionResult infinite_index_condition(const std::vector<ZVec>& C, const std::vector<ZVec>& Ap,
                                         const std::vector<ZVec>& Bp, long l, size_t m, int nmax)
{
    ConditionResult r;
    r.bound = nmax > 0 ? nmax
                       : stabilization_bound(l, {C, Ap, Bp, cat({&Ap, &C}), cat({&Bp, &C}), cat({&Ap, &Bp, &C})}, m);
    for (int N = 1; N <= r.bound; ++N)
        if (!infinite_index_at(C, Ap, Bp, l, m, N, &r.witness, &r.coefficients)) {
            r.holds = false;
            r.n = N;
            return r;
        }
    return r;
}

bool finite_index_at(const std::vector<ZVec>& C, const std::vector<ZVec>& Ap, long l, int N)
{
    for (const auto& c : C)
        if (!member_mod_lN(c, Ap, l, N))
            return false;
    return true;
}

ConditionResult finite_index_condition(const std::vector<ZVec>& C, const std::vector<ZVec>& Ap, long l, size_t m,
                                       int nmax)
{
    ConditionResult r;
    r.bound = nmax > 0 ? nmax : stabilization_bound(l, {C, Ap, cat({&Ap, &C})}, m);
    for (int N = 1; N <= r.bound; ++N)
        for (size_t i = 0; i < C.size(); ++i)
            if (!member_mod_lN(C[i], Ap, l, N)) {
                r.holds = false;
                r.n = N;
                r.witness = C[i];
                reduce_mod(r.witness, ipow(l, N));
                r.coefficients.assign(C.size(), Z(0));
                r.coefficients[i] = 1;
                return r;
            }
    return r;
}

bool ltype_equal_at(const ZVec& x, const ZVec& y, const std::vector<ZVec>& S, long l, int N)
{
    Z mod = ipow(l, N);
    for (int v = 0; v < N; ++v) {
        Z lv = ipow(l, v);
        bool same = true;
        for (size_t i = 0; i < x.size(); ++i)
            same = same && fmod(lv * (x[i] - y[i]), mod) == 0;
        if (same)
            continue;
        ZVec sx = x, sy = y;
        for (auto& e : sx)
            e *= lv;
        for (auto& e : sy)
            e *= lv;
        if (member_mod_lN(sx, S, l, N) || member_mod_lN(sy, S, l, N))
            return false;
    }
    return true;
}

bool ltype_equal(const ZVec& x, const ZVec& y, const std::vector<ZVec>& S, long l, size_t m, int nmax)
{
    ZVec diff(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        diff[i] = x[i] - y[i];
    std::vector<ZVec> sx = S, sy = S, sd = S;
    sx.push_back(x);
    sy.push_back(y);
    sd.push_back(diff);
    if (x == y)
        return true;
    int depth = -1;
    for (const auto& d : diff)
        if (d != 0)
            depth = depth < 0 ? lvaluation(d, l) : std::min(depth, lvaluation(d, l));
    int bound = nmax > 0 ? nmax : stabilization_bound(l, {S, sx, sy, sd}, m) + depth;
    for (int N = 1; N <= bound; ++N)
        if (!ltype_equal_at(x, y, S, l, N))
            return false;
    return true;
}

ZVec crt_realize(const std::vector<CrtTarget>& targets, size_t m)
{
    ZVec out(m, Z(0));
    std::map<long, std::pair<int, ZVec>> by_prime;
    for (const auto& t : targets) {
        if (t.residue.size() != m)
            throw InfeasibleError("crt_realize: residue length mismatch");
        auto it = by_prime.find(t.l);
        if (it == by_prime.end()) {
            by_prime[t.l] = {t.n, t.residue};
            continue;
        }
        int lo = std::min(it->second.first, t.n);
        Z mod = ipow(t.l, lo);
        for (size_t i = 0; i < m; ++i)
            if (fmod(it->second.second[i] - t.residue[i], mod) != 0)
                throw InfeasibleError("crt_realize: contradictory targets at prime " + std::to_string(t.l));
        if (t.n > it->second.first)
            it->second = {t.n, t.residue};
    }
    for (size_t i = 0; i < m; ++i) {
        Z x = 0, M = 1;
        for (const auto& [l, nr] : by_prime) {
            Z mod = ipow(l, nr.first);
            Z r = fmod(nr.second[i], mod);
            Z inv;
            Z Mm = fmod(M, mod);
            mpz_invert(inv.get_mpz_t(), Mm.get_mpz_t(), mod.get_mpz_t());
            Z k = fmod((r - x) * inv, mod);
            x += M * k;
            M *= mod;
        }
        out[i] = fmod(x, M);
    }
    return out;
}

}
