#include "oag/linalg.hpp"

namespace oag {

Echelon rref(QMat rows, size_t ncols)
{
    Echelon e;
    size_t r = 0;
    for (size_t col = 0; col < ncols && r < rows.size(); ++col) {
        size_t p = r;
        while (p < rows.size() && sgn(rows[p][col]) == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[r], rows[p]);
        Q piv = rows[r][col];
        for (size_t j = col; j < ncols; ++j)
            rows[r][j] /= piv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][col]) == 0)
                continue;
            Q f = rows[i][col];
            for (size_t j = col; j < ncols; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        e.pivots.push_back(int(col));
        ++r;
    }
    rows.resize(r);
    e.rows = std::move(rows);
    return e;
}

int rank_of(const QMat& rows, size_t ncols) { return int(rref(rows, ncols).rows.size()); }

QMat nullspace(const QMat& mat, size_t ncols)
{
    Echelon e = rref(mat, ncols);
    std::vector<int> is_pivot(ncols, -1);
    for (size_t i = 0; i < e.pivots.size(); ++i)
        is_pivot[e.pivots[i]] = int(i);
    QMat basis;
    for (size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f] >= 0)
            continue;
        QVec v(ncols, Q(0));
        v[f] = 1;
        for (size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = -e.rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

QMat row_space_basis(const QMat& rows, size_t ncols) { return rref(rows, ncols).rows; }

bool reduce_against(const Echelon& e, QVec& v)
{
    for (size_t i = 0; i < e.pivots.size(); ++i) {
        int p = e.pivots[i];
        if (sgn(v[p]) == 0)
            continue;
        Q f = v[p];
        for (size_t j = 0; j < v.size(); ++j)
            v[j] -= f * e.rows[i][j];
    }
    return is_zero(v);
}

bool in_row_space(const Echelon& e, QVec v) { return reduce_against(e, v); }

bool solve_combination(const QMat& vecs, const QVec& target, QVec& coeffs)
{
    size_t k = vecs.size(), n = target.size();
    QMat aug(n, QVec(k + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k; ++j)
            aug[i][j] = vecs[j][i];
        aug[i][k] = target[i];
    }
    Echelon e = rref(aug, k + 1);
    coeffs.assign(k, Q(0));
    for (size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == int(k))
            return false;
        coeffs[e.pivots[i]] = e.rows[i][k];
    }
    return true;
}

QMat complement_basis(const QMat& sub, size_t n)
{
    Echelon e = rref(sub, n);
    QMat out;
    for (size_t i = 0; i < n; ++i) {
        QVec v(n, Q(0));
        v[i] = 1;
        QMat trial = e.rows;
        trial.push_back(v);
        Echelon t = rref(trial, n);
        if (t.rows.size() > e.rows.size()) {
            out.push_back(v);
            e = std::move(t);
        }
    }
    return out;
}

QMat mat_inverse(const QMat& m)
{
    size_t n = m.size();
    QMat aug(n, QVec(2 * n, Q(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    Echelon e = rref(aug, 2 * n);
    if (e.rows.size() < n || e.pivots[n - 1] != int(n - 1))
        throw std::domain_error("matrix is singular");
    QMat inv(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            inv[i][j] = e.rows[i][n + j];
    return inv;
}

QVec mat_vec(const QMat& m, const QVec& v)
{
    QVec r(m.size(), Q(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            r[i] += m[i][j] * v[j];
    return r;
}

QVec vec_mat(const QVec& v, const QMat& m)
{
    size_t n = m.empty() ? 0 : m[0].size();
    QVec r(n, Q(0));
    for (size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0)
            for (size_t j = 0; j < n; ++j)
                r[j] += v[i] * m[i][j];
    return r;
}

}
