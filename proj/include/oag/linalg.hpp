#pragma once

#include "oag/common.hpp"

namespace oag {

struct Echelon {
    QMat rows;
    std::vector<int> pivots;
};

Echelon rref(QMat rows, size_t ncols);
int rank_of(const QMat& rows, size_t ncols);
QMat nullspace(const QMat& mat, size_t ncols);
QMat row_space_basis(const QMat& rows, size_t ncols);
bool reduce_against(const Echelon& e, QVec& v);
bool in_row_space(const Echelon& e, QVec v);
bool solve_combination(const QMat& vecs, const QVec& target, QVec& coeffs);
QMat complement_basis(const QMat& sub, size_t n);
QMat mat_inverse(const QMat& m);
QVec mat_vec(const QMat& m, const QVec& v);
QVec vec_mat(const QVec& v, const QMat& m);

}
