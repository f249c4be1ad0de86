#pragma once

#include "oag/common.hpp"

#include <map>
#include <optional>

namespace oag {

using ZVec = std::vector<Z>;
using ZMat = std::vector<ZVec>;

struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class PrimeKind { divisible, finite, infinite };

struct PrimeSpec {
    long l = 2;
    PrimeKind kind = PrimeKind::divisible;
    int dim = 0;
    std::map<std::string, ZVec> residues;
};

struct CongruenceSpec {
    std::vector<PrimeSpec> primes;
    int nmax = 0;

    const PrimeSpec& prime(long l) const;
};

struct HermiteSmith {
    ZMat hnf;
    ZMat snf;
    ZMat U, V;
    std::vector<Z> divisors;
    int rank = 0;
};

// hnf = W*mat for some unimodular W (row style); snf = U*mat*V.
HermiteSmith hermite_smith(const ZMat& mat);

ZMat columns_to_matrix(const std::vector<ZVec>& cols, size_t m);
ZMat mat_mul(const ZMat& a, const ZMat& b);
bool integer_solve(const ZMat& M, const ZVec& x, ZVec* z = nullptr);
std::vector<ZVec> integer_kernel(const ZMat& M);

// Pure closure of the lattice spanned by gens (plus unit when given).
std::vector<ZVec> saturate_special(const std::vector<ZVec>& gens, size_t m, const std::optional<ZVec>& unit);

bool member_mod_lN(const ZVec& x, const std::vector<ZVec>& S, long l, int N);

int lvaluation(const Z& v, long l);
int stabilization_bound(long l, const std::vector<std::vector<ZVec>>& families, size_t m);

struct ConditionResult {
    bool holds = true;
    int n = 0;
    ZVec witness;
    ZVec coefficients;
    int bound = 0;
};

ConditionResult infinite_index_condition(const std::vector<ZVec>& C, const std::vector<ZVec>& Ap,
                                         const std::vector<ZVec>& Bp, long l, size_t m, int nmax = 0);
ConditionResult finite_index_condition(const std::vector<ZVec>& C, const std::vector<ZVec>& Ap, long l, size_t m,
                                       int nmax = 0);

// Single-N versions used by the stabilization check and the brute-force comparisons.
bool infinite_index_at(const std::vector<ZVec>& C, const std::vector<ZVec>& Ap, const std::vector<ZVec>& Bp, long l,
                       size_t m, int N, ZVec* witness = nullptr, ZVec* coeffs = nullptr);
bool finite_index_at(const std::vector<ZVec>& C, const std::vector<ZVec>& Ap, long l, int N);

bool ltype_equal(const ZVec& x, const ZVec& y, const std::vector<ZVec>& S, long l, size_t m, int nmax = 0);
bool ltype_equal_at(const ZVec& x, const ZVec& y, const std::vector<ZVec>& S, long l, int N);

struct CrtTarget {
    long l;
    int n;
    ZVec residue;
};

ZVec crt_realize(const std::vector<CrtTarget>& targets, size_t m);

Z ipow(long l, int n);

}
