#pragma once

#include "oag/poly.hpp"

#include <utility>

namespace oag {

struct FieldElement {
    QVec c;

    bool operator==(const FieldElement& o) const { return c == o.c; }
};

class FieldSpec {
public:
    FieldSpec();
    FieldSpec(Poly minpoly, Q lo, Q hi);

    static FieldSpec rationals();

    const Poly& minpoly() const { return m_; }
    const Q& given_lo() const { return lo0_; }
    const Q& given_hi() const { return hi0_; }
    int degree() const { return int(m_.size()) - 1; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rational(const Q& q) const;
    FieldElement theta() const;
    FieldElement make(const QVec& coeffs) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement scale(const FieldElement& a, const Q& s) const;
    FieldElement inv(const FieldElement& a) const;

    bool is_zero(const FieldElement& a) const { return sign(a) == 0; }
    bool is_rational(const FieldElement& a) const;
    int sign(const FieldElement& a) const;
    int compare(const FieldElement& a, const FieldElement& b) const { return sign(sub(a, b)); }
    std::pair<Q, Q> enclose(const FieldElement& a, unsigned bits) const;
    std::pair<Q, Q> root_interval() const { return {lo_, hi_}; }
    double to_double(const FieldElement& a) const;

    bool operator==(const FieldSpec& o) const { return m_ == o.m_ && lo0_ == o.lo0_ && hi0_ == o.hi0_; }

private:
    Poly m_;
    Q lo0_, hi0_;
    Q lo_, hi_;

    Poly poly(const FieldElement& a) const;
    FieldElement reduce(const Poly& p) const;
    bool bisect(Q& lo, Q& hi) const;
};

int nf_sign(const FieldElement& e, const FieldSpec& spec);

}
