#include "oag/numberfield.hpp"

namespace oag {

static const int refine_cap = 20000;

FieldSpec::FieldSpec() : FieldSpec(Poly{Q(0), Q(1)}, Q(-1), Q(1)) {}

FieldSpec FieldSpec::rationals() { return FieldSpec(); }

FieldSpec::FieldSpec(Poly minpoly, Q lo, Q hi) : m_(std::move(minpoly)), lo0_(lo), hi0_(hi)
{
    trim(m_);
    if (oag::degree(m_) < 1)
        throw ConfigError("minimal polynomial must have degree at least 1");
    if (m_.back() != 1)
        throw ConfigError("minimal polynomial must be monic");
    if (!(lo < hi))
        throw ConfigError("isolating interval must satisfy lo < hi");
    if (oag::degree(pgcd(m_, pderiv(m_))) > 0)
        throw ConfigError("minimal polynomial is not squarefree");
    int slo = sgn(peval(m_, lo)), shi = sgn(peval(m_, hi));
    if (slo == 0 || shi == 0 || slo == shi)
        throw ConfigError("isolating interval endpoints must give opposite signs");
    if (sturm_count(m_, lo, hi) != 1)
        throw ConfigError("isolating interval must contain exactly one root");
    lo_ = lo;
    hi_ = hi;
    Q width = hi_ - lo_;
    Q target(1);
    target /= Z(1) << 64;
    while (width > target && lo_ != hi_) {
        if (!bisect(lo_, hi_))
            break;
        width = hi_ - lo_;
    }
}

bool FieldSpec::bisect(Q& lo, Q& hi) const
{
    if (lo == hi)
        return false;
    Q mid = (lo + hi) / 2;
    int sm = sgn(peval(m_, mid));
    if (sm == 0) {
        lo = hi = mid;
        return false;
    }
    int sl = sgn(peval(m_, lo));
    if (sm == sl)
        lo = mid;
    else
        hi = mid;
    return true;
}

Poly FieldSpec::poly(const FieldElement& a) const
{
    Poly p = a.c;
    trim(p);
    return p;
}

FieldElement FieldSpec::reduce(const Poly& p) const
{
    Poly r = oag::degree(p) >= degree() ? prem(p, m_) : p;
    FieldElement e;
    e.c.assign(degree(), Q(0));
    for (size_t i = 0; i < r.size() && i < e.c.size(); ++i)
        e.c[i] = r[i];
    return e;
}

FieldElement FieldSpec::zero() const { return reduce({}); }
FieldElement FieldSpec::one() const { return reduce({Q(1)}); }
FieldElement FieldSpec::from_rational(const Q& q) const { return reduce({q}); }
FieldElement FieldSpec::theta() const { return reduce({Q(0), Q(1)}); }
FieldElement FieldSpec::make(const QVec& coeffs) const { return reduce(coeffs); }

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const
{
    FieldElement r = a;
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] += b.c[i];
    return r;
}

FieldElement FieldSpec::sub(const FieldElement& a, const FieldElement& b) const
{
    FieldElement r = a;
    for (size_t i = 0; i < r.c.size(); ++i)
        r.c[i] -= b.c[i];
    return r;
}

FieldElement FieldSpec::neg(const FieldElement& a) const
{
    FieldElement r = a;
    for (auto& x : r.c)
        x = -x;
    return r;
}

FieldElement FieldSpec::scale(const FieldElement& a, const Q& s) const
{
    FieldElement r = a;
    for (auto& x : r.c)
        x *= s;
    return r;
}

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const
{
    if (degree() == 1)
        return from_rational(a.c[0] * b.c[0]);
    return reduce(pmul(poly(a), poly(b)));
}

bool FieldSpec::is_rational(const FieldElement& a) const
{
    for (size_t i = 1; i < a.c.size(); ++i)
        if (sgn(a.c[i]) != 0)
            return false;
    return true;
}

// Extended Euclid against the factor of m that vanishes at theta.
FieldElement FieldSpec::inv(const FieldElement& a) const
{
    if (sign(a) == 0)
        throw std::domain_error("inverse of zero field element");
    Poly e = poly(a);
    Poly m = m_;
    Poly g = pgcd(e, m);
    if (oag::degree(g) > 0) {
        Poly q, r;
        pdivmod(m, g, q, r);
        m = q;
    }
    Poly r0 = m, r1 = prem(e, m), s0{}, s1{Q(1)};
    while (oag::degree(r1) > 0) {
        Poly q, r;
        pdivmod(r0, r1, q, r);
        Poly s = psub(s0, pmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty())
        throw std::domain_error("field inverse failed");
    Poly res = pscale(s1, Q(1) / r1[0]);
    return reduce(prem(res, m));
}

int FieldSpec::sign(const FieldElement& a) const
{
    Poly e = poly(a);
    int d = oag::degree(e);
    if (d < 0)
        return 0;
    if (d == 0)
        return sgn(e[0]);
    if (lo_ == hi_)
        return sgn(peval(e, lo_));
    Poly g = pgcd(e, m_);
    if (oag::degree(g) > 0 && sturm_count(g, lo_, hi_) >= 1)
        return 0;
    Q lo = lo_, hi = hi_;
    for (int it = 0; it < refine_cap; ++it) {
        Q vl, vh;
        interval_eval(e, lo, hi, vl, vh);
        if (sgn(vl) > 0)
            return 1;
        if (sgn(vh) < 0)
            return -1;
        if (!bisect(lo, hi))
            return sgn(peval(e, lo));
    }
    throw ConfigError("sign refinement did not terminate; field spec is malformed");
}

std::pair<Q, Q> FieldSpec::enclose(const FieldElement& a, unsigned bits) const
{
    Poly e = poly(a);
    if (oag::degree(e) <= 0) {
        Q v = e.empty() ? Q(0) : e[0];
        return {v, v};
    }
    Q target(1);
    target /= Z(1) << bits;
    Q lo = lo_, hi = hi_;
    for (int it = 0; it < refine_cap; ++it) {
        Q vl, vh;
        interval_eval(e, lo, hi, vl, vh);
        if (vh - vl <= target)
            return {vl, vh};
        if (!bisect(lo, hi)) {
            Q v = peval(e, lo);
            return {v, v};
        }
    }
    throw ConfigError("enclosure refinement did not terminate");
}

double FieldSpec::to_double(const FieldElement& a) const
{
    auto [l, h] = enclose(a, 60);
    return Q((l + h) / 2).get_d();
}

int nf_sign(const FieldElement& e, const FieldSpec& spec) { return spec.sign(e); }

}
