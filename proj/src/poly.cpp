#include "oag/poly.hpp"

#include <algorithm>

namespace oag {

Q parse_rational(const std::string& s)
{
    Q q;
    if (q.set_str(s, 10) != 0)
        throw ConfigError("bad rational: " + s);
    q.canonicalize();
    return q;
}

void trim(Poly& p)
{
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

int degree(const Poly& p)
{
    for (int i = int(p.size()) - 1; i >= 0; --i)
        if (sgn(p[i]) != 0)
            return i;
    return -1;
}

Poly padd(const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    trim(r);
    return r;
}

Poly psub(const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    trim(r);
    return r;
}

Poly pmul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly pscale(const Poly& a, const Q& s)
{
    Poly r(a);
    for (auto& x : r)
        x *= s;
    trim(r);
    return r;
}

void pdivmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem)
{
    int db = degree(b);
    if (db < 0)
        throw std::domain_error("polynomial division by zero");
    rem = a;
    trim(rem);
    int da = degree(rem);
    quo.assign(da >= db ? da - db + 1 : 0, Q(0));
    const Q& lead = b[db];
    while ((da = degree(rem)) >= db) {
        Q f = rem[da] / lead;
        quo[da - db] = f;
        for (int i = 0; i <= db; ++i)
            rem[da - db + i] -= f * b[i];
        rem[da] = 0;
        trim(rem);
    }
    trim(quo);
}

Poly prem(const Poly& a, const Poly& b)
{
    Poly q, r;
    pdivmod(a, b, q, r);
    return r;
}

Poly pgcd(Poly a, Poly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = prem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Q lead = a.back();
        for (auto& x : a)
            x /= lead;
    }
    return a;
}

Poly pderiv(const Poly& p)
{
    Poly r;
    for (size_t i = 1; i < p.size(); ++i)
        r.push_back(p[i] * int(i));
    trim(r);
    return r;
}

Q peval(const Poly& p, const Q& x)
{
    Q r = 0;
    for (int i = int(p.size()) - 1; i >= 0; --i)
        r = r * x + p[i];
    return r;
}

static int sign_changes(const std::vector<Poly>& seq, const Q& x)
{
    int changes = 0, last = 0;
    for (const auto& p : seq) {
        int s = sgn(peval(p, x));
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

int sturm_count(const Poly& p, const Q& lo, const Q& hi)
{
    Poly p0 = p;
    trim(p0);
    if (degree(p0) <= 0)
        return 0;
    std::vector<Poly> seq{p0, pderiv(p0)};
    while (degree(seq.back()) > 0) {
        Poly r = prem(seq[seq.size() - 2], seq.back());
        if (r.empty())
            break;
        seq.push_back(pscale(r, Q(-1)));
    }
    return sign_changes(seq, lo) - sign_changes(seq, hi);
}

void interval_eval(const Poly& p, const Q& lo, const Q& hi, Q& out_lo, Q& out_hi)
{
    Q rl = 0, rh = 0;
    for (int i = int(p.size()) - 1; i >= 0; --i) {
        Q a = rl * lo, b = rl * hi, c = rh * lo, d = rh * hi;
        Q mn = std::min({a, b, c, d});
        Q mx = std::max({a, b, c, d});
        rl = mn + p[i];
        rh = mx + p[i];
    }
    out_lo = rl;
    out_hi = rh;
}

}
