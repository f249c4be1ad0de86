#pragma once

#include "oag/common.hpp"

namespace oag {

using Poly = std::vector<Q>;

void trim(Poly& p);
int degree(const Poly& p);
Poly padd(const Poly& a, const Poly& b);
Poly psub(const Poly& a, const Poly& b);
Poly pmul(const Poly& a, const Poly& b);
Poly pscale(const Poly& a, const Q& s);
void pdivmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
Poly prem(const Poly& a, const Poly& b);
Poly pgcd(Poly a, Poly b);
Poly pderiv(const Poly& p);
Q peval(const Poly& p, const Q& x);
int sturm_count(const Poly& p, const Q& lo, const Q& hi);
void interval_eval(const Poly& p, const Q& lo, const Q& hi, Q& out_lo, Q& out_hi);

}
