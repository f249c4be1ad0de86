#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace oag {

using Q = mpq_class;
using Z = mpz_class;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string qstr(const Q& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Q parse_rational(const std::string& s);

inline bool is_zero(const QVec& v)
{
    for (const auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

}
