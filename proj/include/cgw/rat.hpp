#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace cgw {

using Q = mpq_class;

inline Q qpow(const Q& x, long e) {
    if (e == 0) return Q(1);
    bool neg = e < 0;
    unsigned long ue = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (neg && sgn(x) == 0) throw std::domain_error("qpow: zero to negative power");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), ue);
    Q out;
    if (neg) {
        out = Q(den) / Q(num);
    } else {
        out = Q(num) / Q(den);
    }
    return out;
}

inline std::string qstr(const Q& x) {
    return x.get_str();
}

inline Q qparse(const std::string& s) {
    Q x;
    if (x.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    x.canonicalize();
    return x;
}

} // namespace cgw
