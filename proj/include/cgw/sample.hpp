#pragma once

// Deterministic rational sample points for randomized identity testing.
// Admissibility: r with r^{2k} != +-1 for k <= n (Hecke semisimplicity bound).

#include <random>

#include "ratfun.hpp"

namespace cgw {

class PointGen {
public:
    PointGen(unsigned long seed, int n) : rng_(seed), n_(n) {}

    Q rand_q() {
        std::uniform_int_distribution<long> num(-10000, 10000);
        std::uniform_int_distribution<long> den(1, 10000);
        Q x;
        do {
            x = Q(num(rng_)) / Q(den(rng_));
        } while (sgn(x) == 0);
        return x;
    }

    bool admissible_r(const Q& r) const {
        if (sgn(r) == 0) return false;
        Q p(1);
        for (int k = 1; k <= n_; ++k) {
            p *= r * r;
            if (p == 1 || p == -1) return false;
        }
        return true;
    }

    Q rand_r() {
        Q r;
        do {
            r = rand_q();
        } while (!admissible_r(r));
        return r;
    }

    std::pair<Q, Q> point() { return {rand_q(), rand_r()}; }

private:
    std::mt19937_64 rng_;
    int n_;
};

inline bool probabilistic_identity(const RatFun& x, const RatFun& y, int points,
                                   unsigned long seed, int n = 7) {
    if (points < 1) throw std::invalid_argument("points must be >= 1");
    PointGen gen(seed, n);
    int done = 0;
    while (done < points) {
        auto [lv, rv] = gen.point();
        Q xd = x.den().eval(lv, rv), yd = y.den().eval(lv, rv);
        if (sgn(xd) == 0 || sgn(yd) == 0) continue;  // resample off the poles
        if (x.num().eval(lv, rv) / xd != y.num().eval(lv, rv) / yd) return false;
        ++done;
    }
    return true;
}

} // namespace cgw
