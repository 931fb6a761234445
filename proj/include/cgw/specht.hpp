#pragma once

// Double-partition dimension theory for the type D Hecke algebra:
// hook-length counts, brute-force tableau enumeration, degree lists,
// the dimension-sum identity and box-removal restriction.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgw {

using Partition = std::vector<int>;  // weakly decreasing positive parts

inline bool partition_valid(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

inline int partition_size(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

inline std::string partition_str(const Partition& p) {
    if (p.empty()) return "(0)";
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

inline std::int64_t factorial64(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline std::int64_t binomial64(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

// hook length formula
inline std::int64_t syt_count(const Partition& p) {
    if (!partition_valid(p)) throw std::invalid_argument("not a partition");
    int n = partition_size(p);
    if (n == 0) return 1;
    std::vector<int> conj(p.empty() ? 0 : p[0], 0);
    for (int part : p)
        for (int c = 0; c < part; ++c) ++conj[c];
    // product of hooks divides n! exactly; accumulate numerator and divide at the end
    std::int64_t hooks = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (int c = 0; c < p[i]; ++c)
            hooks *= (p[i] - c) + (conj[c] - static_cast<int>(i)) - 1;
    return factorial64(n) / hooks;
}

// brute-force standard tableau count; the independent oracle
inline std::int64_t syt_enumerate(const Partition& p) {
    if (!partition_valid(p)) throw std::invalid_argument("not a partition");
    int n = partition_size(p);
    std::vector<int> fill(p.size(), 0);
    std::int64_t count = 0;
    std::function<void(int)> rec = [&](int placed) {
        if (placed == n) {
            ++count;
            return;
        }
        for (size_t row = 0; row < p.size(); ++row) {
            if (fill[row] >= p[row]) continue;
            if (row > 0 && fill[row] >= fill[row - 1]) continue;
            ++fill[row];
            rec(placed + 1);
            --fill[row];
        }
    };
    rec(0);
    return count;
}

struct DoublePartition {
    Partition lam, mu;  // canonical: |lam| <= |mu|, lex tie-break
    bool split = false; // lam == mu; the module splits into two halves
    int sign = 0;       // +1 / -1 for the split halves, 0 otherwise

    static DoublePartition make(Partition a, Partition b, int sign = 0) {
        int na = partition_size(a), nb = partition_size(b);
        if (na > nb || (na == nb && a > b)) std::swap(a, b);
        DoublePartition dp;
        dp.lam = std::move(a);
        dp.mu = std::move(b);
        dp.split = dp.lam == dp.mu;
        dp.sign = dp.split ? sign : 0;
        return dp;
    }

    int n() const { return partition_size(lam) + partition_size(mu); }

    std::string str() const {
        std::string s = "{" + partition_str(lam) + "," + partition_str(mu) + "}";
        if (split && sign) s += sign > 0 ? "+" : "-";
        return s;
    }

    bool operator<(const DoublePartition& o) const {
        return std::tie(lam, mu, sign) < std::tie(o.lam, o.mu, o.sign);
    }
    bool operator==(const DoublePartition& o) const {
        return lam == o.lam && mu == o.mu && sign == o.sign;
    }
};

inline std::int64_t dn_dim(const DoublePartition& dp) {
    int n = dp.n();
    std::int64_t d = binomial64(n, partition_size(dp.lam)) * syt_count(dp.lam) * syt_count(dp.mu);
    if (dp.split) {
        if (d % 2 != 0) throw std::logic_error("split module of odd dimension");
        d /= 2;
    }
    return d;
}

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// all canonical double partitions of n; split pairs listed as both halves
inline std::vector<DoublePartition> double_partitions(int n) {
    std::vector<DoublePartition> out;
    for (int k = 0; k <= n / 2; ++k) {
        auto small = partitions_of(k);
        auto large = partitions_of(n - k);
        for (const auto& a : small)
            for (const auto& b : large) {
                if (k == n - k && a > b) continue;  // unordered pair once
                if (k == n - k && a == b) {
                    out.push_back(DoublePartition::make(a, b, +1));
                    out.push_back(DoublePartition::make(a, b, -1));
                } else {
                    out.push_back(DoublePartition::make(a, b));
                }
            }
    }
    return out;
}

struct DegreeEntry {
    std::int64_t degree;
    std::vector<DoublePartition> witnesses;
};

inline std::vector<DegreeEntry> degree_list(int n, std::int64_t bound) {
    std::map<std::int64_t, std::vector<DoublePartition>> acc;
    for (const auto& dp : double_partitions(n)) {
        std::int64_t d = dn_dim(dp);
        if (d < bound) acc[d].push_back(dp);
    }
    std::vector<DegreeEntry> out;
    for (auto& [d, w] : acc) out.push_back({d, std::move(w)});
    return out;
}

inline std::set<std::int64_t> degree_set(int n, std::int64_t bound) {
    std::set<std::int64_t> s;
    for (const auto& e : degree_list(n, bound)) s.insert(e.degree);
    return s;
}

inline bool dim_sum_check(int n) {
    std::int64_t sum = 0;
    for (const auto& dp : double_partitions(n)) {
        std::int64_t d = dn_dim(dp);
        sum += d * d;
    }
    return sum == (std::int64_t{1} << (n - 1)) * factorial64(n);
}

inline std::vector<Partition> remove_one_box(const Partition& p) {
    std::vector<Partition> out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i + 1 < p.size() && p[i] == p[i + 1]) continue;
        Partition q = p;
        if (--q[i] == 0) q.erase(q.begin() + i);
        out.push_back(std::move(q));
    }
    return out;
}

inline std::vector<DoublePartition> restrict_dims(const DoublePartition& dp) {
    if (dp.split) throw std::invalid_argument("split-module restriction unsupported");
    std::vector<DoublePartition> out;
    auto push = [&](Partition a, Partition b) {
        DoublePartition c = DoublePartition::make(std::move(a), std::move(b));
        if (c.split) {
            // both halves occur in the restriction
            out.push_back(DoublePartition::make(c.lam, c.mu, +1));
            out.push_back(DoublePartition::make(c.lam, c.mu, -1));
        } else {
            out.push_back(std::move(c));
        }
    };
    for (const auto& q : remove_one_box(dp.lam)) push(q, dp.mu);
    for (const auto& q : remove_one_box(dp.mu)) push(dp.lam, q);
    return out;
}

inline bool restriction_dim_check(const DoublePartition& dp) {
    std::int64_t total = 0;
    for (const auto& c : restrict_dims(dp)) total += dn_dim(c);
    return total == dn_dim(dp);
}

} // namespace cgw
