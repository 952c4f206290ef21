#include "circpat/formulas.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <map>

namespace circpat {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void require_count_n(int n) { require(n >= 1, "n must be positive"); }

void require_stratum(int n, int k, int n_min) {
    require(n >= n_min, "n too small for stratified count");
    require(k >= 1 && k <= n - 1, "position k must lie in 1..n-1");
}

BigInt pow2(int e) { return BigInt(1) << e; }

}  // namespace

BigInt fib(int m) {
    require(m >= 1, "Fibonacci index must be positive");
    BigInt a = 1, b = 1;  // F(1), F(2)
    for (int i = 3; i <= m; ++i) {
        BigInt c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return m == 1 ? a : b;
}

BigInt binomial(long long a, long long b) {
    if (b < 0 || b > a || a < 0) return 0;
    b = std::min(b, a - b);
    BigInt r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= (a - b + i);
        r /= i;  // exact: r is C(a-b+i, i) after this step
    }
    return r;
}

BigInt count_1324_closed(int n) {
    require_count_n(n);
    return n == 1 ? BigInt(1) : fib(2 * n - 3);
}

BigInt count_1342_closed(int n) {
    require_count_n(n);
    return pow2(n - 1) - (n - 1);
}

BigInt count_1234_closed(int n) {
    require_count_n(n);
    return pow2(n) + 1 - 2 * n - binomial(n, 3);
}

BigInt count_1324_recurrence(int n) {
    require_count_n(n);
    if (n <= 2) return 1;
    BigInt prev = 1;     // u_2
    BigInt tail_sum = 1; // u_2 + ... + u_{i-1}
    for (int i = 3; i <= n; ++i) {
        BigInt cur = prev + tail_sum;  // u_{i-1} + sum_{k=1}^{i-2} u_{i-k}
        tail_sum += cur;
        prev = std::move(cur);
    }
    return prev;
}

BigInt count_1342_recurrence(int n) {
    require_count_n(n);
    BigInt u = 1;
    for (int i = 3; i <= n; ++i) u += pow2(i - 2) - 1;
    return u;
}

BigInt count_1234_recurrence(int n) {
    require_count_n(n);
    BigInt u = 1;
    for (int i = 3; i <= n; ++i) u += pow2(i - 1) - i - binomial(i - 2, 2);
    return u;
}

BigInt stratified_1324(int n, int k) {
    require_stratum(n, k, 3);
    return k <= n - 2 ? count_1324_closed(n - k) : count_1324_closed(n - 1);
}

BigInt stratified_1342(int n, int k) {
    require_stratum(n, k, 4);
    if (k == 1) return count_1342_closed(n - 1);
    if (k <= n - 2) return pow2(n - k - 1);
    return 1;
}

BigInt stratified_1234(int n, int k) {
    require_stratum(n, k, 4);
    if (k == 1) return count_1234_closed(n - 1);
    if (k == 2) return pow2(n - 3);
    return pow2(n - 1 - k) + binomial(n - 2, k - 1) - n + k;
}

Pattern orbit_representative(const Pattern& p) {
    auto rots = cyclic_rotations(p);
    return *std::min_element(rots.begin(), rots.end());
}

PatternFamily classify_4letter(const Pattern& p) {
    if (p.length() != 4) throw unsupported_pattern_error("pattern length must be 4");
    static const std::map<std::string, PatternFamily> kFamilies = {
        {"1234", PatternFamily::f1234}, {"1432", PatternFamily::f1234},
        {"1324", PatternFamily::f1324}, {"1423", PatternFamily::f1324},
        {"1342", PatternFamily::f1342}, {"1243", PatternFamily::f1342},
    };
    return kFamilies.at(orbit_representative(p).str());
}

AvoiderCount count_for_pattern(int n, const Pattern& p) {
    require_count_n(n);
    BigInt count;
    if (p.length() == 3) {
        // One avoider for every 3-letter pattern: the identity circle for the
        // 132 class, the reverse identity for the 123 class.
        count = 1;
    } else if (p.length() == 4) {
        switch (classify_4letter(p)) {
            case PatternFamily::f1234: count = count_1234_closed(n); break;
            case PatternFamily::f1324: count = count_1324_closed(n); break;
            case PatternFamily::f1342: count = count_1342_closed(n); break;
        }
    } else {
        throw unsupported_pattern_error(
            "closed-form counts cover pattern lengths 3 and 4 only");
    }
    return AvoiderCount{n, {p}, std::move(count), CountMethod::formula};
}

BigInt count_recurrence_for_pattern(int n, const Pattern& p) {
    require_count_n(n);
    if (p.length() == 3) return 1;
    if (p.length() != 4) {
        throw unsupported_pattern_error("recurrences cover pattern lengths 3 and 4 only");
    }
    switch (classify_4letter(p)) {
        case PatternFamily::f1234: return count_1234_recurrence(n);
        case PatternFamily::f1324: return count_1324_recurrence(n);
        case PatternFamily::f1342: return count_1342_recurrence(n);
    }
    throw std::logic_error("unreachable");
}

GrowthConstant growth_constant(const Pattern& p) {
    if (p.length() != 4) {
        throw unsupported_pattern_error("growth constants cover 4-letter patterns only");
    }
    if (classify_4letter(p) == PatternFamily::f1324) {
        return GrowthConstant{(3.0 + std::sqrt(5.0)) / 2.0, GrowthKind::phi_squared};
    }
    return GrowthConstant{2.0, GrowthKind::two};
}

double nth_root(const BigInt& v, int n) {
    require(n >= 1, "root index must be positive");
    require(v > 0, "root of a nonpositive value");
    using Float50 = boost::multiprecision::cpp_bin_float_50;
    const Float50 x(v);
    return boost::multiprecision::exp(boost::multiprecision::log(x) / n).convert_to<double>();
}

}  // namespace circpat
