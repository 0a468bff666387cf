#ifndef SYZYGY_COMBINAT_HPP
#define SYZYGY_COMBINAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace syz {

using BigInt = boost::multiprecision::cpp_int;

// Binomial coefficient C(n, k) with the usual conventions: zero for k < 0
// or k > n (n ≥ 0); exact big-integer arithmetic throughout.
inline BigInt binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

} // namespace syz

#endif
