#include "syzygy/field.hpp"

namespace syz {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

} // namespace

// Deterministic Miller-Rabin; the base set {2, 3, 5, 7} is exact for all
// n < 3'215'031'751, which covers every 32-bit modulus we accept.
bool is_odd_prime(std::uint32_t n) {
    if (n < 3 || n % 2 == 0) return false;
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        if (a % n == 0) continue;
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = (x * x) % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Gf::elem Gf::inv(elem a) const {
    if (a == 0) throw DomainError("division by zero in GF(" + std::to_string(p_) + ")");
    // Extended Euclid on (a, p); p prime so gcd is 1.
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<elem>(t);
}

Gf::elem Gf::parse(const std::string& text) const {
    auto slash = text.find('/');
    auto parse_int = [&](const std::string& s) -> elem {
        if (s.empty()) throw ParseError("empty coefficient");
        std::size_t i = 0;
        bool negative = false;
        if (s[0] == '+' || s[0] == '-') {
            negative = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw ParseError("bare sign is not a coefficient: '" + s + "'");
        elem v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw ParseError("invalid digit '" + std::string(1, s[i]) + "' in coefficient '" + s + "'");
            v = (v * 10 + static_cast<elem>(s[i] - '0')) % p_;
        }
        return negative ? neg(v) : v;
    };
    if (slash == std::string::npos) return parse_int(text);
    elem num = parse_int(text.substr(0, slash));
    elem den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw ParseError("coefficient denominator vanishes modulo " + std::to_string(p_) + ": '" + text + "'");
    return div(num, den);
}

Qq::elem Qq::parse(const std::string& text) const {
    auto check = [&](const std::string& s, bool allow_sign) {
        if (s.empty()) throw ParseError("empty coefficient");
        std::size_t i = 0;
        if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
        if (i == s.size()) throw ParseError("bare sign is not a coefficient: '" + s + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw ParseError("invalid digit '" + std::string(1, s[i]) + "' in coefficient '" + s + "'");
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        check(text, true);
        return elem(boost::multiprecision::cpp_int(text));
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    check(num, true);
    check(den, false);
    boost::multiprecision::cpp_int d(den);
    if (d == 0) throw ParseError("zero denominator in coefficient '" + text + "'");
    return elem(boost::multiprecision::cpp_int(num)) / elem(d);
}

} // namespace syz
