#include "syzygy/monomial.hpp"

namespace syz {

namespace {

void enumerate(std::size_t nvars, std::size_t i, int remaining, Monomial& cur, std::vector<Monomial>& out) {
    if (i + 1 == nvars) {
        cur.e[i] = static_cast<std::uint16_t>(remaining);
        out.push_back(cur);
        cur.e[i] = 0;
        return;
    }
    for (int a = remaining; a >= 0; --a) {
        cur.e[i] = static_cast<std::uint16_t>(a);
        enumerate(nvars, i + 1, remaining - a, cur, out);
    }
    cur.e[i] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back(std::size_t{0});
        return out;
    }
    Monomial cur(nvars);
    cur.degree = d;
    enumerate(nvars, 0, d, cur, out);
    return out;
}

} // namespace syz
