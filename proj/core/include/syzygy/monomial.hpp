#ifndef SYZYGY_MONOMIAL_HPP
#define SYZYGY_MONOMIAL_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "syzygy/field.hpp"

namespace syz {

// A monomial in a fixed number of variables: an exponent vector plus its
// cached total degree.  The number of variables is implicit in e.size() and
// must match the ambient ring everywhere a monomial is used.
struct Monomial {
    std::vector<std::uint16_t> e;
    int degree = 0;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<std::uint16_t> exps)
        : e(std::move(exps)), degree(std::accumulate(e.begin(), e.end(), 0)) {}

    static Monomial variable(std::size_t nvars, std::size_t i, int power = 1) {
        Monomial m(nvars);
        m.e[i] = static_cast<std::uint16_t>(power);
        m.degree = power;
        return m;
    }

    std::size_t nvars() const { return e.size(); }
    bool is_one() const { return degree == 0; }

    bool operator==(const Monomial& o) const { return e == o.e; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
        r.degree = degree + o.degree;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (degree > o.degree) return false;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    // Exact quotient o / this; caller guarantees divisibility.
    Monomial divide_into(const Monomial& o) const {
        Monomial r(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<std::uint16_t>(o.e[i] - e[i]);
        r.degree = o.degree - degree;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r(e.size());
        int d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            r.e[i] = std::max(e[i], o.e[i]);
            d += r.e[i];
        }
        r.degree = d;
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0 && o.e[i] > 0) return false;
        return true;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : m.e) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// All monomials of total degree d in nvars variables, in descending
// lexicographic order of exponent vectors (so x0^d comes first).  The count
// is C(d + nvars - 1, nvars - 1).
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d);

} // namespace syz

#endif
