#ifndef SYZYGY_ORDER_HPP
#define SYZYGY_ORDER_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "syzygy/monomial.hpp"

namespace syz {

// A term order on monomials.  `priority` permutes variable significance:
// priority[0] is the most significant variable.  The canonical order of the
// whole engine is deglex with x0 most significant, which keeps the x0-degree
// of a leading term maximal among terms of equal total degree; the partial
// elimination machinery depends on that property.
struct MonomialOrder {
    enum class Kind { DegLex, DegRevLex, Lex };

    Kind kind = Kind::DegLex;
    std::vector<std::size_t> priority; // permutation of {0, ..., nvars-1}

    static MonomialOrder deglex(std::size_t nvars) {
        MonomialOrder o;
        o.kind = Kind::DegLex;
        o.priority.resize(nvars);
        std::iota(o.priority.begin(), o.priority.end(), std::size_t{0});
        return o;
    }
    static MonomialOrder degrevlex(std::size_t nvars) {
        auto o = deglex(nvars);
        o.kind = Kind::DegRevLex;
        return o;
    }
    static MonomialOrder lex(std::size_t nvars) {
        auto o = deglex(nvars);
        o.kind = Kind::Lex;
        return o;
    }

    MonomialOrder with_priority(std::vector<std::size_t> perm) const {
        MonomialOrder o = *this;
        o.priority = std::move(perm);
        return o;
    }

    bool operator==(const MonomialOrder&) const = default;

    // Returns negative, zero, or positive as a < b, a == b, a > b.
    int cmp(const Monomial& a, const Monomial& b) const {
        if (kind != Kind::Lex) {
            if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
        }
        switch (kind) {
        case Kind::Lex:
        case Kind::DegLex:
            for (std::size_t i : priority) {
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
            }
            return 0;
        case Kind::DegRevLex:
            for (auto it = priority.rbegin(); it != priority.rend(); ++it) {
                if (a.e[*it] != b.e[*it]) return a.e[*it] < b.e[*it] ? 1 : -1;
            }
            return 0;
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    std::string name() const {
        switch (kind) {
        case Kind::DegLex: return "deglex";
        case Kind::DegRevLex: return "degrevlex";
        case Kind::Lex: return "lex";
        }
        return "?";
    }
};

} // namespace syz

#endif
