#ifndef SYZYGY_GROEBNER_HPP
#define SYZYGY_GROEBNER_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "syzygy/polynomial.hpp"

namespace syz {

namespace detail {

// Terms sorted strictly descending under the working order, plus the sugar
// degree used for pair selection.  This is the engine's private shape; the
// public Poly keeps canonical storage order.
template <class K>
struct OrdPoly {
    std::vector<Term<K>> t;
    int sugar = 0;

    bool empty() const { return t.empty(); }
    const Monomial& lm() const { return t.front().m; }
    const typename K::elem& lc() const { return t.front().c; }
};

template <class K>
OrdPoly<K> to_ordered(const Ring<K>& R, const Poly<K>& f, const MonomialOrder& ord) {
    OrdPoly<K> g;
    g.t = f.terms;
    std::sort(g.t.begin(), g.t.end(),
              [&](const Term<K>& a, const Term<K>& b) { return ord.greater(a.m, b.m); });
    g.sugar = f.degree();
    (void)R;
    return g;
}

template <class K>
Poly<K> to_canonical(const Ring<K>& R, const OrdPoly<K>& f) {
    return poly_normalize(R, f.t);
}

// h - c * m * g, merging sorted term lists.
template <class K>
void axpy_term(const Ring<K>& R, const MonomialOrder& ord, OrdPoly<K>& h, const typename K::elem& c,
               const Monomial& m, const OrdPoly<K>& g) {
    std::vector<Term<K>> out;
    out.reserve(h.t.size() + g.t.size());
    std::size_t i = 0, j = 0;
    while (i < h.t.size() && j < g.t.size()) {
        Monomial gm = g.t[j].m * m;
        int cv = ord.cmp(h.t[i].m, gm);
        if (cv > 0) {
            out.push_back(std::move(h.t[i++]));
        } else if (cv < 0) {
            out.push_back(Term<K>{std::move(gm), R.field.neg(R.field.mul(c, g.t[j].c))});
            ++j;
        } else {
            auto s = R.field.sub(h.t[i].c, R.field.mul(c, g.t[j].c));
            if (!R.field.is_zero(s)) out.push_back(Term<K>{std::move(gm), std::move(s)});
            ++i;
            ++j;
        }
    }
    while (i < h.t.size()) out.push_back(std::move(h.t[i++]));
    while (j < g.t.size()) {
        out.push_back(Term<K>{g.t[j].m * m, R.field.neg(R.field.mul(c, g.t[j].c))});
        ++j;
    }
    h.t = std::move(out);
    h.sugar = std::max(h.sugar, m.degree + g.sugar);
}

// Full reduction: the result has no term divisible by any basis leading
// monomial.  Deterministic: reducers are tried in basis order.
template <class K>
OrdPoly<K> reduce_full(const Ring<K>& R, const MonomialOrder& ord, OrdPoly<K> h,
                       const std::vector<OrdPoly<K>>& basis) {
    std::vector<Term<K>> remainder;
    while (!h.empty()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.empty() || !g.lm().divides(h.lm())) continue;
            Monomial m = g.lm().divide_into(h.lm());
            auto c = R.field.div(h.lc(), g.lc());
            axpy_term(R, ord, h, c, m, g);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(std::move(h.t.front()));
            h.t.erase(h.t.begin());
        }
    }
    h.t = std::move(remainder);
    return h;
}

} // namespace detail

// Reduced Groebner basis of the given generators under the given order.
// Buchberger with sugar selection and both classical pair criteria; output
// is monic, mutually reduced, sorted ascending by leading monomial.  The
// empty ideal yields an empty basis.
template <class K>
std::vector<Poly<K>> buchberger_reduced(const Ring<K>& R, const std::vector<Poly<K>>& gens,
                                        const MonomialOrder& ord) {
    using detail::OrdPoly;
    std::vector<OrdPoly<K>> basis;
    for (const auto& f : gens) {
        if (f.is_zero()) continue;
        basis.push_back(detail::to_ordered(R, f, ord));
    }

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        int sugar;
    };
    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> pending_keys;

    auto push_pairs_for = [&](std::size_t t) {
        for (std::size_t i = 0; i < t; ++i) {
            if (basis[i].empty()) continue;
            Monomial l = basis[i].lm().lcm(basis[t].lm());
            int sugar = std::max(basis[i].sugar + l.degree - basis[i].lm().degree,
                                 basis[t].sugar + l.degree - basis[t].lm().degree);
            pending.push_back(Pair{i, t, std::move(l), sugar});
            pending_keys.emplace(i, t);
        }
    };
    for (std::size_t t = 0; t < basis.size(); ++t) push_pairs_for(t);

    while (!pending.empty()) {
        // Select minimal (sugar, lcm, i, j).
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            const Pair &a = pending[k], &b = pending[best];
            int c = (a.sugar != b.sugar) ? (a.sugar < b.sugar ? -1 : 1) : ord.cmp(a.lcm, b.lcm);
            if (c < 0 || (c == 0 && (a.i < b.i || (a.i == b.i && a.j < b.j)))) best = k;
        }
        Pair pr = std::move(pending[best]);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
        pending_keys.erase({pr.i, pr.j});

        const auto& fi = basis[pr.i];
        const auto& fj = basis[pr.j];

        // Product criterion: coprime leading monomials reduce to zero.
        if (fi.lm().coprime_with(fj.lm())) continue;
        // Chain criterion: some third element divides the lcm and both of
        // its pairs with {i, j} are already handled.
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j || basis[k].empty()) continue;
            if (!basis[k].lm().divides(pr.lcm)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
            };
            if (!pending_keys.count(key(pr.i, k)) && !pending_keys.count(key(pr.j, k))) chained = true;
        }
        if (chained) continue;

        // S-polynomial, built from monic scalings to limit growth.
        OrdPoly<K> s;
        s.t.clear();
        s.sugar = std::max(fi.sugar + pr.lcm.degree - fi.lm().degree,
                           fj.sugar + pr.lcm.degree - fj.lm().degree);
        {
            OrdPoly<K> left;
            left.sugar = s.sugar;
            Monomial mi = fi.lm().divide_into(pr.lcm);
            auto ci = R.field.inv(fi.lc());
            for (const auto& t : fi.t) left.t.push_back(Term<K>{t.m * mi, R.field.mul(t.c, ci)});
            Monomial mj = fj.lm().divide_into(pr.lcm);
            auto cj = R.field.inv(fj.lc());
            detail::axpy_term(R, ord, left, cj, mj, fj);
            s = std::move(left);
        }

        s = detail::reduce_full(R, ord, std::move(s), basis);
        if (s.empty()) continue;
        basis.push_back(std::move(s));
        push_pairs_for(basis.size() - 1);
    }

    // Minimalize: keep only elements whose leading monomial no other kept
    // leading monomial divides.
    std::vector<std::size_t> order_idx(basis.size());
    for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
        return ord.less(basis[a].lm(), basis[b].lm());
    });
    std::vector<detail::OrdPoly<K>> minimal;
    for (std::size_t idx : order_idx) {
        bool dominated = false;
        for (const auto& g : minimal)
            if (g.lm().divides(basis[idx].lm())) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(basis[idx]);
    }

    // Tail-reduce each against the others and normalize monic.
    std::vector<Poly<K>> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<detail::OrdPoly<K>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        auto r = detail::reduce_full(R, ord, minimal[i], others);
        auto inv = R.field.inv(r.lc());
        for (auto& t : r.t) t.c = R.field.mul(t.c, inv);
        out.push_back(detail::to_canonical(R, r));
    }
    return out;
}

// Leading monomial of f under an arbitrary order (storage order is
// canonical, so scan).
template <class K>
Monomial lead_monomial(const Poly<K>& f, const MonomialOrder& ord) {
    if (f.is_zero()) throw DomainError("leading monomial of zero polynomial");
    std::size_t best = 0;
    for (std::size_t i = 1; i < f.terms.size(); ++i)
        if (ord.greater(f.terms[i].m, f.terms[best].m)) best = i;
    return f.terms[best].m;
}

// Remainder of f on division by the (Groebner) basis: no term of the result
// is divisible by any leading monomial of gb.  f - result lies in (gb).
template <class K>
Poly<K> normal_form(const Ring<K>& R, const Poly<K>& f, const std::vector<Poly<K>>& gb,
                    const MonomialOrder& ord) {
    std::vector<detail::OrdPoly<K>> basis;
    basis.reserve(gb.size());
    for (const auto& g : gb)
        if (!g.is_zero()) basis.push_back(detail::to_ordered(R, g, ord));
    auto r = detail::reduce_full(R, ord, detail::to_ordered(R, f, ord), basis);
    return detail::to_canonical(R, r);
}

} // namespace syz

#endif
