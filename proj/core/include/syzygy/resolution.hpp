#ifndef SYZYGY_RESOLUTION_HPP
#define SYZYGY_RESOLUTION_HPP

#include "syzygy/betti.hpp"

namespace syz {
namespace detail {

// Flat coordinate frame for a graded free module ⊕_g R(−d_g): the degree-m
// piece has one coordinate per (slot g, monomial of degree m − d_g).  Kept
// separate from PieceModule on purpose: the resolution oracle shares no code
// with the Koszul engine beyond the monomial enumerator.
template <class K>
struct ResFrame {
    RingPtr<K> ring;
    std::vector<int> shifts;

    mutable std::map<int, std::vector<Monomial>> mono_list;
    mutable std::map<int, std::unordered_map<Monomial, std::size_t, MonomialHash>> mono_pos;

    const std::vector<Monomial>& monomials(int d) const {
        auto it = mono_list.find(d);
        if (it == mono_list.end()) {
            std::vector<Monomial> list;
            if (d >= 0) list = monomials_of_degree(ring->nvars(), d);
            auto& pos = mono_pos[d];
            for (std::size_t i = 0; i < list.size(); ++i) pos.emplace(list[i], i);
            it = mono_list.emplace(d, std::move(list)).first;
        }
        return it->second;
    }

    std::size_t space_dim(int d) const { return d < 0 ? 0 : monomials(d).size(); }

    std::size_t dim(int m) const {
        std::size_t total = 0;
        for (int s : shifts) total += space_dim(m - s);
        return total;
    }

    std::size_t offset(int m, std::size_t slot) const {
        std::size_t off = 0;
        for (std::size_t a = 0; a < slot; ++a) off += space_dim(m - shifts[a]);
        return off;
    }

    std::size_t index_of(int d, const Monomial& mono) const {
        monomials(d);
        return mono_pos.at(d).at(mono);
    }

    // v at degree m, multiplied by the monomial mu.
    Row<K> mul_mono(int m, const Row<K>& v, const Monomial& mu) const {
        int m2 = m + mu.degree;
        Row<K> out(dim(m2), ring->field.zero());
        for (std::size_t a = 0; a < shifts.size(); ++a) {
            int d = m - shifts[a];
            if (d < 0) continue;
            const auto& monos = monomials(d);
            std::size_t src_off = offset(m, a);
            std::size_t dst_off = offset(m2, a);
            for (std::size_t i = 0; i < monos.size(); ++i) {
                const auto& c = v[src_off + i];
                if (ring->field.is_zero(c)) continue;
                std::size_t idx = dst_off + index_of(d + mu.degree, monos[i] * mu);
                out[idx] = ring->field.add(out[idx], c);
            }
        }
        return out;
    }

    Row<K> mul_var(int m, const Row<K>& v, std::size_t j) const {
        return mul_mono(m, v, Monomial::variable(ring->nvars(), j, 1));
    }
};

} // namespace detail

// Betti numbers of R/I from a minimal free resolution built level by level:
// kernels are computed degree by degree with plain linear algebra over the
// raw generators, never through a Groebner basis, which makes this a fully
// independent cross-check of the Koszul engine.  Cells are exact for every
// p <= pmax, q <= qmax; nothing outside the window is claimed.
template <class K>
BettiTable resolution_betti(const Ideal<K>& I, int pmax, int qmax) {
    const auto& R = I.ring_ptr();
    const auto& field = R->field;
    int n = static_cast<int>(R->nvars());

    for (const auto& g : I.gens()) {
        if (!g.is_homogeneous()) throw DomainError("resolution oracle requires homogeneous generators");
        if (g.degree() == 0) throw DomainError("resolution oracle does not handle the unit ideal");
    }

    BettiTable table;
    table.kind = BettiTable::Kind::QuotientRing;
    table.nvars = n;
    table.pmax = pmax;
    table.qmax = qmax;
    table.certified_complete = false;
    table.set(0, 0, 1);
    if (pmax < 1 || I.gens().empty()) return table;

    detail::ResFrame<K> prev{R, {0}, {}, {}};

    // Level 0: pieces of I spanned by monomial multiples of the raw
    // generators; generators that survive graded Nakayama land in column 1.
    int cap = 1 + qmax;
    std::vector<std::vector<Row<K>>> kernel(cap + 1);
    std::vector<int> next_degs;
    std::vector<Row<K>> next_vecs;
    for (int m = 1; m <= cap; ++m) {
        Rref<K> span(field, prev.dim(m));
        for (const auto& f : I.gens()) {
            int d = m - f.degree();
            if (d < 0) continue;
            Row<K> flat(prev.space_dim(f.degree()), field.zero());
            for (const auto& t : f.terms) flat[prev.index_of(f.degree(), t.m)] = t.c;
            for (const auto& mu : prev.monomials(d)) span.add(prev.mul_mono(f.degree(), flat, mu));
        }
        kernel[m] = span.rows();
        Rref<K> seed(field, prev.dim(m));
        for (const auto& w : kernel[m - 1])
            for (int j = 0; j < n; ++j) seed.add(prev.mul_var(m - 1, w, static_cast<std::size_t>(j)));
        for (const auto& w : kernel[m]) {
            Row<K> copy = w;
            if (seed.add(std::move(copy))) {
                next_degs.push_back(m);
                next_vecs.push_back(w);
                table.set(1, m - 1, table.at(1, m - 1) + 1);
            }
        }
    }

    // Levels >= 1: kernel of F_l -> F_{l-1} per degree, new column per level.
    for (int level = 1; level < pmax; ++level) {
        if (next_degs.empty()) break;
        detail::ResFrame<K> cur{R, next_degs, {}, {}};
        std::vector<int> gen_degs = std::move(next_degs);
        std::vector<Row<K>> gen_vecs = std::move(next_vecs);
        next_degs.clear();
        next_vecs.clear();

        cap = (level + 1) + qmax;
        std::vector<std::vector<Row<K>>> ker(cap + 1);
        for (int m = 1; m <= cap; ++m) {
            std::size_t src_dim = cur.dim(m);
            std::size_t dst_dim = prev.dim(m);
            if (src_dim == 0) continue;
            // columns of the degree-m matrix of the map, then transposed for
            // the row-oriented kernel routine
            std::vector<Row<K>> cols;
            cols.reserve(src_dim);
            for (std::size_t g = 0; g < gen_degs.size(); ++g) {
                int d = m - gen_degs[g];
                if (d < 0) continue;
                for (const auto& mu : cur.monomials(d)) cols.push_back(prev.mul_mono(gen_degs[g], gen_vecs[g], mu));
            }
            std::vector<Row<K>> rows(dst_dim, Row<K>(src_dim, field.zero()));
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (std::size_t r = 0; r < dst_dim; ++r) rows[r][c] = cols[c][r];
            ker[m] = kernel_basis(field, rows, src_dim);

            Rref<K> seed(field, src_dim);
            for (const auto& w : ker[m - 1])
                for (int j = 0; j < n; ++j) seed.add(cur.mul_var(m - 1, w, static_cast<std::size_t>(j)));
            for (const auto& w : ker[m]) {
                Row<K> copy = w;
                if (seed.add(std::move(copy))) {
                    next_degs.push_back(m);
                    next_vecs.push_back(w);
                    int q = m - (level + 1);
                    if (q >= 0 && q <= qmax) table.set(level + 1, q, table.at(level + 1, q) + 1);
                }
            }
        }
        prev = std::move(cur);
    }
    return table;
}

} // namespace syz

#endif
