#ifndef SYZYGY_MODULE_HPP
#define SYZYGY_MODULE_HPP

#include <functional>
#include <unordered_map>

#include "syzygy/ideal.hpp"
#include "syzygy/linalg.hpp"

namespace syz {

// A graded module presented degree-by-degree as a subquotient V/W of the
// free module  F = ⊕_a Ring(−shift_a).  The degree-m piece of F has one
// coordinate per (slot a, monomial of degree m − shift_a); V_m and W_m are
// given by spanning rows in those coordinates, with W ⊆ V.   All piece
// computations are exact: spans come from module generating sets, so no
// degree is ever approximated.
//
// Pieces are materialized for 0 ≤ m ≤ mmax at construction; the Betti
// engine, the PEI certification, and generator extraction all read from the
// same immutable piece data.  The span callbacks receive the module itself
// for frame services (monomial tables, accumulate).
template <class K>
class PieceModule {
public:
    using SpanFn = std::function<std::vector<Row<K>>(const PieceModule<K>&, int m)>;

    PieceModule(RingPtr<K> ring, std::vector<int> shifts, int mmax, SpanFn v_spans, SpanFn w_spans = nullptr)
        : ring_(std::move(ring)), shifts_(std::move(shifts)), mmax_(mmax) {
        pieces_.reserve(mmax_ + 1);
        for (int m = 0; m <= mmax_; ++m) {
            Piece piece{Rref<K>(ring_->field, frame_dim(m)), {}, 0};
            if (w_spans)
                for (auto& w : w_spans(*this, m)) piece.all.add(std::move(w));
            piece.w_dim = piece.all.dim();
            for (auto& v : v_spans(*this, m)) {
                auto idx = piece.all.add(std::move(v));
                if (idx) piece.quotient_rows.push_back(*idx);
            }
            pieces_.push_back(std::move(piece));
        }
    }

    const Ring<K>& ring() const { return *ring_; }
    const RingPtr<K>& ring_ptr() const { return ring_; }
    const std::vector<int>& shifts() const { return shifts_; }
    int mmax() const { return mmax_; }

    // Dimension of the degree-m piece of the ambient free module.
    std::size_t frame_dim(int m) const {
        std::size_t d = 0;
        for (int s : shifts_) d += space_dim(m - s);
        return d;
    }

    std::size_t slot_offset(int m, std::size_t slot) const {
        std::size_t off = 0;
        for (std::size_t a = 0; a < slot; ++a) off += space_dim(m - shifts_[a]);
        return off;
    }

    const std::vector<Monomial>& monomials(int d) const {
        auto it = mono_cache_.find(d);
        if (it == mono_cache_.end()) {
            MonoTable table;
            if (d >= 0) {
                table.list = monomials_of_degree(ring_->nvars(), d);
                for (std::size_t i = 0; i < table.list.size(); ++i) table.index.emplace(table.list[i], i);
            }
            it = mono_cache_.emplace(d, std::move(table)).first;
        }
        return it->second.list;
    }

    std::size_t monomial_index(int d, const Monomial& mono) const {
        monomials(d); // ensure cached
        return mono_cache_.at(d).index.at(mono);
    }

    int dim(int m) const {
        if (m < 0 || m > mmax_) return 0;
        return static_cast<int>(pieces_[m].quotient_rows.size());
    }

    int w_dim(int m) const {
        if (m < 0 || m > mmax_) return 0;
        return static_cast<int>(pieces_[m].w_dim);
    }

    // The b-th quotient-basis vector of the degree-m piece, as a frame row.
    const Row<K>& basis_row(int m, std::size_t b) const {
        const Piece& piece = pieces_.at(m);
        return piece.all.rows()[piece.quotient_rows[b]];
    }

    // Multiplies a degree-m frame row by the variable x_var.
    Row<K> mul_var(int m, const Row<K>& v, std::size_t var) const {
        Row<K> out(frame_dim(m + 1), ring_->field.zero());
        for (std::size_t a = 0; a < shifts_.size(); ++a) {
            int d = m - shifts_[a];
            if (d < 0) continue;
            const auto& monos = monomials(d);
            std::size_t src_off = slot_offset(m, a);
            std::size_t dst_off = slot_offset(m + 1, a);
            for (std::size_t i = 0; i < monos.size(); ++i) {
                const auto& c = v[src_off + i];
                if (ring_->field.is_zero(c)) continue;
                Monomial t = monos[i];
                t.e[var] += 1;
                t.degree += 1;
                std::size_t idx = dst_off + monomial_index(d + 1, t);
                out[idx] = ring_->field.add(out[idx], c);
            }
        }
        return out;
    }

    // Coordinates of a frame row in the quotient basis of the degree-m
    // piece, or nullopt if the vector does not lie in V_m.  Coordinates on
    // the W rows are discarded (they vanish in the quotient).
    std::optional<Row<K>> try_express(int m, Row<K> v) const {
        const Piece& piece = pieces_.at(m);
        std::vector<std::pair<std::size_t, typename K::elem>> coords;
        piece.all.reduce(v, &coords);
        for (const auto& x : v)
            if (!ring_->field.is_zero(x)) return std::nullopt;
        Row<K> out(piece.quotient_rows.size(), ring_->field.zero());
        std::unordered_map<std::size_t, std::size_t> rowpos;
        rowpos.reserve(piece.quotient_rows.size());
        for (std::size_t b = 0; b < piece.quotient_rows.size(); ++b) rowpos.emplace(piece.quotient_rows[b], b);
        for (const auto& [row, c] : coords) {
            auto it = rowpos.find(row);
            if (it != rowpos.end()) out[it->second] = c;
        }
        return out;
    }

    Row<K> express(int m, Row<K> v, const char* what) const {
        auto coords = try_express(m, std::move(v));
        if (!coords) throw DomainError(std::string("vector escapes the module piece in ") + what);
        return *coords;
    }

    // Embeds a polynomial of the acting ring into a slot of the degree-m
    // frame: row += c * (slot-embedding of mult * f).  deg(mult * f) must be
    // m - shift_slot.
    void accumulate(Row<K>& row, int m, std::size_t slot, const Poly<K>& f, const Monomial& mult,
                    const typename K::elem& c) const {
        int d = m - shifts_[slot];
        std::size_t off = slot_offset(m, slot);
        for (const auto& t : f.terms) {
            Monomial target = t.m * mult;
            if (target.degree != d) throw DomainError("accumulate: degree mismatch in frame embedding");
            std::size_t idx = off + monomial_index(d, target);
            row[idx] = ring_->field.add(row[idx], ring_->field.mul(t.c, c));
        }
    }

private:
    struct Piece {
        Rref<K> all;                             // W rows first, then the V completion
        std::vector<std::size_t> quotient_rows;  // rows forming a basis of V/W
        std::size_t w_dim;
    };
    struct MonoTable {
        std::vector<Monomial> list;
        std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    };

    std::size_t space_dim(int d) const {
        if (d < 0) return 0;
        return monomials(d).size();
    }

    RingPtr<K> ring_;
    std::vector<int> shifts_;
    int mmax_;
    std::vector<Piece> pieces_;
    mutable std::unordered_map<int, MonoTable> mono_cache_;
};

// ---- Span builders -------------------------------------------------------

// Spanning rows of the degree-m piece of an ideal inside its own ring
// (single slot, shift 0): all monomial multiples of the given generators.
template <class K>
std::vector<Row<K>> ideal_piece_rows(const PieceModule<K>& M, const std::vector<Poly<K>>& gens, int m) {
    std::vector<Row<K>> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int d = m - g.degree();
        if (d < 0) continue;
        for (const auto& mu : M.monomials(d)) {
            Row<K> row(M.frame_dim(m), M.ring().field.zero());
            M.accumulate(row, m, 0, g, mu, M.ring().field.one());
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

// The full degree-m piece of the ring (identity rows).
template <class K>
std::vector<Row<K>> full_space_rows(const PieceModule<K>& M, int m) {
    std::size_t n = M.frame_dim(m);
    std::vector<Row<K>> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Row<K> row(n, M.ring().field.zero());
        row[i] = M.ring().field.one();
        rows.push_back(std::move(row));
    }
    return rows;
}

// R/I as a module over R: V = everything, W = I, single slot.
template <class K>
std::shared_ptr<PieceModule<K>> pieces_quotient_ring(const Ideal<K>& I, int mmax) {
    return std::make_shared<PieceModule<K>>(
        I.ring_ptr(), std::vector<int>{0}, mmax,
        [](const PieceModule<K>& M, int m) { return full_space_rows(M, m); },
        [gb = I.canonical_gb()](const PieceModule<K>& M, int m) { return ideal_piece_rows(M, gb, m); });
}

// An ideal as a module over its own ring (V = I, W = 0).
template <class K>
std::shared_ptr<PieceModule<K>> pieces_ideal(const Ideal<K>& I, int mmax) {
    return std::make_shared<PieceModule<K>>(
        I.ring_ptr(), std::vector<int>{0}, mmax,
        [gb = I.canonical_gb()](const PieceModule<K>& M, int m) { return ideal_piece_rows(M, gb, m); });
}

// Quotient of nested ideals J/L as modules (L ⊆ J required).
template <class K>
std::shared_ptr<PieceModule<K>> pieces_ideal_quotient(const Ideal<K>& J, const Ideal<K>& L, int mmax) {
    require_compatible(J.ring(), L.ring(), "pieces_ideal_quotient");
    return std::make_shared<PieceModule<K>>(
        J.ring_ptr(), std::vector<int>{0}, mmax,
        [gb = J.canonical_gb()](const PieceModule<K>& M, int m) { return ideal_piece_rows(M, gb, m); },
        [gb = L.canonical_gb()](const PieceModule<K>& M, int m) { return ideal_piece_rows(M, gb, m); });
}

} // namespace syz

#endif
