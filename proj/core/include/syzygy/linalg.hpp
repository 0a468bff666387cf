#ifndef SYZYGY_LINALG_HPP
#define SYZYGY_LINALG_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "syzygy/field.hpp"

namespace syz {

template <class K>
using Row = std::vector<typename K::elem>;

// Row echelon form maintained incrementally, rows kept in insertion order.
// Every stored row is monic at its pivot, has zeros before its pivot, and is
// fully reduced against all rows stored before it; therefore applying the
// rows in insertion order is a valid forward substitution, remainders vanish
// exactly on span members, and extracted coordinates are the unique
// expression in the stored row basis.  Insertion order is preserved so
// callers can attach stable meaning to row indices (e.g. "rows added in
// phase one span the submodule W").
//
// Over GF(p) the reduction loop accumulates unreduced sums in uint64 and
// reduces lazily: with p < 2^31 an addend c*s stays below 2^62, so one
// conditional reduction per update keeps entries in range.  Stored rows are
// always canonical.
template <class K>
class Rref {
public:
    Rref(const K& field, std::size_t ncols) : F_(&field), ncols_(ncols) {}

    std::size_t ncols() const { return ncols_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Row<K>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Reduces v in place against the stored rows (insertion order).  If
    // coords is non-null, appends (row index, coefficient) pairs such that
    // v_original = sum coeff * row + v_reduced.
    void reduce(Row<K>& v, std::vector<std::pair<std::size_t, typename K::elem>>* coords = nullptr) const {
        if constexpr (is_gf_v<K>) {
            const std::uint64_t p = F_->modulus();
            constexpr std::uint64_t kGuard = 1ull << 62;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                std::size_t pc = pivots_[r];
                std::uint64_t c = v[pc] % p;
                v[pc] = c;
                if (c == 0) continue;
                if (coords) coords->emplace_back(r, c);
                std::uint64_t mc = p - c;
                const Row<K>& src = rows_[r];
                for (std::size_t j = pc; j < ncols_; ++j) {
                    std::uint64_t s = src[j];
                    if (s == 0) continue;
                    v[j] += mc * s;
                    if (v[j] >= kGuard) v[j] %= p;
                }
                v[pc] = 0;
            }
            for (auto& x : v) x %= p;
        } else {
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                std::size_t pc = pivots_[r];
                if (F_->is_zero(v[pc])) continue;
                auto c = v[pc];
                if (coords) coords->emplace_back(r, c);
                const Row<K>& src = rows_[r];
                for (std::size_t j = pc; j < ncols_; ++j)
                    if (!F_->is_zero(src[j])) v[j] = F_->sub(v[j], F_->mul(c, src[j]));
            }
        }
    }

    // Reduces v and, if a nonzero remainder survives, appends it as a new
    // monic row.  Returns the new row's index, or nullopt if v was already
    // in the span.
    std::optional<std::size_t> add(Row<K> v) {
        reduce(v);
        std::size_t pc = ncols_;
        for (std::size_t j = 0; j < ncols_; ++j) {
            if (!F_->is_zero(v[j])) {
                pc = j;
                break;
            }
        }
        if (pc == ncols_) return std::nullopt;
        auto inv = F_->inv(v[pc]);
        for (std::size_t j = pc; j < ncols_; ++j) v[j] = F_->mul(v[j], inv);
        rows_.push_back(std::move(v));
        pivots_.push_back(pc);
        return rows_.size() - 1;
    }

    bool contains(Row<K> v) const {
        reduce(v);
        for (const auto& x : v)
            if (!F_->is_zero(x)) return false;
        return true;
    }

    // Clears every pivot column in every other row (full reduced form).
    // Row indices and pivots are unchanged.
    void back_substitute() {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (std::size_t o = 0; o < rows_.size(); ++o) {
                if (o == r) continue;
                auto c = rows_[o][pivots_[r]];
                if (F_->is_zero(c)) continue;
                for (std::size_t j = 0; j < ncols_; ++j)
                    if (!F_->is_zero(rows_[r][j]))
                        rows_[o][j] = F_->sub(rows_[o][j], F_->mul(c, rows_[r][j]));
            }
        }
    }

private:
    const K* F_;
    std::size_t ncols_;
    std::vector<Row<K>> rows_;
    std::vector<std::size_t> pivots_;
};

template <class K>
std::size_t mat_rank(const K& field, const std::vector<Row<K>>& rows, std::size_t ncols) {
    Rref<K> r(field, ncols);
    for (const auto& row : rows) r.add(row);
    return r.dim();
}

// Basis of { x : A x = 0 } where A is given by rows of length ncols.
// One vector per free column, in ascending free-column order.
template <class K>
std::vector<Row<K>> kernel_basis(const K& field, const std::vector<Row<K>>& rows, std::size_t ncols) {
    Rref<K> ref(field, ncols);
    for (const auto& row : rows) ref.add(row);
    ref.back_substitute();
    const auto& rr = ref.rows();
    const auto& piv = ref.pivots();
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<Row<K>> kernel;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        Row<K> v(ncols, field.zero());
        v[f] = field.one();
        for (std::size_t r = 0; r < rr.size(); ++r) v[piv[r]] = field.neg(rr[r][f]);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// Inverse of a square matrix, or nullopt if singular.  Works on the
// augmented matrix (A | I); rows of the augmented system are always
// independent, so A is invertible exactly when all pivots land in the left
// block.
template <class K>
std::optional<std::vector<Row<K>>> mat_inverse(const K& field, const std::vector<Row<K>>& rows) {
    std::size_t n = rows.size();
    Rref<K> ref(field, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw DomainError("matrix inverse requires a square matrix");
        Row<K> aug = rows[i];
        aug.resize(2 * n, field.zero());
        aug[n + i] = field.one();
        ref.add(std::move(aug));
    }
    if (ref.dim() != n) return std::nullopt;
    for (auto p : ref.pivots())
        if (p >= n) return std::nullopt;
    ref.back_substitute();
    // Each fully reduced row is (e_{pivot} | y) with y A = e_{pivot}, i.e.
    // y is the pivot-th row of the inverse.
    std::vector<Row<K>> inv(n, Row<K>(n, field.zero()));
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t p = ref.pivots()[r];
        for (std::size_t j = 0; j < n; ++j) inv[p][j] = ref.rows()[r][n + j];
    }
    return inv;
}

// Matrix-vector product A x where A is rows-of-length-ncols.
template <class K>
Row<K> mat_apply(const K& field, const std::vector<Row<K>>& rows, const Row<K>& x) {
    Row<K> out(rows.size(), field.zero());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto acc = field.zero();
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!field.is_zero(rows[i][j])) acc = field.add(acc, field.mul(rows[i][j], x[j]));
        out[i] = acc;
    }
    return out;
}

} // namespace syz

#endif
