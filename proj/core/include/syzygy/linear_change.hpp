#ifndef SYZYGY_LINEAR_CHANGE_HPP
#define SYZYGY_LINEAR_CHANGE_HPP

#include <vector>

#include "syzygy/linalg.hpp"
#include "syzygy/polynomial.hpp"
#include "syzygy/rng.hpp"

namespace syz {

// An invertible linear change of coordinates on P^N.  The matrix acts on
// points by (T x)_i = sum_j T[i][j] x_j, and on polynomials by substitution
// f |-> f(T x), so V(apply(f)) = T^{-1} V(f).  In particular a change with
// first column q moves q to the coordinate point (1:0:...:0).
template <class K>
class LinearChange {
public:
    LinearChange(const Ring<K>& R, std::vector<Row<K>> matrix) : mat_(std::move(matrix)) {
        if (mat_.size() != R.nvars()) throw DomainError("linear change must be square of size nvars");
        auto inv = mat_inverse(R.field, mat_);
        if (!inv) throw DomainError("linear change of coordinates must be invertible");
        inv_ = std::move(*inv);
    }

    static LinearChange identity(const Ring<K>& R) {
        std::size_t n = R.nvars();
        std::vector<Row<K>> m(n, Row<K>(n, R.field.zero()));
        for (std::size_t i = 0; i < n; ++i) m[i][i] = R.field.one();
        return LinearChange(R, std::move(m));
    }

    // Invertible matrix with uniformly random entries (retry until the
    // determinant is nonzero; over GF(p) almost every draw succeeds).
    static LinearChange random(const Ring<K>& R, Rng& rng) {
        std::size_t n = R.nvars();
        for (int attempt = 0; attempt < 64; ++attempt) {
            std::vector<Row<K>> m(n, Row<K>(n, R.field.zero()));
            for (auto& row : m)
                for (auto& x : row) x = random_elem(R.field, rng);
            if (mat_rank(R.field, m, n) == n) return LinearChange(R, std::move(m));
        }
        throw DomainError("failed to draw an invertible matrix");
    }

    // A change moving the coordinate point e0 to q: the first column is q,
    // the remaining columns are unit vectors skipping the first nonzero
    // coordinate of q.
    static LinearChange normalizing(const Ring<K>& R, const Row<K>& q) {
        std::size_t n = R.nvars();
        if (q.size() != n) throw DomainError("point has wrong length");
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!R.field.is_zero(q[i])) {
                piv = i;
                break;
            }
        }
        if (piv == n) throw DomainError("cannot normalize the zero point");
        std::vector<Row<K>> m(n, Row<K>(n, R.field.zero()));
        for (std::size_t i = 0; i < n; ++i) m[i][0] = q[i];
        std::size_t col = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == piv) continue;
            m[i][col++] = R.field.one();
        }
        return LinearChange(R, std::move(m));
    }

    static typename K::elem random_elem(const K& field, Rng& rng) {
        if constexpr (is_gf_v<K>) {
            return rng.below(field.modulus());
        } else {
            // Small integers keep rational arithmetic cheap.
            long long v = static_cast<long long>(rng.below(201)) - 100;
            return field.from_long(v);
        }
    }

    const std::vector<Row<K>>& matrix() const { return mat_; }
    const std::vector<Row<K>>& inverse_matrix() const { return inv_; }

    Poly<K> apply(const Ring<K>& R, const Poly<K>& f) const { return substitute(R, f, mat_); }
    Poly<K> apply_inverse(const Ring<K>& R, const Poly<K>& f) const { return substitute(R, f, inv_); }

    Row<K> apply_to_point(const Ring<K>& R, const Row<K>& x) const { return mat_apply(R.field, mat_, x); }

    LinearChange then(const Ring<K>& R, const LinearChange& second) const {
        // (this ∘ second) as substitution: first substitute via this, then
        // via second; on matrices that is mat_ * second.mat_.
        std::size_t n = R.nvars();
        std::vector<Row<K>> m(n, Row<K>(n, R.field.zero()));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto acc = R.field.zero();
                for (std::size_t k = 0; k < n; ++k)
                    acc = R.field.add(acc, R.field.mul(mat_[i][k], second.mat_[k][j]));
                m[i][j] = acc;
            }
        return LinearChange(R, std::move(m));
    }

private:
    static Poly<K> substitute(const Ring<K>& R, const Poly<K>& f, const std::vector<Row<K>>& m) {
        std::vector<Poly<K>> images(R.nvars());
        for (std::size_t i = 0; i < R.nvars(); ++i) {
            std::vector<Term<K>> terms;
            for (std::size_t j = 0; j < R.nvars(); ++j)
                if (!R.field.is_zero(m[i][j]))
                    terms.push_back(Term<K>{Monomial::variable(R.nvars(), j), m[i][j]});
            images[i] = poly_normalize(R, std::move(terms));
        }
        return poly_substitute_all(R, f, images);
    }

    std::vector<Row<K>> mat_;
    std::vector<Row<K>> inv_;
};

} // namespace syz

#endif
