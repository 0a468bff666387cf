#ifndef SYZYGY_BETTI_HPP
#define SYZYGY_BETTI_HPP

#include <map>
#include <sstream>

#include "syzygy/combinat.hpp"
#include "syzygy/module.hpp"

namespace syz {

// Graded Betti numbers β_{p,q}(M) = dim_k Tor_p(M, k)_{p+q}, displayed with
// rows indexed by q and columns by p (Macaulay2 layout).  For a projective
// scheme X we tabulate the coordinate ring R_X = R/I_X, so β_{0,0} = 1 and
// the q = 1 row is the linear strand of the ideal.
//
// Regularity convention: reg(X) means reg(I_X) = reg(R/I_X) + 1 throughout;
// `reg` below follows that convention.  β_{p,q}(I) = β_{p+1,q-1}(R/I).
struct BettiTable {
    enum class Kind { QuotientRing, IdealModule, Module };

    Kind kind = Kind::Module;
    int nvars = 0;                 // variables of the acting polynomial ring
    int pmax = 0;                  // columns computed: 0..pmax
    int qmax = 0;                  // rows computed: 0..qmax
    bool certified_complete = false; // all rows q > qmax provably vanish
    int reg_row_bound = -1;        // certified bound on the last nonzero row, -1 if unknown
    std::map<std::pair<int, int>, long long> cells; // nonzero entries only

    long long at(int p, int q) const {
        auto it = cells.find({p, q});
        return it == cells.end() ? 0 : it->second;
    }

    void set(int p, int q, long long v) {
        if (v != 0) cells[{p, q}] = v;
    }

    bool column_zero(int p) const {
        for (const auto& [pq, v] : cells)
            if (pq.first == p && v != 0) return false;
        return true;
    }

    int max_nonzero_col() const {
        int c = -1;
        for (const auto& [pq, v] : cells)
            if (v != 0) c = std::max(c, pq.first);
        return c;
    }

    int max_nonzero_row() const {
        int r = -1;
        for (const auto& [pq, v] : cells)
            if (v != 0) r = std::max(r, pq.second);
        return r;
    }

    long long total_rank() const {
        long long t = 0;
        for (const auto& [pq, v] : cells) {
            (void)pq;
            t += v;
        }
        return t;
    }

    std::string grid() const {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> head{"q\\p"};
        for (int p = 0; p <= pmax; ++p) head.push_back(std::to_string(p));
        rows.push_back(head);
        for (int q = 0; q <= qmax; ++q) {
            std::vector<std::string> line{std::to_string(q)};
            for (int p = 0; p <= pmax; ++p) {
                long long v = at(p, q);
                line.push_back(v == 0 ? "-" : std::to_string(v));
            }
            rows.push_back(line);
        }
        std::vector<std::size_t> width(head.size(), 0);
        for (const auto& r : rows)
            for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
        std::ostringstream out;
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) out << "  ";
                out << std::string(width[i] - r[i].size(), ' ') << r[i];
            }
            out << '\n';
        }
        if (!certified_complete) out << "(rows above q=" << qmax << " not certified; raise qmax)\n";
        return out.str();
    }

    std::string csv() const {
        std::ostringstream out;
        out << "q\\p";
        for (int p = 0; p <= pmax; ++p) out << ',' << p;
        out << '\n';
        for (int q = 0; q <= qmax; ++q) {
            out << q;
            for (int p = 0; p <= pmax; ++p) out << ',' << at(p, q);
            out << '\n';
        }
        return out.str();
    }

    std::string markdown() const {
        std::ostringstream out;
        out << "| q\\p |";
        for (int p = 0; p <= pmax; ++p) out << ' ' << p << " |";
        out << "\n|---|";
        for (int p = 0; p <= pmax; ++p) out << "---|";
        out << '\n';
        for (int q = 0; q <= qmax; ++q) {
            out << "| " << q << " |";
            for (int p = 0; p <= pmax; ++p) {
                long long v = at(p, q);
                out << ' ' << (v == 0 ? std::string("-") : std::to_string(v)) << " |";
            }
            out << '\n';
        }
        return out.str();
    }
};

// ---- Regularity bound from the Taylor complex ------------------------------
//
// For a monomial ideal with minimal generators m_1..m_g the Taylor complex
// resolves the quotient, so reg(R/in I) <= max over nonempty J of
// (deg lcm(m_J) - |J|), and reg(R/I) <= reg(R/in I).  Subsets are enumerated
// exactly when g is small; beyond that the crude bound sum(deg m_i - 1)
// still dominates every subset term.
namespace detail {

inline void taylor_dfs(const std::vector<Monomial>& lms, std::size_t i, Monomial cur, int count, int& best) {
    if (i == lms.size()) {
        if (count > 0) best = std::max(best, cur.degree - count);
        return;
    }
    taylor_dfs(lms, i + 1, cur, count, best);
    taylor_dfs(lms, i + 1, count == 0 ? lms[i] : cur.lcm(lms[i]), count + 1, best);
}

} // namespace detail

inline int taylor_reg_bound(const std::vector<Monomial>& lms) {
    if (lms.empty()) return 0; // zero ideal: reg(R) = 0
    if (lms.size() <= 20) {
        int best = 0;
        detail::taylor_dfs(lms, 0, Monomial(lms[0].nvars()), 0, best);
        return best;
    }
    int total = 0;
    for (const auto& m : lms) total += m.degree - 1;
    return std::max(total, 0);
}

template <class K>
int taylor_reg_bound(const Ideal<K>& I) {
    std::vector<Monomial> lms;
    for (const auto& g : I.canonical_gb()) lms.push_back(g.terms.front().m);
    return taylor_reg_bound(lms);
}

// ---- Koszul homology engine -------------------------------------------------
//
// β_{p,q}(M) is read off the Koszul strand in internal degree p+q:
//
//   Λ^{p+1}V ⊗ M_{q-1}  --δ-->  Λ^p V ⊗ M_q  --δ-->  Λ^{p-1}V ⊗ M_{q+1}
//
//   β_{p,q}(M) = C(n,p)·dim M_q − rank δ_{(p,q)} − rank δ_{(p+1,q-1)}
//
// with δ(e_S ⊗ v) = Σ_r (−1)^{r−1} e_{S∖j_r} ⊗ x_{j_r}·v for S = {j_1<…<j_p}.
// Each rank is cached and serves two adjacent cells, and only the module
// pieces M_0..M_{qmax+1} are ever touched, so every reported cell is exact.
namespace detail {

inline std::vector<uint32_t> subsets_of_size(int n, int k) {
    std::vector<uint32_t> out;
    if (k < 0 || k > n) return out;
    for (uint32_t mask = 0; mask < (1u << n); ++mask)
        if (__builtin_popcount(mask) == k) out.push_back(mask);
    return out;
}

template <class K>
class KoszulEngine {
public:
    KoszulEngine(const PieceModule<K>& M, int qmax) : M_(M), n_(static_cast<int>(M.ring().nvars())), qmax_(qmax) {
        if (M.mmax() < qmax + 1) throw DomainError("koszul engine: module pieces do not reach qmax+1");
        subset_pos_.assign(static_cast<std::size_t>(n_) + 2, {});
        for (int k = 0; k <= n_ + 1; ++k) {
            if (k > n_) continue;
            auto list = subsets_of_size(n_, k);
            std::vector<int> pos(1u << n_, -1);
            for (std::size_t i = 0; i < list.size(); ++i) pos[list[i]] = static_cast<int>(i);
            subsets_.push_back(std::move(list));
            subset_pos_[k] = std::move(pos);
        }
    }

    long long cell(int p, int q) {
        if (p < 0 || q < 0 || p > n_) return 0;
        long long dim_mq = M_.dim(q);
        if (dim_mq == 0) return 0;
        long long chain = binom(n_, p).template convert_to<long long>() * dim_mq;
        return chain - rank_delta(p, q) - rank_delta(p + 1, q - 1);
    }

private:
    // Coordinates of x_j * (basis b of M_q) in the basis of M_{q+1}.
    const std::vector<std::vector<Row<K>>>& action(int q) {
        auto it = action_cache_.find(q);
        if (it != action_cache_.end()) return it->second;
        int d = M_.dim(q);
        std::vector<std::vector<Row<K>>> act(n_);
        for (int j = 0; j < n_; ++j) {
            act[j].reserve(d);
            for (int b = 0; b < d; ++b) {
                Row<K> img = M_.mul_var(q, M_.basis_row(q, b), static_cast<std::size_t>(j));
                act[j].push_back(M_.express(q + 1, std::move(img), "koszul action"));
            }
        }
        return action_cache_.emplace(q, std::move(act)).first->second;
    }

    long long rank_delta(int p, int q) {
        if (p <= 0 || p > n_ || q < 0) return 0;
        auto key = std::make_pair(p, q);
        auto it = rank_cache_.find(key);
        if (it != rank_cache_.end()) return it->second;
        long long r = compute_rank(p, q);
        rank_cache_.emplace(key, r);
        return r;
    }

    long long compute_rank(int p, int q) {
        int dim_src = M_.dim(q);
        int dim_dst = M_.dim(q + 1);
        if (dim_src == 0 || dim_dst == 0) return 0;
        const auto& S_list = subsets_[p];
        const auto& T_pos = subset_pos_[p - 1];
        std::size_t target_dim = subsets_[p - 1].size() * static_cast<std::size_t>(dim_dst);
        const auto& act = action(q);
        const auto& field = M_.ring().field;
        Rref<K> rref(field, target_dim);
        for (uint32_t S : S_list) {
            for (int a = 0; a < dim_src; ++a) {
                Row<K> image(target_dim, field.zero());
                int r = 0;
                for (int j = 0; j < n_; ++j) {
                    if (!(S & (1u << j))) continue;
                    ++r; // 1-based position of j inside S
                    bool negate = (r % 2 == 0);
                    uint32_t T = S & ~(1u << j);
                    std::size_t off = static_cast<std::size_t>(T_pos[T]) * dim_dst;
                    const Row<K>& av = act[j][a];
                    for (int b = 0; b < dim_dst; ++b) {
                        if (field.is_zero(av[b])) continue;
                        auto c = negate ? field.neg(av[b]) : av[b];
                        image[off + b] = field.add(image[off + b], c);
                    }
                }
                rref.add(std::move(image));
            }
        }
        return static_cast<long long>(rref.dim());
    }

    const PieceModule<K>& M_;
    int n_;
    int qmax_;
    std::vector<std::vector<uint32_t>> subsets_;
    std::vector<std::vector<int>> subset_pos_;
    std::map<int, std::vector<std::vector<Row<K>>>> action_cache_;
    std::map<std::pair<int, int>, long long> rank_cache_;
};

} // namespace detail

// Betti table of an arbitrary piece module.  reg_row_bound, when >= 0, is a
// caller-certified bound on the last row that can be nonzero; the table is
// marked complete when that bound fits inside the computed window.
template <class K>
BettiTable module_betti(const PieceModule<K>& M, int pmax, int qmax, int reg_row_bound = -1) {
    if (M.ring().nvars() > 20) throw DomainError("koszul engine limited to 20 variables");
    BettiTable table;
    table.kind = BettiTable::Kind::Module;
    table.nvars = static_cast<int>(M.ring().nvars());
    table.pmax = pmax;
    table.qmax = qmax;
    table.reg_row_bound = reg_row_bound;
    table.certified_complete = reg_row_bound >= 0 && reg_row_bound <= qmax;
    detail::KoszulEngine<K> engine(M, qmax);
    for (int q = 0; q <= qmax; ++q)
        for (int p = 0; p <= pmax; ++p) table.set(p, q, engine.cell(p, q));
    return table;
}

// Betti table of R/I (the table of the scheme cut out by I).
template <class K>
BettiTable betti_table_quotient(const Ideal<K>& I, int pmax, int qmax) {
    int bound = taylor_reg_bound(I);
    auto pieces = pieces_quotient_ring(I, qmax + 1);
    BettiTable t = module_betti(*pieces, pmax, qmax, bound);
    t.kind = BettiTable::Kind::QuotientRing;
    return t;
}

// Betti table of I viewed as a module: β_{p,q}(I) = β_{p+1,q-1}(R/I), so the
// certified row bound shifts up by one.
template <class K>
BettiTable betti_table_ideal(const Ideal<K>& I, int pmax, int qmax) {
    int bound = taylor_reg_bound(I) + 1;
    auto pieces = pieces_ideal(I, qmax + 1);
    BettiTable t = module_betti(*pieces, pmax, qmax, bound);
    t.kind = BettiTable::Kind::IdealModule;
    return t;
}

// ---- Strand invariants ------------------------------------------------------
//
// Computed from a certified-complete quotient-ring table:
//   a  = largest p with β_{i,1} != 0 for 1 <= i <= p and β_{i,q} = 0 for all
//        i <= p, q >= 2 (a = 0 when no such p >= 1 exists),
//   b  = least p >= 1 with β_{i,1} = 0 for every i >= p,
//   reg = reg(I_X) = max{q + 1 : β_{p,q}(R/I) != 0 for some p >= 1} (0 if none),
//   pd / depth via Auslander-Buchsbaum over the polynomial ring.
struct StrandInvariants {
    int a = 0;
    int b = 1;
    int reg = 0;
    int pd = 0;
    int depth = 0;
    bool no_quadrics = false; // β_{1,1} = 0, which forces b = 1
};

inline StrandInvariants strand_invariants(const BettiTable& t) {
    if (t.kind != BettiTable::Kind::QuotientRing)
        throw DomainError("strand invariants are defined on quotient-ring tables");
    if (!t.certified_complete)
        throw TruncationError("betti table is not certified complete; recompute with qmax >= " +
                              std::to_string(std::max(t.reg_row_bound, t.qmax + 1)));
    if (t.pmax < t.nvars && !t.column_zero(t.pmax))
        throw TruncationError("betti table column window may truncate the resolution; recompute with pmax = " +
                              std::to_string(t.nvars));

    StrandInvariants s;
    int plimit = std::min(t.pmax, t.nvars);

    auto linear = [&](int p) { return t.at(p, 1); };
    auto has_high_row = [&](int p) {
        for (int q = 2; q <= t.qmax; ++q)
            if (t.at(p, q) != 0) return true;
        return false;
    };

    s.a = 0;
    for (int p = 1; p <= plimit; ++p) {
        bool clean = true;
        for (int i = 0; i <= p && clean; ++i)
            if (has_high_row(i)) clean = false;
        if (clean && linear(p) != 0)
            s.a = p;
        else
            break;
    }

    s.no_quadrics = linear(1) == 0;
    s.b = plimit + 1;
    for (int p = plimit; p >= 1; --p) {
        if (linear(p) != 0) break;
        s.b = p;
    }

    s.reg = 0;
    for (const auto& [pq, v] : t.cells)
        if (v != 0 && pq.first >= 1) s.reg = std::max(s.reg, pq.second + 1);

    s.pd = std::max(t.max_nonzero_col(), 0);
    s.depth = t.nvars - s.pd;

    if (!(0 <= s.a && s.a < s.b)) throw DomainError("strand invariant violation: expected 0 <= a < b");
    return s;
}

} // namespace syz

#endif
