#ifndef SYZYGY_PEI_HPP
#define SYZYGY_PEI_HPP

#include "syzygy/betti.hpp"

namespace syz {

// Partial elimination ideals with respect to the distinguished coordinate
// x0.  For homogeneous f with x0-degree e, write f = x0^e f_e + (lower
// x0-order terms); then
//
//   Ktilde_i(I) = { f in I : deg_x0 f <= i }   (an S-module, S = k[x1..xn])
//   K_i(I)      = { f_e : f in I, e <= i }     (an ideal of S)
//
// Under the canonical deglex order with x0 first, the leading term of a
// homogeneous polynomial attains its x0-degree, which gives exact
// extraction from the reduced Groebner basis G of I:
//
//   K_i(I)      = ( lead-x0-coefficient of g : g in G, d0(g) <= i )
//   Ktilde_i(I) = S-span{ x0^c g : g in G, d0(g) <= i, 0 <= c <= i - d0(g) }
//
// (If some f in Ktilde_i escaped the span, its normal form against G would
// be a nonzero element of I, and the division by generators of x0-leading
// degree <= i can only lower d0, so the normal form would have d0 <= i with
// a G-irreducible leading term, impossible.)  Both extractions are verified
// against direct degreewise linear algebra by certify_pei below; the
// filtration therefore stops at istar = max d0 over G and the stabilization
// index s is exact.

template <class K>
struct PeiData {
    RingPtr<K> R;                 // ambient ring k[x0..xn]
    RingPtr<K> S;                 // target ring k[x1..xn]
    std::vector<Poly<K>> gb;      // canonical Groebner basis of I
    std::vector<int> d0;          // d0 of each basis element
    int istar = 0;                // max d0; K_i = K_istar for i >= istar
    int s = 0;                    // least i with K_i = K_infinity
    std::vector<Ideal<K>> chain;  // K_0 .. K_istar
};

namespace detail {

// Image of an R-monomial in S, forgetting the x0-exponent.
inline Monomial drop_x0(const Monomial& m) {
    std::vector<std::uint16_t> e(m.e.begin() + 1, m.e.end());
    return Monomial(std::move(e));
}

} // namespace detail

// Splits g into its x0-coefficient polynomials: g = sum_a x0^a g_a with
// g_a in S, returned as (a, g_a) pairs for the nonzero g_a, a ascending.
template <class K>
std::vector<std::pair<int, Poly<K>>> x0_decompose(const Ring<K>& S, const Poly<K>& g) {
    std::map<int, std::vector<Term<K>>> parts;
    for (const auto& t : g.terms) parts[t.m.e[0]].push_back(Term<K>{detail::drop_x0(t.m), t.c});
    std::vector<std::pair<int, Poly<K>>> out;
    for (auto& [a, terms] : parts) out.emplace_back(a, poly_normalize(S, std::move(terms)));
    return out;
}

// The top x0-coefficient f_e of g (e = d0(g)), as a polynomial of S.
template <class K>
Poly<K> lead_x0_coefficient(const Ring<K>& S, const Poly<K>& g) {
    int e = d0_of(g);
    std::vector<Term<K>> terms;
    for (const auto& t : g.terms)
        if (t.m.e[0] == e) terms.push_back(Term<K>{detail::drop_x0(t.m), t.c});
    return poly_normalize(S, std::move(terms));
}

template <class K>
PeiData<K> pei_filtration(const Ideal<K>& I) {
    if (!I.gens_homogeneous()) throw DomainError("partial elimination ideals require a homogeneous ideal");
    if (I.ring().nvars() < 2) throw DomainError("partial elimination needs at least two variables");
    PeiData<K> P;
    P.R = I.ring_ptr();
    P.S = make_ring(P.R->field, std::vector<std::string>(P.R->vars.begin() + 1, P.R->vars.end()));
    P.gb = I.canonical_gb();
    for (const auto& g : P.gb) P.d0.push_back(d0_of(g));
    P.istar = 0;
    for (int e : P.d0) P.istar = std::max(P.istar, e);

    for (int i = 0; i <= P.istar; ++i) {
        std::vector<Poly<K>> gens;
        for (std::size_t j = 0; j < P.gb.size(); ++j)
            if (P.d0[j] <= i) gens.push_back(lead_x0_coefficient(*P.S, P.gb[j]));
        P.chain.emplace_back(P.S, std::move(gens));
    }

    P.s = P.istar;
    while (P.s > 0 && ideal_equal(P.chain[P.s - 1], P.chain[P.istar])) --P.s;
    return P;
}

// K_i(I); indices below 0 give the zero ideal, indices beyond istar repeat
// the stable ideal.
template <class K>
Ideal<K> pei(const PeiData<K>& P, int i) {
    if (i < 0) return Ideal<K>(P.S, {});
    return P.chain[std::min(i, P.istar)];
}

template <class K>
Ideal<K> pei(const Ideal<K>& I, int i) {
    return pei(pei_filtration(I), i);
}

// ---- Ktilde piece modules ---------------------------------------------------
//
// Ktilde_i lives in the free S-module with slots a = 0..i holding the
// x0^a-coefficient, so slot a carries shift a.  Spanning rows in degree m
// are the S-monomial multiples of the x0^c g extraction generators.
namespace detail {

template <class K>
void accumulate_r_element(const PieceModule<K>& M, Row<K>& row, int m, const Poly<K>& rpoly, int x0shift,
                          const Monomial& mu) {
    for (const auto& t : rpoly.terms) {
        int slot = t.m.e[0] + x0shift;
        Monomial sm = drop_x0(t.m) * mu;
        std::size_t idx = M.slot_offset(m, static_cast<std::size_t>(slot)) +
                          M.monomial_index(sm.degree, sm);
        row[idx] = M.ring().field.add(row[idx], t.c);
    }
}

// Spanning rows of Ktilde_i in degree m (frame slots 0..slots_max).
template <class K>
std::vector<Row<K>> ktilde_span_rows(const PieceModule<K>& M, const PeiData<K>& P, int i, int m) {
    std::vector<Row<K>> rows;
    for (std::size_t j = 0; j < P.gb.size(); ++j) {
        if (P.d0[j] > i) continue;
        int dg = P.gb[j].degree();
        for (int c = 0; c + P.d0[j] <= i; ++c) {
            int d = m - c - dg;
            if (d < 0) continue;
            for (const auto& mu : M.monomials(d)) {
                Row<K> row(M.frame_dim(m), M.ring().field.zero());
                accumulate_r_element(M, row, m, P.gb[j], c, mu);
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

// Spanning rows of I itself inside slots 0..slots_max (valid for degrees
// m <= slots_max, where every x0-exponent fits in the frame).
template <class K>
std::vector<Row<K>> full_ideal_span_rows(const PieceModule<K>& M, const PeiData<K>& P, int m) {
    std::vector<Row<K>> rows;
    std::size_t n_r = P.R->nvars();
    for (std::size_t j = 0; j < P.gb.size(); ++j) {
        int d = m - P.gb[j].degree();
        if (d < 0) continue;
        for (const auto& mu_r : monomials_of_degree(n_r, d)) {
            Row<K> row(M.frame_dim(m), M.ring().field.zero());
            accumulate_r_element(M, row, m, P.gb[j], mu_r.e[0], drop_x0(mu_r));
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline std::vector<int> slot_shifts(int slots_max) {
    std::vector<int> shifts(slots_max + 1);
    for (int a = 0; a <= slots_max; ++a) shifts[a] = a;
    return shifts;
}

} // namespace detail

// Ktilde_i(I) as a graded S-module with pieces up to mmax.
template <class K>
std::shared_ptr<PieceModule<K>> ktilde_pieces(const PeiData<K>& P, int i, int mmax) {
    if (i < 0) throw DomainError("ktilde index must be nonnegative");
    return std::make_shared<PieceModule<K>>(
        P.S, detail::slot_shifts(i), mmax,
        [&P, i](const PieceModule<K>& M, int m) { return detail::ktilde_span_rows(M, P, i, m); });
}

// Ktilde_i / Ktilde_h (h < i) as a graded S-module.
template <class K>
std::shared_ptr<PieceModule<K>> ktilde_quotient_pieces(const PeiData<K>& P, int i, int h, int mmax) {
    if (h >= i) throw DomainError("ktilde quotient needs h < i");
    return std::make_shared<PieceModule<K>>(
        P.S, detail::slot_shifts(i), mmax,
        [&P, i](const PieceModule<K>& M, int m) { return detail::ktilde_span_rows(M, P, i, m); },
        [&P, h](const PieceModule<K>& M, int m) {
            return h < 0 ? std::vector<Row<K>>{} : detail::ktilde_span_rows(M, P, h, m);
        });
}

// I / Ktilde_h as a graded S-module.  The slot range 0..mmax accommodates
// every x0-exponent that can occur in degrees <= mmax; rows beyond mmax are
// not represented (the module is not finitely generated over S).
template <class K>
std::shared_ptr<PieceModule<K>> ideal_over_ktilde_pieces(const PeiData<K>& P, int h, int mmax) {
    return std::make_shared<PieceModule<K>>(
        P.S, detail::slot_shifts(mmax), mmax,
        [&P](const PieceModule<K>& M, int m) { return detail::full_ideal_span_rows(M, P, m); },
        [&P, h](const PieceModule<K>& M, int m) {
            return h < 0 ? std::vector<Row<K>>{} : detail::ktilde_span_rows(M, P, h, m);
        });
}

// ---- Certification ----------------------------------------------------------
//
// Confirms the Groebner extraction against the definition, degree by
// degree: Ktilde_i pieces must equal { f in I_m : deg_x0 f <= i } computed
// by plain linear algebra on I_m, and K_i pieces must equal the top-slot
// projection of that space.  Dimension identities for the filtration exact
// sequences are checked alongside.  Everything up to degree mcap is
// certified; a failure throws DomainError naming the first bad cell.
struct PeiCertification {
    int mcap = 0;
    int istar = 0;
    long long compared_cells = 0;
};

template <class K>
PeiCertification certify_pei(const Ideal<K>& I, const PeiData<K>& P, int mcap) {
    const auto& field = P.R->field;
    std::size_t n_r = P.R->nvars();
    PeiCertification cert;
    cert.mcap = mcap;
    cert.istar = P.istar;

    // R-framed pieces of I from the raw generators: one slot, degree m.
    std::vector<std::vector<Monomial>> rmonos(mcap + 1);
    std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> rindex(mcap + 1);
    for (int m = 0; m <= mcap; ++m) {
        rmonos[m] = monomials_of_degree(n_r, m);
        for (std::size_t t = 0; t < rmonos[m].size(); ++t) rindex[m].emplace(rmonos[m][t], t);
    }
    auto ideal_basis = [&](int m) {
        Rref<K> span(field, rmonos[m].size());
        for (const auto& g : I.gens()) {
            int d = m - g.degree();
            if (d < 0) continue;
            for (const auto& mu : monomials_of_degree(n_r, d)) {
                Row<K> row(rmonos[m].size(), field.zero());
                for (const auto& t : g.terms) {
                    std::size_t idx = rindex[m].at(t.m * mu);
                    row[idx] = field.add(row[idx], t.c);
                }
                span.add(std::move(row));
            }
        }
        return span.rows();
    };

    for (int i = 0; i <= P.istar; ++i) {
        auto kt = ktilde_pieces(P, i, mcap);
        auto ki_pieces = pieces_ideal(pei(P, i), mcap);
        for (int m = 0; m <= mcap; ++m) {
            auto basis = ideal_basis(m);
            // Direct description: elements of I_m whose coordinates on
            // monomials with x0-exponent > i all vanish.
            std::vector<std::size_t> bad;
            for (std::size_t t = 0; t < rmonos[m].size(); ++t)
                if (rmonos[m][t].e[0] > i) bad.push_back(t);
            std::vector<Row<K>> constraints(bad.size(), Row<K>(basis.size(), field.zero()));
            for (std::size_t b = 0; b < basis.size(); ++b)
                for (std::size_t c = 0; c < bad.size(); ++c) constraints[c][b] = basis[b][bad[c]];
            auto combos = kernel_basis(field, constraints, basis.size());

            // Assemble the direct vectors and translate them to the slotted
            // S-frame of the extraction module.
            Rref<K> top_proj(field, m - i >= 0 ? kt->monomials(m - i).size() : 0);
            std::vector<Row<K>> direct;
            for (const auto& combo : combos) {
                Row<K> v(rmonos[m].size(), field.zero());
                for (std::size_t b = 0; b < basis.size(); ++b) {
                    if (field.is_zero(combo[b])) continue;
                    for (std::size_t t = 0; t < v.size(); ++t)
                        v[t] = field.add(v[t], field.mul(combo[b], basis[b][t]));
                }
                direct.push_back(std::move(v));
            }
            for (const auto& v : direct) {
                Row<K> framed(kt->frame_dim(m), field.zero());
                Row<K> top(m - i >= 0 ? kt->monomials(m - i).size() : 0, field.zero());
                for (std::size_t t = 0; t < v.size(); ++t) {
                    if (field.is_zero(v[t])) continue;
                    int a = rmonos[m][t].e[0];
                    Monomial sm = detail::drop_x0(rmonos[m][t]);
                    framed[kt->slot_offset(m, a) + kt->monomial_index(sm.degree, sm)] = v[t];
                    if (a == i) top[kt->monomial_index(sm.degree, sm)] = v[t];
                }
                if (!kt->try_express(m, std::move(framed)))
                    throw DomainError("pei certification: direct Ktilde_" + std::to_string(i) +
                                      " vector escapes the extraction span in degree " + std::to_string(m));
                top_proj.add(std::move(top));
            }
            if (kt->dim(m) != static_cast<int>(direct.size()))
                throw DomainError("pei certification: Ktilde_" + std::to_string(i) + " dimension mismatch in degree " +
                                  std::to_string(m) + " (extraction " + std::to_string(kt->dim(m)) + ", direct " +
                                  std::to_string(direct.size()) + ")");

            // Top-slot projection must equal (K_i)_{m-i}.
            if (m - i >= 0) {
                int u = m - i;
                if (ki_pieces->dim(u) != static_cast<int>(top_proj.dim()))
                    throw DomainError("pei certification: K_" + std::to_string(i) + " dimension mismatch in degree " +
                                      std::to_string(u));
                for (int b = 0; b < ki_pieces->dim(u); ++b) {
                    Row<K> w = ki_pieces->basis_row(u, b);
                    if (!top_proj.contains(std::move(w)))
                        throw DomainError("pei certification: K_" + std::to_string(i) +
                                          " is not covered by the top-slot projection in degree " + std::to_string(u));
                }
            }
            cert.compared_cells += 1;
        }
    }

    // Exact-sequence dimension identities on the extraction modules:
    //   dim (Ktilde_i/Ktilde_{i-1})_m = dim (K_i)_{m-i}
    //   dim (Ktilde_i/Ktilde_{i-1})_m = dim (Ktilde_{i-1}/Ktilde_{i-2})_{m-1}
    //                                   + dim (K_i/K_{i-1})_{m-i}
    for (int i = 1; i <= P.istar; ++i) {
        auto q_i = ktilde_quotient_pieces(P, i, i - 1, mcap);
        auto q_prev = i >= 2 ? ktilde_quotient_pieces(P, i - 1, i - 2, mcap)
                             : ktilde_quotient_pieces(P, i - 1, -1, mcap);
        auto ki = pieces_ideal_quotient(pei(P, i), pei(P, i - 1), mcap);
        auto ki_abs = pieces_ideal(pei(P, i), mcap);
        for (int m = 0; m <= mcap; ++m) {
            int u = m - i;
            int lhs = q_i->dim(m);
            if (lhs != (u >= 0 ? ki_abs->dim(u) : 0))
                throw DomainError("pei certification: graded piece identity fails at (i,m)=(" + std::to_string(i) +
                                  "," + std::to_string(m) + ")");
            int rhs = (m >= 1 ? q_prev->dim(m - 1) : 0) + (u >= 0 ? ki->dim(u) : 0);
            if (lhs != rhs)
                throw DomainError("pei certification: filtration sequence identity fails at (i,m)=(" +
                                  std::to_string(i) + "," + std::to_string(m) + ")");
        }
    }
    return cert;
}

// ---- Derived invariants -----------------------------------------------------

// t from the projection analysis: the number of independent linear forms in
// K_1 (for an inner projection from a smooth point this is the codimension
// of the embedded tangent space).
template <class K>
int pei_t_invariant(const PeiData<K>& P) {
    auto k1 = pei(P, 1);
    auto pieces = pieces_ideal(k1, 1);
    return pieces->dim(1);
}

// Linear forms cutting the embedded tangent space at the coordinate point
// (1:0:...:0), as an ideal of S.  Differentiating the generators of the
// saturated ideal and evaluating at the point leaves no x0 term (Euler's
// relation kills it), so the rows genuinely live in S.
template <class K>
Ideal<K> tangent_space_ideal(const Ideal<K>& I, const RingPtr<K>& S) {
    const auto& R = I.ring();
    const auto& field = R.field;
    std::vector<typename K::elem> e0(R.nvars(), field.zero());
    e0[0] = field.one();
    std::vector<Poly<K>> forms;
    for (const auto& g : I.gens()) {
        std::vector<Term<K>> terms;
        for (std::size_t j = 1; j < R.nvars(); ++j) {
            auto c = poly_eval(R, poly_derivative(R, g, j), e0);
            if (!field.is_zero(c)) terms.push_back(Term<K>{Monomial::variable(S->nvars(), j - 1), c});
        }
        auto f = poly_normalize(*S, std::move(terms));
        if (!f.is_zero()) forms.push_back(std::move(f));
    }
    return Ideal<K>(S, std::move(forms));
}

// Certified row bound for the Betti table of Ktilde_i: the filtration
// quotients are K_j(-j) on the nose, so reg Ktilde_i <= max_{j<=i}
// (reg K_j + j) with reg K_j bounded through the Taylor complex of S/K_j.
// Past the stabilization index the ideal stops changing but the shift keeps
// growing, hence the final term.
template <class K>
int ktilde_reg_bound(const PeiData<K>& P, int i) {
    int bound = 0;
    for (int j = 0; j <= std::min(i, P.istar); ++j) {
        int reg_kj = taylor_reg_bound(pei(P, j)) + 1; // ideal-as-module regularity
        bound = std::max(bound, reg_kj + j);
    }
    if (i > P.istar) bound = std::max(bound, taylor_reg_bound(pei(P, P.istar)) + 1 + i);
    return bound;
}

// Betti table of Ktilde_i over S with certified completeness when the
// filtration bound fits the window.
template <class K>
BettiTable ktilde_betti(const PeiData<K>& P, int i, int pmax, int qmax) {
    auto M = ktilde_pieces(P, i, qmax + 1);
    return module_betti(*M, pmax, qmax, ktilde_reg_bound(P, i));
}

} // namespace syz

#endif
