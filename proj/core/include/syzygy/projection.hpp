#ifndef SYZYGY_PROJECTION_HPP
#define SYZYGY_PROJECTION_HPP

#include "syzygy/hilbert.hpp"
#include "syzygy/pei.hpp"

namespace syz {

// Inner projections: choose a smooth point q of X, move it to the
// coordinate point (1:0:...:0), and eliminate x0.  The image ideal is the
// zeroth partial elimination ideal of the normalized ideal; the whole PEI
// filtration rides along and carries the projection invariants t and s.

template <class K>
int jacobian_rank_at(const Ideal<K>& I, const Row<K>& q) {
    const Ring<K>& R = I.ring();
    std::vector<Row<K>> rows;
    for (const auto& g : I.gens()) {
        Row<K> row(R.nvars(), R.field.zero());
        for (std::size_t j = 0; j < R.nvars(); ++j) row[j] = poly_eval(R, poly_derivative(R, g, j), q);
        rows.push_back(std::move(row));
    }
    return static_cast<int>(mat_rank(R.field, rows, R.nvars()));
}

template <class K>
struct InnerProjection {
    Row<K> center;          // in the original coordinates
    LinearChange<K> change; // moves (1:0:...:0) to the center
    Ideal<K> normalized;    // transformed ideal, center at the coordinate point
    PeiData<K> filtration;  // PEI chain of the normalized ideal
    Ideal<K> image;         // K_0, the projected ideal in S, unsaturated
    int t = 0;
    int s = 0;
};

template <class K>
InnerProjection<K> inner_projection(const Ideal<K>& I, const Row<K>& q) {
    auto T = LinearChange<K>::normalizing(I.ring(), q);
    auto J = ideal_apply_linear_change(I, T);
    auto P = pei_filtration(J);
    auto image = pei(P, 0);
    int t = pei_t_invariant(P);
    int s = P.s;
    return InnerProjection<K>{q, std::move(T), std::move(J), std::move(P), std::move(image), t, s};
}

// Convenience wrapper returning only the image ideal.  The image of a
// projection is not saturated in general; pass saturate = true to saturate
// with respect to the irrelevant maximal ideal of the target ring.
template <class K>
Ideal<K> project_from_point(const Ideal<K>& I, const Row<K>& q, bool saturate = false) {
    auto pr = inner_projection(I, q);
    return saturate ? ideal_saturate_irrelevant(pr.image) : pr.image;
}

// ---- Degree and codimension bookkeeping -----------------------------------

// Delta invariant deg X - codim X - 1.  Nondegenerate irreducible varieties
// have delta >= 0, so a negative value flags a disconnected or otherwise
// reducible scheme.  Degenerate input is refused: the invariant is only
// meaningful relative to the true linear span.  Degree and codimension are
// read from the Hilbert polynomial and so ignore saturation, but the
// degeneracy refusal inspects the given generators; pass a saturated ideal
// when that distinction matters.
struct DeltaGenus {
    long long degree = 0;
    int codim = 0;
    long long delta = 0;
    bool maybe_disconnected = false;
};

template <class K>
DeltaGenus delta_genus(const Ideal<K>& I) {
    if (I.is_degenerate())
        throw DomainError("delta invariant of a degenerate scheme: restrict to its linear span first");
    auto hd = hilbert_data(I);
    if (hd.unit || hd.proj_dim < 0) throw DomainError("delta invariant needs a nonempty scheme");
    DeltaGenus d;
    d.degree = static_cast<long long>(hd.degree);
    d.codim = hd.codim;
    d.delta = d.degree - d.codim - 1;
    d.maybe_disconnected = d.delta < 0;
    return d;
}

// ---- Point sampling over GF(p) ---------------------------------------------

namespace detail {

inline Poly<Gf> restrict_to_chart(const Ring<Gf>& R, const Ring<Gf>& A, const Poly<Gf>& f, std::size_t chart) {
    std::vector<Term<Gf>> terms;
    for (const auto& t : f.terms) {
        bool dead = false;
        for (std::size_t j = 0; j < chart; ++j)
            if (t.m.e[j] > 0) {
                dead = true;
                break;
            }
        if (dead) continue; // earlier coordinates are pinned to zero
        Monomial m(A.nvars());
        int deg = 0;
        for (std::size_t j = chart + 1; j < R.nvars(); ++j) {
            m.e[j - chart - 1] = t.m.e[j];
            deg += t.m.e[j];
        }
        m.degree = deg; // the x_chart = 1 factor drops out
        terms.push_back(Term<Gf>{std::move(m), t.c});
    }
    return poly_normalize(A, std::move(terms));
}

inline std::vector<Gf::elem> univariate_roots(const Ring<Gf>& A, const Poly<Gf>& f, std::size_t v) {
    const std::uint64_t p = A.field.modulus();
    if (p > (1u << 20))
        throw DomainError("point sampling scans the base field; use a prime below 2^20");
    std::vector<std::uint64_t> coef(f.terms.front().m.e[v] + 1, 0);
    for (const auto& t : f.terms) coef[t.m.e[v]] = t.c;
    std::vector<Gf::elem> roots;
    for (std::uint64_t a = 0; a < p; ++a) {
        std::uint64_t acc = 0;
        for (std::size_t k = coef.size(); k-- > 0;) acc = (acc * a + coef[k]) % p;
        if (acc == 0) roots.push_back(a);
    }
    return roots;
}

inline Poly<Gf> drop_last_var(const Ring<Gf>& B, const Poly<Gf>& f) {
    std::vector<Term<Gf>> terms;
    for (const auto& t : f.terms) {
        Monomial m(B.nvars());
        for (std::size_t j = 0; j < B.nvars(); ++j) m.e[j] = t.m.e[j];
        m.degree = t.m.degree; // last exponent is already zero
        terms.push_back(Term<Gf>{std::move(m), t.c});
    }
    return poly_normalize(B, std::move(terms));
}

// All GF(p) solutions of an affine system expected to be zero-dimensional.
// Lex elimination: the reduced lex basis of a zero-dimensional ideal
// contains a univariate polynomial in the least variable; scan its roots
// and recurse on the evaluated system.  A system that fails to produce the
// univariate stage (not zero-dimensional along this branch) yields no
// points, which callers treat as a resample signal.
inline std::vector<Row<Gf>> affine_roots(const RingPtr<Gf>& A, const std::vector<Poly<Gf>>& gens) {
    std::size_t n = A->nvars();
    if (n == 0) return {Row<Gf>{}};
    auto gb = buchberger_reduced(*A, gens, MonomialOrder::lex(n));
    if (gb.empty()) return {}; // zero ideal: a whole affine space, not isolated points
    for (const auto& g : gb)
        if (g.degree() == 0) return {}; // inconsistent system

    std::size_t last = n - 1;
    const Poly<Gf>* uni = nullptr;
    for (const auto& g : gb) {
        bool only_last = true;
        for (const auto& t : g.terms)
            for (std::size_t j = 0; j + 1 < n; ++j)
                if (t.m.e[j] > 0) {
                    only_last = false;
                    break;
                }
        if (only_last) {
            uni = &g;
            break;
        }
    }
    if (!uni) return {}; // positive-dimensional along this branch

    std::vector<Row<Gf>> out;
    if (n == 1) {
        for (auto r : univariate_roots(*A, *uni, last)) out.push_back(Row<Gf>{r});
        return out;
    }
    auto B = make_ring(A->field, std::vector<std::string>(A->vars.begin(), A->vars.end() - 1));
    for (auto r : univariate_roots(*A, *uni, last)) {
        std::vector<Poly<Gf>> sub;
        for (const auto& g : gb) {
            auto h = poly_substitute_const(*A, g, last, r);
            if (!h.is_zero()) sub.push_back(drop_last_var(*B, h));
        }
        for (auto& partial : affine_roots(B, sub)) {
            partial.push_back(r);
            out.push_back(std::move(partial));
        }
    }
    return out;
}

// Projective GF(p) points of a (sliced) homogeneous system, each point
// normalized so its first nonzero coordinate is 1.  Charts are visited in
// coordinate order, so the enumeration is deterministic.
inline std::vector<Row<Gf>> projective_points(const Ideal<Gf>& J) {
    const Ring<Gf>& R = J.ring();
    std::size_t n = R.nvars();
    std::vector<Row<Gf>> points;
    for (std::size_t chart = 0; chart < n; ++chart) {
        auto A = make_ring(R.field, std::vector<std::string>(R.vars.begin() + chart + 1, R.vars.end()));
        std::vector<Poly<Gf>> gens;
        bool inconsistent = false;
        for (const auto& g : J.gens()) {
            auto h = restrict_to_chart(R, *A, g, chart);
            if (h.is_zero()) continue;
            if (h.degree() == 0) {
                inconsistent = true;
                break;
            }
            gens.push_back(std::move(h));
        }
        if (inconsistent) continue;
        for (const auto& a : affine_roots(A, gens)) {
            Row<Gf> q(n, R.field.zero());
            q[chart] = R.field.one();
            for (std::size_t j = 0; j < a.size(); ++j) q[chart + 1 + j] = a[j];
            points.push_back(std::move(q));
        }
    }
    return points;
}

} // namespace detail

struct PointSample {
    Row<Gf> point;
    int e = 0;            // codimension of the scheme
    int t = -1;           // independent linear forms in K_1 at this center
    int s = -1;           // PEI stabilization index
    bool smooth = false;  // Jacobian rank equals the codimension
    bool general = false; // smooth and t == e, the expected generic behavior
    int slices = 0;       // random slices consumed
};

// Searches for a general smooth GF(p) point of V(I): slice by random
// hyperplanes down to dimension zero, enumerate the rational points of the
// slice, and keep the first smooth one whose tangent invariant t reaches
// the codimension.  If the budget runs out, the best smooth point seen is
// returned (general = false); nullopt means not even a smooth point was
// found.  The input is saturated internally so that the Jacobian criterion
// sees the honest scheme structure.
inline std::optional<PointSample> sample_smooth_point(const Ideal<Gf>& I, Rng& rng, int budget = 64) {
    if (!I.gens_homogeneous()) throw DomainError("point sampling requires a homogeneous ideal");
    auto sat = ideal_saturate_irrelevant(I);
    auto hd = hilbert_data(sat);
    if (hd.unit || hd.proj_dim < 0) return std::nullopt;
    const Ring<Gf>& R = sat.ring();
    int e = hd.codim;

    std::optional<PointSample> best;
    for (int attempt = 1; attempt <= budget; ++attempt) {
        std::vector<Poly<Gf>> sliced = sat.canonical_gb();
        for (int k = 0; k < hd.proj_dim; ++k) {
            std::vector<Term<Gf>> terms;
            for (std::size_t j = 0; j < R.nvars(); ++j) {
                auto c = rng.below(R.field.modulus());
                if (c != 0) terms.push_back(Term<Gf>{Monomial::variable(R.nvars(), j), c});
            }
            auto ell = poly_normalize(R, std::move(terms));
            if (ell.is_zero()) {
                --k;
                continue;
            }
            sliced.push_back(std::move(ell));
        }
        for (const auto& q : detail::projective_points(Ideal<Gf>(sat.ring_ptr(), std::move(sliced)))) {
            if (jacobian_rank_at(sat, q) != e) continue;
            auto pr = inner_projection(sat, q);
            PointSample sample{q, e, pr.t, pr.s, true, pr.t == e, attempt};
            if (sample.general) return sample;
            if (!best || sample.t > best->t) best = std::move(sample);
        }
    }
    return best;
}

// ---- Iterated inner projection ---------------------------------------------

struct InnerChainStep {
    Row<Gf> center;
    int t = -1;
    int s = -1;
    long long degree_before = 0;
    long long degree_after = 0;
    int centers_tried = 0;
};

struct InnerChain {
    std::vector<Ideal<Gf>> ideals; // saturated: X_0, X_1, ...
    std::vector<InnerChainStep> steps;
    bool complete = false; // reached a hypersurface
    std::string stop_reason;
};

// Projects repeatedly from general smooth points until the image is a
// hypersurface.  A general inner projection of an irreducible nondegenerate
// scheme drops the degree by exactly one; any other drop means the center
// was special (on a secant of bad type), so the center is redrawn.  The
// chain reports exactly how far it got and why it stopped.
inline InnerChain iterate_inner(const Ideal<Gf>& I, Rng& rng, int center_budget = 8, int slice_budget = 64) {
    InnerChain chain;
    chain.ideals.push_back(ideal_saturate_irrelevant(I));
    for (;;) {
        const Ideal<Gf>& cur = chain.ideals.back();
        auto hd = hilbert_data(cur);
        if (hd.unit || hd.proj_dim < 0) {
            chain.stop_reason = "empty scheme";
            return chain;
        }
        if (hd.codim <= 1) {
            chain.complete = true;
            chain.stop_reason = "hypersurface";
            return chain;
        }
        if (hd.proj_dim == 0) {
            chain.stop_reason = "zero-dimensional";
            return chain;
        }
        bool advanced = false;
        for (int tries = 1; tries <= center_budget && !advanced; ++tries) {
            auto sample = sample_smooth_point(cur, rng, slice_budget);
            if (!sample) {
                chain.stop_reason = "no smooth point found";
                return chain;
            }
            auto image = ideal_saturate_irrelevant(project_from_point(cur, sample->point));
            auto hd_img = hilbert_data(image);
            if (static_cast<long long>(hd.degree) - static_cast<long long>(hd_img.degree) != 1) continue;
            chain.steps.push_back(InnerChainStep{sample->point, sample->t, sample->s,
                                                 static_cast<long long>(hd.degree),
                                                 static_cast<long long>(hd_img.degree), tries});
            chain.ideals.push_back(std::move(image));
            advanced = true;
        }
        if (!advanced) {
            chain.stop_reason = "no center dropped the degree by one";
            return chain;
        }
    }
}

// ---- Coordinate invariance probe -------------------------------------------

// The PEI data of a normalized ideal must not depend on how the complement
// of the center was coordinatized.  Conjugate by a random change fixing the
// coordinate point (first column e0; such a change maps projection fibers
// to fibers) and compare the observables: stabilization index, t, and all
// piece dimensions of the K_i and Ktilde_i windows.
template <class K>
bool pei_invariance_probe(const Ideal<K>& normalized, Rng& rng, int mcap = 4) {
    const Ring<K>& R = normalized.ring();
    std::size_t n = R.nvars();
    LinearChange<K> T = LinearChange<K>::identity(R);
    for (int attempt = 0;; ++attempt) {
        if (attempt >= 64) throw DomainError("failed to draw an invertible stabilizing change");
        std::vector<Row<K>> m(n, Row<K>(n, R.field.zero()));
        m[0][0] = R.field.one();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 1; j < n; ++j) m[i][j] = LinearChange<K>::random_elem(R.field, rng);
        if (mat_rank(R.field, m, n) != n) continue;
        T = LinearChange<K>(R, std::move(m));
        break;
    }
    auto A = pei_filtration(normalized);
    auto B = pei_filtration(ideal_apply_linear_change(normalized, T));
    if (A.s != B.s) return false;
    if (pei_t_invariant(A) != pei_t_invariant(B)) return false;
    int top = std::max(A.istar, B.istar);
    for (int i = 0; i <= top; ++i) {
        auto ka = pieces_ideal(pei(A, i), mcap);
        auto kb = pieces_ideal(pei(B, i), mcap);
        auto ta = ktilde_pieces(A, i, mcap);
        auto tb = ktilde_pieces(B, i, mcap);
        for (int mdeg = 0; mdeg <= mcap; ++mdeg) {
            if (ka->dim(mdeg) != kb->dim(mdeg)) return false;
            if (ta->dim(mdeg) != tb->dim(mdeg)) return false;
        }
    }
    return true;
}

} // namespace syz

#endif
