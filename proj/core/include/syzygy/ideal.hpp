#ifndef SYZYGY_IDEAL_HPP
#define SYZYGY_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "syzygy/groebner.hpp"
#include "syzygy/linear_change.hpp"

namespace syz {

// A homogeneous ideal given by generators, with a per-order cache of reduced
// Groebner bases.  The generator list is immutable after construction; the
// cache is shared between copies (copies denote the same ideal) and guarded
// for concurrent readers.  GB computation runs single-threaded per ideal.
template <class K>
class Ideal {
public:
    Ideal(RingPtr<K> ring, std::vector<Poly<K>> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
        gens_.erase(std::remove_if(gens_.begin(), gens_.end(), [](const Poly<K>& f) { return f.is_zero(); }),
                    gens_.end());
    }

    const Ring<K>& ring() const { return *ring_; }
    const RingPtr<K>& ring_ptr() const { return ring_; }
    const std::vector<Poly<K>>& gens() const { return gens_; }

    bool gens_homogeneous() const {
        for (const auto& f : gens_)
            if (!f.is_homogeneous()) return false;
        return true;
    }

    const std::vector<Poly<K>>& reduced_gb(const MonomialOrder& ord) const {
        Key key{static_cast<int>(ord.kind), ord.priority};
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->gb.find(key);
        if (it == cache_->gb.end()) {
            auto gb = std::make_shared<const std::vector<Poly<K>>>(buchberger_reduced(*ring_, gens_, ord));
            it = cache_->gb.emplace(std::move(key), std::move(gb)).first;
        }
        return *it->second;
    }

    const std::vector<Poly<K>>& canonical_gb() const { return reduced_gb(ring_->canonical_order()); }

    bool contains(const Poly<K>& f) const {
        return normal_form(*ring_, f, canonical_gb(), ring_->canonical_order()).is_zero();
    }

    bool is_zero_ideal() const { return canonical_gb().empty(); }

    bool is_unit() const {
        const auto& gb = canonical_gb();
        return gb.size() == 1 && gb[0].degree() == 0;
    }

    // Minimal degree of a nonzero element, or -1 for the zero ideal.  Valid
    // because the canonical order is degree-compatible.
    int min_degree() const {
        const auto& gb = canonical_gb();
        int d = -1;
        for (const auto& g : gb)
            if (d < 0 || g.degree() < d) d = g.degree();
        return d;
    }

    // Degenerate = contains a nonzero linear form.
    bool is_degenerate() const {
        int d = min_degree();
        return d >= 0 && d <= 1;
    }

private:
    using Key = std::pair<int, std::vector<std::size_t>>;
    struct Cache {
        mutable std::mutex mu;
        std::map<Key, std::shared_ptr<const std::vector<Poly<K>>>> gb;
    };

    RingPtr<K> ring_;
    std::vector<Poly<K>> gens_;
    std::shared_ptr<Cache> cache_;
};

template <class K>
bool ideal_equal(const Ideal<K>& A, const Ideal<K>& B) {
    require_compatible(A.ring(), B.ring(), "ideal_equal");
    const auto& ga = A.canonical_gb();
    const auto& gb = B.canonical_gb();
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (!poly_eq(A.ring(), ga[i], gb[i])) return false;
    return true;
}

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& A, const Ideal<K>& B) {
    require_compatible(A.ring(), B.ring(), "ideal_sum");
    std::vector<Poly<K>> gens = A.gens();
    gens.insert(gens.end(), B.gens().begin(), B.gens().end());
    return Ideal<K>(A.ring_ptr(), std::move(gens));
}

template <class K>
Ideal<K> ideal_product(const Ideal<K>& A, const Ideal<K>& B) {
    require_compatible(A.ring(), B.ring(), "ideal_product");
    std::vector<Poly<K>> gens;
    for (const auto& a : A.gens())
        for (const auto& b : B.gens()) gens.push_back(poly_mul(A.ring(), a, b));
    return Ideal<K>(A.ring_ptr(), std::move(gens));
}

namespace detail {

// Fresh auxiliary variable name not colliding with ring coordinates.
template <class K>
std::string fresh_var_name(const Ring<K>& R) {
    std::string base = "_t";
    int suffix = 0;
    std::string name = base;
    while (R.var_index(name) >= 0) name = base + std::to_string(suffix++);
    return name;
}

inline Monomial prepend_slot(const Monomial& m, int aux_exp) {
    Monomial r(m.nvars() + 1);
    r.e[0] = static_cast<std::uint16_t>(aux_exp);
    for (std::size_t i = 0; i < m.nvars(); ++i) r.e[i + 1] = m.e[i];
    r.degree = m.degree + aux_exp;
    return r;
}

inline Monomial drop_slot0(const Monomial& m) {
    Monomial r(m.nvars() - 1);
    for (std::size_t i = 1; i < m.nvars(); ++i) r.e[i - 1] = m.e[i];
    r.degree = m.degree - m.e[0];
    return r;
}

} // namespace detail

// I ∩ J by the auxiliary-variable construction: with a fresh variable t,
// I ∩ J = ( t·I + (1−t)·J ) ∩ k[x].  Pure lex with t most significant is an
// elimination order for t, and the x-homogeneity of the inputs keeps the
// computation small.
template <class K>
Ideal<K> ideal_intersect(const Ideal<K>& A, const Ideal<K>& B) {
    require_compatible(A.ring(), B.ring(), "ideal_intersect");
    const Ring<K>& R = A.ring();
    if (A.gens().empty() || B.gens().empty()) return Ideal<K>(A.ring_ptr(), {});

    std::vector<std::string> vars;
    vars.push_back(detail::fresh_var_name(R));
    vars.insert(vars.end(), R.vars.begin(), R.vars.end());
    auto ext = make_ring(R.field, vars);

    std::vector<Poly<K>> gens;
    for (const auto& f : A.gens()) {
        // t * f
        std::vector<Term<K>> terms;
        for (const auto& t : f.terms) terms.push_back(Term<K>{detail::prepend_slot(t.m, 1), t.c});
        gens.push_back(poly_normalize(*ext, std::move(terms)));
    }
    for (const auto& g : B.gens()) {
        // (1 - t) * g
        std::vector<Term<K>> terms;
        for (const auto& t : g.terms) {
            terms.push_back(Term<K>{detail::prepend_slot(t.m, 0), t.c});
            terms.push_back(Term<K>{detail::prepend_slot(t.m, 1), R.field.neg(t.c)});
        }
        gens.push_back(poly_normalize(*ext, std::move(terms)));
    }

    auto gb = buchberger_reduced(*ext, gens, MonomialOrder::lex(ext->nvars()));
    std::vector<Poly<K>> kept;
    for (const auto& g : gb) {
        bool has_aux = false;
        for (const auto& t : g.terms)
            if (t.m.e[0] > 0) {
                has_aux = true;
                break;
            }
        if (has_aux) continue;
        std::vector<Term<K>> terms;
        for (const auto& t : g.terms) terms.push_back(Term<K>{detail::drop_slot0(t.m), t.c});
        kept.push_back(poly_normalize(R, std::move(terms)));
    }
    return Ideal<K>(A.ring_ptr(), std::move(kept));
}

// Exact quotient g / f; throws if f does not divide g.
template <class K>
Poly<K> poly_divide_exact(const Ring<K>& R, const Poly<K>& g, const Poly<K>& f) {
    if (f.is_zero()) throw DomainError("division by the zero polynomial");
    MonomialOrder ord = R.canonical_order();
    Poly<K> h = g;
    std::vector<Term<K>> quot;
    while (!h.is_zero()) {
        const Term<K>& lt = h.terms.front();
        if (!f.terms.front().m.divides(lt.m))
            throw DomainError("polynomial division is not exact");
        Monomial m = f.terms.front().m.divide_into(lt.m);
        auto c = R.field.div(lt.c, f.terms.front().c);
        quot.push_back(Term<K>{m, c});
        h = poly_sub(R, h, poly_mul_term(R, f, m, c));
    }
    (void)ord;
    return poly_normalize(R, std::move(quot));
}

// Ideal quotient (A : f) = (1/f) · (A ∩ (f)).
template <class K>
Ideal<K> ideal_quotient_poly(const Ideal<K>& A, const Poly<K>& f) {
    if (f.is_zero()) throw DomainError("ideal quotient by the zero polynomial");
    Ideal<K> princ(A.ring_ptr(), {f});
    Ideal<K> inter = ideal_intersect(A, princ);
    std::vector<Poly<K>> gens;
    for (const auto& g : inter.canonical_gb()) gens.push_back(poly_divide_exact(A.ring(), g, f));
    return Ideal<K>(A.ring_ptr(), std::move(gens));
}

// (A : B) = ∩_j (A : b_j) over generators of B.
template <class K>
Ideal<K> ideal_quotient(const Ideal<K>& A, const Ideal<K>& B) {
    require_compatible(A.ring(), B.ring(), "ideal_quotient");
    if (B.gens().empty()) {
        // (A : 0) = (1)
        return Ideal<K>(A.ring_ptr(), {poly_constant(A.ring(), A.ring().field.one())});
    }
    bool first = true;
    Ideal<K> acc(A.ring_ptr(), {});
    for (const auto& b : B.gens()) {
        Ideal<K> q = ideal_quotient_poly(A, b);
        acc = first ? q : ideal_intersect(acc, q);
        first = false;
    }
    return acc;
}

// Saturation (A : f^∞): iterate the quotient until the ideal stabilizes.
template <class K>
Ideal<K> ideal_saturate_poly(const Ideal<K>& A, const Poly<K>& f) {
    Ideal<K> cur = A;
    for (;;) {
        Ideal<K> next = ideal_quotient_poly(cur, f);
        if (ideal_equal(cur, next)) return cur;
        cur = next;
    }
}

// Saturation with respect to the irrelevant maximal ideal (x0, ..., xN):
// the intersection of the single-variable saturations.
template <class K>
Ideal<K> ideal_saturate_irrelevant(const Ideal<K>& A) {
    const Ring<K>& R = A.ring();
    Ideal<K> acc = ideal_saturate_poly(A, poly_variable(R, 0));
    for (std::size_t j = 1; j < R.nvars(); ++j)
        acc = ideal_intersect(acc, ideal_saturate_poly(A, poly_variable(R, j)));
    return acc;
}

// The complete elimination ideal I ∩ k[x1..xN], returned in the smaller
// ring.  For homogeneous I the canonical deglex order with x0 most
// significant already eliminates x0: within one degree, any monomial
// containing x0 beats every x0-free one, so a homogeneous GB element with
// x0-free leading term is itself x0-free, and the x0-free elements of the
// reduced GB generate (indeed form a GB of) the elimination ideal.
template <class K>
Ideal<K> ideal_eliminate_x0(const Ideal<K>& A) {
    const Ring<K>& R = A.ring();
    if (R.nvars() < 2) throw DomainError("eliminate-x0 needs at least two variables");
    if (!A.gens_homogeneous())
        throw DomainError("eliminate-x0 requires homogeneous generators");
    auto S = make_ring(R.field, std::vector<std::string>(R.vars.begin() + 1, R.vars.end()));
    std::vector<Poly<K>> kept;
    for (const auto& g : A.canonical_gb()) {
        if (g.terms.front().m.e[0] > 0) continue; // leading term has x0 ⇒ not x0-free
        std::vector<Term<K>> terms;
        for (const auto& t : g.terms) terms.push_back(Term<K>{detail::drop_slot0(t.m), t.c});
        kept.push_back(poly_normalize(*S, std::move(terms)));
    }
    return Ideal<K>(S, std::move(kept));
}

template <class K>
Ideal<K> ideal_apply_linear_change(const Ideal<K>& A, const LinearChange<K>& T) {
    std::vector<Poly<K>> gens;
    for (const auto& f : A.gens()) gens.push_back(T.apply(A.ring(), f));
    return Ideal<K>(A.ring_ptr(), std::move(gens));
}

} // namespace syz

#endif
