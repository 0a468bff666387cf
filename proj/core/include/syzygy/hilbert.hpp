#ifndef SYZYGY_HILBERT_HPP
#define SYZYGY_HILBERT_HPP

#include <vector>

#include "syzygy/combinat.hpp"
#include "syzygy/ideal.hpp"

namespace syz {

// Hilbert series data of R/I, computed from the initial monomial ideal of
// the canonical Groebner basis.  The series is numerator(t) / (1-t)^nvars;
// dividing out the (1-t)-power at t = 1 gives the Krull dimension of R/I
// (the affine cone) and the degree (multiplicity) of V(I).
struct HilbertData {
    bool unit = false; // I = (1); dimensions flagged, degree 0
    int nvars = 0;
    std::vector<BigInt> numerator;     // N(t) over (1-t)^nvars
    std::vector<BigInt> reduced;       // N(t) / (1-t)^(nvars - krull_dim)
    int krull_dim = -1;                // dim R/I; -1 for the zero ring
    int proj_dim = -2;                 // krull_dim - 1
    int codim = 0;                     // nvars - krull_dim (= projective codim)
    BigInt degree = 0;

    // Hilbert function of R/I in degree d (of the presented quotient, no
    // saturation applied).
    BigInt hf(int d) const {
        if (d < 0) return 0;
        BigInt acc = 0;
        for (std::size_t i = 0; i < numerator.size(); ++i) {
            long long shift = d - static_cast<long long>(i);
            if (shift < 0) break;
            acc += numerator[i] * binom(nvars - 1 + shift, nvars - 1);
        }
        return acc;
    }
};

namespace detail {

// Drops non-minimal generators (multiples of another generator) and
// duplicates.
inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < gens.size() && keep; ++j) {
            if (i == j) continue;
            if (gens[j].divides(gens[i]) && !(gens[i] == gens[j])) keep = false;
            if (gens[i] == gens[j] && j < i) keep = false;
        }
        if (keep) out.push_back(gens[i]);
    }
    return out;
}

inline void poly_sub_shift(std::vector<BigInt>& acc, const std::vector<BigInt>& other, int shift, bool negate) {
    if (acc.size() < other.size() + shift) acc.resize(other.size() + shift, 0);
    for (std::size_t i = 0; i < other.size(); ++i) {
        if (negate)
            acc[i + shift] -= other[i];
        else
            acc[i + shift] += other[i];
    }
}

// Numerator of the Hilbert series of R/(monomial ideal) over (1-t)^nvars.
// Recursion: for a variable x occurring in some generator,
//   N(I) = N(I + (x)) + t * N(I : x),
// from the exact sequence 0 -> R/(I:x)(-1) -> R/I -> R/(I+(x)) -> 0.
inline std::vector<BigInt> hilbert_numerator(std::vector<Monomial> gens) {
    gens = minimalize_monomials(std::move(gens));
    if (gens.empty()) return {BigInt(1)};
    for (const auto& g : gens)
        if (g.degree == 0) return {}; // unit ideal: zero series

    // Pure-power base case: numerator is a product of (1 - t^deg).
    bool all_pure = true;
    for (const auto& g : gens) {
        int nz = 0;
        for (auto e : g.e)
            if (e > 0) ++nz;
        if (nz > 1) {
            all_pure = false;
            break;
        }
    }
    if (all_pure) {
        std::vector<BigInt> acc{BigInt(1)};
        for (const auto& g : gens) {
            std::vector<BigInt> next(acc.size() + g.degree, 0);
            for (std::size_t i = 0; i < acc.size(); ++i) {
                next[i] += acc[i];
                next[i + g.degree] -= acc[i];
            }
            acc = std::move(next);
        }
        return acc;
    }

    // Pivot: the most frequent variable among those that appear in some
    // mixed (non-pure-power) generator, lowest index on ties.  Restricting
    // to mixed generators makes both branches strictly smaller: I + (x)
    // loses a mixed generator and I : x drops total degree.
    std::size_t nvars = gens[0].nvars();
    std::vector<bool> candidate(nvars, false);
    for (const auto& g : gens) {
        int nz = 0;
        for (auto e : g.e)
            if (e > 0) ++nz;
        if (nz <= 1) continue;
        for (std::size_t j = 0; j < nvars; ++j)
            if (g.e[j] > 0) candidate[j] = true;
    }
    std::size_t pivot = 0;
    int best_count = -1;
    for (std::size_t j = 0; j < nvars; ++j) {
        if (!candidate[j]) continue;
        int count = 0;
        for (const auto& g : gens)
            if (g.e[j] > 0) ++count;
        if (count > best_count) {
            best_count = count;
            pivot = j;
        }
    }

    std::vector<Monomial> plus; // I + (x_pivot)
    plus.push_back(Monomial::variable(nvars, pivot));
    for (const auto& g : gens)
        if (g.e[pivot] == 0) plus.push_back(g);

    std::vector<Monomial> colon; // I : x_pivot
    for (const auto& g : gens) {
        if (g.e[pivot] == 0) {
            colon.push_back(g);
        } else {
            Monomial h = g;
            h.e[pivot] -= 1;
            h.degree -= 1;
            colon.push_back(h);
        }
    }

    std::vector<BigInt> acc = hilbert_numerator(std::move(plus));
    std::vector<BigInt> shifted = hilbert_numerator(std::move(colon));
    poly_sub_shift(acc, shifted, 1, false);
    while (!acc.empty() && acc.back() == 0) acc.pop_back();
    return acc;
}

} // namespace detail

template <class K>
HilbertData hilbert_data(const Ideal<K>& I) {
    HilbertData H;
    H.nvars = static_cast<int>(I.ring().nvars());
    std::vector<Monomial> lms;
    for (const auto& g : I.canonical_gb()) lms.push_back(g.terms.front().m);
    H.numerator = detail::hilbert_numerator(std::move(lms));

    if (H.numerator.empty()) {
        H.unit = true;
        H.krull_dim = -1;
        H.proj_dim = -2;
        H.codim = H.nvars + 1;
        H.degree = 0;
        return H;
    }

    // Divide out (1-t)^k at t=1: each pass replaces N by its prefix sums,
    // valid exactly when N(1) = 0.
    std::vector<BigInt> cur = H.numerator;
    int k = 0;
    auto value_at_one = [](const std::vector<BigInt>& v) {
        BigInt s = 0;
        for (const auto& c : v) s += c;
        return s;
    };
    while (k < H.nvars && value_at_one(cur) == 0) {
        std::vector<BigInt> next(cur.size(), 0);
        BigInt run = 0;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            run += cur[i];
            next[i] = run;
        }
        while (!next.empty() && next.back() == 0) next.pop_back();
        cur = std::move(next);
        ++k;
    }
    H.reduced = cur;
    H.krull_dim = H.nvars - k;
    H.proj_dim = H.krull_dim - 1;
    H.codim = k;
    H.degree = value_at_one(cur);
    return H;
}

} // namespace syz

#endif
