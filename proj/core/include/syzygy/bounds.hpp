#ifndef SYZYGY_BOUNDS_HPP
#define SYZYGY_BOUNDS_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "syzygy/combinat.hpp"
#include "syzygy/field.hpp"

namespace syz {

// Closed-form arithmetic for the linear-strand bounds: the minimal-degree
// ceiling, the del Pezzo (next-to-extremal) value, the Fano-type lower bound,
// and the conjectural improvement in terms of b(X).  Everything is exact
// big-integer combinatorics; no geometry enters this header.

// β_{p,1} of a variety of minimal degree of codimension e: p·C(e+1, p+1).
// Zero for p = 0 (a nondegenerate ideal has no linear forms) and for p > e.
inline BigInt vmd_betti(int e, int p) {
    if (p <= 0 || p > e) return 0;
    return p * binom(e + 1, p + 1);
}

// β_{p,1} of a del Pezzo variety of codimension e ≥ 2 (degree e+2,
// arithmetically Gorenstein): p·C(e+1, p+1) − C(e, p−1) for 1 ≤ p ≤ e,
// zero past the codimension.  At p = e this is e − C(e, e−1) = 0.
inline BigInt delpezzo_betti(int e, int p) {
    if (p <= 0 || p > e) return 0;
    return p * binom(e + 1, p + 1) - binom(e, p - 1);
}

// Exhaustive check of the two binomial identities the bound proofs lean on:
//
//   (hockey stick)   Σ_{i=0}^{s} C(r+i, i)           = C(r+s+1, r+1)
//   (convolution)    Σ_{i=0}^{s} C(r+i, r)·C(s−i, t) = C(r+s+1, r+t+1)
//
// over all 0 ≤ r ≤ rmax, 0 ≤ s ≤ smax, 0 ≤ t ≤ tmax.  A violation could only
// come from broken big-integer binomials, so it is a hard failure.
struct BinomialIdentityReport {
    long long tuples_checked = 0;
};

inline BinomialIdentityReport binomial_identities_check(int rmax, int smax, int tmax) {
    BinomialIdentityReport rep;
    for (int r = 0; r <= rmax; ++r) {
        for (int s = 0; s <= smax; ++s) {
            BigInt stick = 0;
            for (int i = 0; i <= s; ++i) stick += binom(r + i, i);
            if (stick != binom(r + s + 1, r + 1))
                throw DomainError("hockey-stick identity failed at r=" + std::to_string(r) +
                                  " s=" + std::to_string(s));
            ++rep.tuples_checked;
            for (int t = 0; t <= tmax; ++t) {
                BigInt conv = 0;
                for (int i = 0; i <= s; ++i) conv += binom(r + i, r) * binom(s - i, t);
                if (conv != binom(r + s + 1, r + t + 1))
                    throw DomainError("binomial convolution failed at r=" + std::to_string(r) +
                                      " s=" + std::to_string(s) + " t=" + std::to_string(t));
                ++rep.tuples_checked;
            }
        }
    }
    return rep;
}

// Bookkeeping for the iterated-projection bound.  Starting from the strand
// Betti number at (e0, p0), apply
//
//   β_{p,1}^{(e)} ≤ β_{p−1,1}^{(e−1)} + β_{p,1}^{(e−1)} + C(e, p)
//
// repeatedly until every surviving Betti term sits on the diagonal e = p,
// where β_{p,1}^{(p)} ≤ 1.  The terms spread in a Pascal triangle, so the
// diagonal entry β_{p0−i,1}^{(p0−i)} is reached with multiplicity
// A[i] = C(e0−p0−1+i, i), and the C(e, p) contributions shed along the way
// total the parallelogram sum
//
//   B = Σ_{i=0}^{p0−1} Σ_{j=0}^{e0−p0−1} C(i+j, i)·C(e0−i−j, p0−i).
//
// Bounding the diagonal terms by 1 bounds Σ A[i]·β ≤ A′ = C(e0, e0−p0+1)
// (hockey stick), and A′ + B collapses via the convolution identity to
// p0·C(e0+1, p0+1), the minimal-degree value.  The constructor recomputes B
// term by term and asserts that collapse exactly, so `total − Aprime` is a
// verified form of B for next-to-extremal arguments.
struct InheritanceGame {
    std::vector<BigInt> A;  // diagonal multiplicities, index i = 0..p0−1
    BigInt Aprime = 0;      // closed form C(e0, e0−p0+1)
    BigInt B = 0;           // parallelogram sum, accumulated term by term
    BigInt total = 0;       // p0·C(e0+1, p0+1)
};

inline InheritanceGame inheritance_game(int e0, int p0) {
    if (p0 < 1 || p0 > e0)
        throw DomainError("inheritance_game needs 1 <= p0 <= e0, got e0=" + std::to_string(e0) +
                          " p0=" + std::to_string(p0));
    InheritanceGame g;
    // For e0 = p0 the start is already diagonal; the formula gives
    // C(−1, 0) = 0 under our n ≥ 0 convention while the path count is 1.
    // Nothing downstream reads A[0] in that degenerate case: B is an empty
    // sum and Aprime = p0 carries the whole identity.
    for (int i = 0; i < p0; ++i) g.A.push_back(binom(e0 - p0 - 1 + i, i));
    g.Aprime = binom(e0, e0 - p0 + 1);
    for (int i = 0; i < p0; ++i)
        for (int j = 0; j <= e0 - p0 - 1; ++j)
            g.B += binom(i + j, i) * binom(e0 - i - j, p0 - i);
    g.total = p0 * binom(e0 + 1, p0 + 1);
    if (g.Aprime + g.B != g.total)
        throw DomainError("inheritance bookkeeping failed at e0=" + std::to_string(e0) +
                          " p0=" + std::to_string(p0) + ": A' + B != p0*C(e0+1, p0+1)");
    return g;
}

// Lower bound for β_{1,1}(X) in terms of a = a(X) (the last column of the
// quadratic strand): C(e+1, 2) − C(e+1−a, 2).  Exact for 1 ≤ a ≤ e; the
// a = e case degenerates to the full Castelnuovo value C(e+1, 2).
inline BigInt fano_lower(int e, int a) {
    return binom(e + 1, 2) - binom(e + 1 - a, 2);
}

// CONJECTURAL sharpening of the minimal-degree ceiling in terms of b = b(X)
// (the last column of the linear strand):
//
//   p·C(e+1, p+1) + [C(e+1, p+1) − C(b, p+1)] − (e−b+1)·C(e+1, p).
//
// It rests on an open question about how b behaves under inner projection,
// so every consumer must label the value CONJECTURAL (the BoundProfile
// renderer and the CLI both do).
inline BigInt improved_bound(int e, int p, int b) {
    return p * binom(e + 1, p + 1) + (binom(e + 1, p + 1) - binom(b, p + 1)) -
           (e - b + 1) * binom(e + 1, p);
}

// Bound table for codimension e, one column per p = 1..e: the minimal-degree
// ceiling, the del Pezzo next-to-extremal value, and (when b is supplied)
// the conjectural improved ceiling.
struct BoundProfile {
    int e = 0;
    std::optional<int> b;          // b(X) parameter for the conjectural row
    std::vector<BigInt> vmd;       // index p−1, p = 1..e
    std::vector<BigInt> delpezzo;  // same indexing
    std::vector<BigInt> improved;  // empty unless b is set; CONJECTURAL
    std::vector<std::string> tags; // provenance, parallel to the rows emitted

    std::string grid() const {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> head{"p"};
        for (int p = 1; p <= e; ++p) head.push_back(std::to_string(p));
        rows.push_back(head);
        auto push_row = [&](const std::string& label, const std::vector<BigInt>& vals) {
            std::vector<std::string> line{label};
            for (const auto& v : vals) line.push_back(v.str());
            rows.push_back(line);
        };
        push_row("VMD", vmd);
        push_row("del Pezzo", delpezzo);
        if (b) push_row("improved (CONJECTURAL, b=" + std::to_string(*b) + ")", improved);
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
        return out.str();
    }
};

inline BoundProfile bound_profile(int e, std::optional<int> b = std::nullopt) {
    if (e < 1) throw DomainError("bound profile needs codimension e >= 1");
    if (b && (*b < 1 || *b > e + 1))
        throw DomainError("bound profile needs 1 <= b <= e+1, got b=" + std::to_string(*b));
    BoundProfile prof;
    prof.e = e;
    prof.b = b;
    for (int p = 1; p <= e; ++p) {
        prof.vmd.push_back(vmd_betti(e, p));
        prof.delpezzo.push_back(delpezzo_betti(e, p));
        if (b) prof.improved.push_back(improved_bound(e, p, *b));
    }
    prof.tags = {"vmd:formula", "delpezzo:formula"};
    if (b) prof.tags.push_back("improved:CONJECTURAL");
    // Profile invariants; a violation means the closed forms above changed.
    for (int p = 1; p <= e; ++p) {
        if (prof.delpezzo[p - 1] < 0 || prof.vmd[p - 1] < prof.delpezzo[p - 1])
            throw DomainError("bound profile violates vmd >= delpezzo >= 0 at p=" + std::to_string(p));
    }
    if (prof.delpezzo[e - 1] != 0)
        throw DomainError("bound profile violates delpezzo(e) = 0 at e=" + std::to_string(e));
    return prof;
}

} // namespace syz

#endif
