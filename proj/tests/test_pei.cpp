#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <syzygy/io.hpp>
#include <syzygy/pei.hpp>

using namespace syz;

namespace {

template <class K>
Poly<K> P(const RingPtr<K>& R, const std::string& text) {
    return poly_parse(*R, text);
}

Ideal<Gf> twisted_cubic(const RingPtr<Gf>& R) {
    return Ideal<Gf>(R, {P(R, "x0*x2 - x1^2"), P(R, "x0*x3 - x1*x2"), P(R, "x1*x3 - x2^2")});
}

Ideal<Gf> skew_lines(const RingPtr<Gf>& R) {
    return Ideal<Gf>(R, {P(R, "x0*x2"), P(R, "x0*x3"), P(R, "x1*x2"), P(R, "x1*x3")});
}

// Graded Euler characteristic of a module Betti table against the piece
// dimensions: sum_p (-1)^p sum_q beta_{p,q} dim S_{m-p-q} = dim M_m.  Valid
// once the table is certified complete, since then no cell lies outside it.
void check_module_euler(const PieceModule<Gf>& M, const BettiTable& t, int mmax) {
    REQUIRE(t.certified_complete);
    int n = static_cast<int>(M.ring().nvars());
    for (int m = 0; m <= mmax; ++m) {
        BigInt sum = 0;
        for (const auto& [pq, v] : t.cells) {
            auto [p, q] = pq;
            sum += (p % 2 == 0 ? 1 : -1) * v * binom(n - 1 + m - p - q, n - 1);
        }
        CHECK(sum == M.dim(m));
    }
}

} // namespace

TEST_CASE("pei filtration of the twisted cubic") {
    auto R = make_ring(Gf(32003), 4);
    auto I = twisted_cubic(R);
    auto Pd = pei_filtration(I);

    // The coordinate point lies on the curve; the basis elements carry
    // x0-degrees 1, 1, 0, so the filtration closes at the first step.
    CHECK(Pd.istar == 1);
    CHECK(Pd.s == 1);
    CHECK(ideal_equal(pei(Pd, 0), Ideal<Gf>(Pd.S, {P(Pd.S, "x1*x3 - x2^2")})));
    CHECK(ideal_equal(pei(Pd, 1), Ideal<Gf>(Pd.S, {P(Pd.S, "x2"), P(Pd.S, "x3")})));
    CHECK(pei(Pd, -1).is_zero_ideal());
    CHECK(ideal_equal(pei(Pd, 5), pei(Pd, 1)));
    CHECK(pei_t_invariant(Pd) == 2);

    // Smooth center: the stable ideal is cut by the tangent space.
    CHECK(ideal_equal(pei(Pd, Pd.istar), tangent_space_ideal(I, Pd.S)));

    auto cert = certify_pei(I, Pd, 6);
    CHECK(cert.compared_cells == 14); // two filtration steps, degrees 0..6
}

TEST_CASE("pei filtration of two skew lines") {
    auto R = make_ring(Gf(32003), 4);
    auto I = skew_lines(R);
    auto Pd = pei_filtration(I);

    CHECK(Pd.istar == 1);
    CHECK(Pd.s == 1);
    // Projection image: the other line plus the image point of the line
    // through the center, unsaturated.
    CHECK(ideal_equal(pei(Pd, 0), Ideal<Gf>(Pd.S, {P(Pd.S, "x1*x2"), P(Pd.S, "x1*x3")})));
    CHECK(ideal_equal(pei(Pd, 1), Ideal<Gf>(Pd.S, {P(Pd.S, "x2"), P(Pd.S, "x3")})));
    CHECK(pei_t_invariant(Pd) == 2);
    CHECK(ideal_equal(pei(Pd, 1), tangent_space_ideal(I, Pd.S)));

    certify_pei(I, Pd, 6);
}

TEST_CASE("outer center climbs to the unit ideal") {
    auto R = make_ring(Gf(32003), 4);
    // Twisted cubic with x0 and x1 exchanged, so the coordinate point sits
    // on a tangent line of the curve but off the curve itself.
    Ideal<Gf> I(R, {P(R, "x1*x2 - x0^2"), P(R, "x1*x3 - x0*x2"), P(R, "x0*x3 - x2^2")});
    auto Pd = pei_filtration(I);

    CHECK(Pd.istar == 2);
    CHECK(Pd.s == 2);
    // Tangential center: the image is a cuspidal plane cubic.
    CHECK(ideal_equal(pei(Pd, 0), Ideal<Gf>(Pd.S, {P(Pd.S, "x1*x3^2 - x2^3")})));
    CHECK(ideal_equal(pei(Pd, 1), Ideal<Gf>(Pd.S, {P(Pd.S, "x2"), P(Pd.S, "x3")})));
    CHECK(pei(Pd, 2).contains(poly_constant(*Pd.S, Pd.S->field.one())));

    auto cert = certify_pei(I, Pd, 6);
    CHECK(cert.compared_cells == 21);
}

TEST_CASE("mixed quadrics certify without expected values") {
    auto R = make_ring(Gf(101), 3);
    Ideal<Gf> I(R, {P(R, "x0^2 + x1*x2"), P(R, "x0*x1 + x2^2")});
    auto Pd = pei_filtration(I);
    certify_pei(I, Pd, 5);
    CHECK(Pd.istar >= 1);
}

TEST_CASE("ktilde betti tables are certified through the filtration bound") {
    auto R = make_ring(Gf(32003), 4);

    SUBCASE("twisted cubic") {
        auto I = twisted_cubic(R);
        auto Pd = pei_filtration(I);

        auto t0 = ktilde_betti(Pd, 0, 3, 3);
        CHECK(t0.certified_complete);
        CHECK(t0.at(0, 2) == 1); // Ktilde_0 is the principal conic ideal
        CHECK(t0.total_rank() == 1);

        auto t1 = ktilde_betti(Pd, 1, 3, 4);
        CHECK(t1.certified_complete);
        CHECK(t1.at(0, 2) == 3); // all three quadrics have x0-degree <= 1
        check_module_euler(*ktilde_pieces(Pd, 1, 5), t1, 5);

        // Regularity transfer: reg of the homogeneous ideal equals the
        // larger of reg Ktilde_{s-1} and s+1.
        auto tq = betti_table_quotient(I, 4, 4);
        auto inv = strand_invariants(tq);
        CHECK(inv.reg == std::max(t0.max_nonzero_row(), Pd.s + 1));
    }

    SUBCASE("skew lines") {
        auto I = skew_lines(R);
        auto Pd = pei_filtration(I);
        auto t0 = ktilde_betti(Pd, 0, 3, 3);
        CHECK(t0.certified_complete);
        CHECK(t0.at(0, 2) == 2);
        CHECK(t0.at(1, 2) == 1); // x1(x2, x3) resolves like two planes
        check_module_euler(*ktilde_pieces(Pd, 0, 5), t0, 5);

        auto tq = betti_table_quotient(I, 4, 4);
        auto inv = strand_invariants(tq);
        CHECK(inv.reg == std::max(t0.max_nonzero_row(), Pd.s + 1));
    }
}

TEST_CASE("quotient by ktilde kills the low rows") {
    auto R = make_ring(Gf(32003), 4);
    auto I = twisted_cubic(R);
    auto Pd = pei_filtration(I);

    for (int h = 0; h <= 1; ++h) {
        auto M = ideal_over_ktilde_pieces(Pd, h, 4);
        auto t = module_betti(*M, 3, 3);
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; q <= h + 1; ++q) CHECK(t.at(p, q) == 0);
    }
}

TEST_CASE("deep filtration steps match the full quotient") {
    auto R = make_ring(Gf(32003), 4);
    auto I = twisted_cubic(R);
    auto Pd = pei_filtration(I);

    // In any fixed row the quotient I/Ktilde_h agrees with Ktilde_d/Ktilde_h
    // once d reaches that row, so a deep step reproduces the whole window.
    auto full = module_betti(*ideal_over_ktilde_pieces(Pd, 0, 4), 3, 3);
    auto deep = module_betti(*ktilde_quotient_pieces(Pd, 3, 0, 4), 3, 3);
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) CHECK(full.at(p, q) == deep.at(p, q));
}

TEST_CASE("x0 decomposition and lead coefficient extraction") {
    auto R = make_ring(Gf(101), 4);
    auto S = make_ring(Gf(101), std::vector<std::string>{"x1", "x2", "x3"});
    auto g = P(R, "x0^2*x1 + x0*x2^2 + x0*x1*x2 - x3^3");

    auto parts = x0_decompose(*S, g);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].first == 0);
    CHECK(poly_to_string(*S, parts[0].second) == "-x3^3");
    CHECK(parts[1].first == 1);
    CHECK(poly_to_string(*S, parts[1].second) == "x1*x2 + x2^2");
    CHECK(parts[2].first == 2);
    CHECK(poly_to_string(*S, parts[2].second) == "x1");

    CHECK(d0_of(g) == 2);
    CHECK(poly_to_string(*S, lead_x0_coefficient(*S, g)) == "x1");
}

TEST_CASE("pei rejects unsuitable input") {
    auto R = make_ring(Gf(101), 4);
    CHECK_THROWS_AS(pei_filtration(Ideal<Gf>(R, {P(R, "x0^2 + x1")})), DomainError);
    auto R1 = make_ring(Gf(101), 1);
    CHECK_THROWS_AS(pei_filtration(Ideal<Gf>(R1, {P(R1, "x0^2")})), DomainError);
}
