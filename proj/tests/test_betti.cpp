#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <syzygy/betti.hpp>
#include <syzygy/hilbert.hpp>
#include <syzygy/resolution.hpp>

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

// The graded Euler characteristic of the resolution must reproduce the
// Hilbert function: sum_p (-1)^p sum_q beta_{p,q} dim R_{d-p-q} = HF(d).
void check_euler_characteristic(const Ideal<Gf>& I, const BettiTable& t, int dmax) {
    auto hd = hilbert_data(I);
    int n = static_cast<int>(I.ring().nvars());
    for (int d = 0; d <= dmax; ++d) {
        BigInt sum = 0;
        for (const auto& [pq, v] : t.cells) {
            auto [p, q] = pq;
            BigInt dimfree = binom(n - 1 + d - p - q, n - 1);
            sum += (p % 2 == 0 ? 1 : -1) * v * dimfree;
        }
        CHECK(sum == hd.hf(d));
    }
}

void check_tables_agree(const BettiTable& a, const BettiTable& b) {
    REQUIRE(a.pmax == b.pmax);
    REQUIRE(a.qmax == b.qmax);
    for (int p = 0; p <= a.pmax; ++p)
        for (int q = 0; q <= a.qmax; ++q) CHECK(a.at(p, q) == b.at(p, q));
}

} // namespace

TEST_CASE("betti table of the twisted cubic") {
    auto R = make_ring(Gf(32003), 4);
    auto I = twisted_cubic(R);
    auto t = betti_table_quotient(I, 4, 4);
    CHECK(t.certified_complete);
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(1, 1) == 3);
    CHECK(t.at(2, 1) == 2);
    CHECK(t.total_rank() == 6);
    check_euler_characteristic(I, t, 8);

    auto s = strand_invariants(t);
    CHECK(s.a == 2);
    CHECK(s.b == 3);
    CHECK(s.reg == 2);
    CHECK(s.pd == 2);
    CHECK(s.depth == 2);
    CHECK_FALSE(s.no_quadrics);
}

TEST_CASE("betti table of two skew lines") {
    auto R = make_ring(Gf(32003), 4);
    auto I = skew_lines(R);
    auto t = betti_table_quotient(I, 4, 4);
    CHECK(t.certified_complete);
    CHECK(t.at(1, 1) == 4);
    CHECK(t.at(2, 1) == 4);
    CHECK(t.at(3, 1) == 1);
    CHECK(t.total_rank() == 10);
    check_euler_characteristic(I, t, 8);

    auto s = strand_invariants(t);
    CHECK(s.a == 3);
    CHECK(s.b == 4);
    CHECK(s.reg == 2);
    CHECK(s.pd == 3);
    CHECK(s.depth == 1);
}

TEST_CASE("resolution oracle agrees with the koszul engine") {
    auto R = make_ring(Gf(32003), 4);
    SUBCASE("twisted cubic") {
        auto I = twisted_cubic(R);
        check_tables_agree(betti_table_quotient(I, 4, 4), resolution_betti(I, 4, 4));
    }
    SUBCASE("skew lines") {
        auto I = skew_lines(R);
        check_tables_agree(betti_table_quotient(I, 4, 4), resolution_betti(I, 4, 4));
    }
    SUBCASE("non-radical monomial ideal") {
        Ideal<Gf> I(R, {P(R, "x0^2"), P(R, "x0*x1"), P(R, "x1^3")});
        check_tables_agree(betti_table_quotient(I, 4, 4), resolution_betti(I, 4, 4));
    }
}

TEST_CASE("complete intersection of two quadrics") {
    auto R = make_ring(Gf(32003), 4);
    Ideal<Gf> I(R, {P(R, "x0^2 + x1^2 + x2^2 + x3^2"), P(R, "x1^2 + 2*x2^2 + 3*x3^2")});
    auto t = betti_table_quotient(I, 4, 4);
    CHECK(t.certified_complete);
    // Koszul complex on two quadrics: single linear syzygy row is empty,
    // the relation sits in degree 4.
    CHECK(t.at(1, 1) == 2);
    CHECK(t.at(2, 2) == 1);
    CHECK(t.total_rank() == 4);
    check_euler_characteristic(I, t, 8);
    auto s = strand_invariants(t);
    CHECK(s.reg == 3);
    CHECK(s.depth == 2);
}

TEST_CASE("betti table of an ideal module matches the quotient shift") {
    auto R = make_ring(Gf(32003), 4);
    auto I = twisted_cubic(R);
    auto tq = betti_table_quotient(I, 4, 4);
    auto ti = betti_table_ideal(I, 3, 4);
    for (int p = 0; p <= 3; ++p)
        for (int q = 1; q <= 4; ++q) CHECK(ti.at(p, q) == tq.at(p + 1, q - 1));
}

TEST_CASE("truncation is refused, not guessed") {
    auto R = make_ring(Gf(32003), 4);
    auto I = twisted_cubic(R);
    auto pieces = pieces_quotient_ring(I, 3);
    auto t = module_betti(*pieces, 4, 2, -1);
    CHECK_FALSE(t.certified_complete);
    t.kind = BettiTable::Kind::QuotientRing;
    CHECK_THROWS_AS(strand_invariants(t), TruncationError);
}

TEST_CASE("taylor bound certifies small tables") {
    auto R = make_ring(Gf(32003), 4);
    CHECK(taylor_reg_bound(twisted_cubic(R)) <= 4);
    CHECK(taylor_reg_bound(skew_lines(R)) <= 4);
    std::vector<Monomial> lms{Monomial({2, 0}), Monomial({0, 2})};
    CHECK(taylor_reg_bound(lms) == 2); // lcm degree 4 minus two generators
}

TEST_CASE("grid rendering uses dashes for zero cells") {
    auto R = make_ring(Gf(32003), 4);
    auto t = betti_table_quotient(twisted_cubic(R), 3, 2);
    auto g = t.grid();
    CHECK(g.find('-') != std::string::npos);
    CHECK(g.find("q\\p") != std::string::npos);
    auto csv = t.csv();
    CHECK(csv.find("1,0,3,2") != std::string::npos); // row q=1: 0,3,2 across p=0..2

}
