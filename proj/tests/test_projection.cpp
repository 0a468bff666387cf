#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <syzygy/io.hpp>
#include <syzygy/projection.hpp>

using namespace syz;

namespace {

template <class K>
Poly<K> P(const RingPtr<K>& R, const std::string& text) {
    return poly_parse(*R, text);
}

Ideal<Gf> twisted_cubic(const RingPtr<Gf>& R) {
    return Ideal<Gf>(R, {P(R, "x0*x2 - x1^2"), P(R, "x0*x3 - x1*x2"), P(R, "x1*x3 - x2^2")});
}

Ideal<Gf> rational_normal_quartic(const RingPtr<Gf>& R) {
    std::vector<Poly<Gf>> gens;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            auto a = poly_mul(*R, poly_variable(*R, i), poly_variable(*R, j + 1));
            auto b = poly_mul(*R, poly_variable(*R, i + 1), poly_variable(*R, j));
            gens.push_back(poly_sub(*R, a, b));
        }
    return Ideal<Gf>(R, std::move(gens));
}

bool vanishes_at(const Ideal<Gf>& I, const Row<Gf>& q) {
    for (const auto& g : I.gens())
        if (!I.ring().field.is_zero(poly_eval(I.ring(), g, q))) return false;
    return true;
}

} // namespace

TEST_CASE("affine root solver enumerates and refuses correctly") {
    auto A = make_ring(Gf(101), 2);
    SUBCASE("two rational points in order") {
        auto roots = detail::affine_roots(A, {P(A, "x0^2 - 1"), P(A, "x0 + x1")});
        REQUIRE(roots.size() == 2);
        CHECK(roots[0] == Row<Gf>{100, 1}); // the last variable is scanned in ascending order
        CHECK(roots[1] == Row<Gf>{1, 100});
    }
    SUBCASE("inconsistent system") {
        CHECK(detail::affine_roots(A, {P(A, "x0"), P(A, "x0 + 1")}).empty());
    }
    SUBCASE("positive-dimensional system yields no points") {
        CHECK(detail::affine_roots(A, {P(A, "x0")}).empty());
    }
}

TEST_CASE("jacobian rank classifies points") {
    auto R = make_ring(Gf(32003), 4);
    auto I = twisted_cubic(R);
    CHECK(jacobian_rank_at(I, Row<Gf>{1, 0, 0, 0}) == 2);

    auto R3 = make_ring(Gf(32003), 3);
    Ideal<Gf> cusp(R3, {P(R3, "x0*x2^2 - x1^3")});
    CHECK(jacobian_rank_at(cusp, Row<Gf>{1, 0, 0}) == 0); // the cusp itself
    CHECK(jacobian_rank_at(cusp, Row<Gf>{1, 1, 1}) == 1); // a smooth point
}

TEST_CASE("smooth point sampling on the twisted cubic") {
    auto R = make_ring(Gf(32003), 4);
    auto I = twisted_cubic(R);
    Rng rng(mix_seed(2026, "projection-tests"));
    auto sample = sample_smooth_point(I, rng);
    REQUIRE(sample.has_value());
    CHECK(sample->smooth);
    CHECK(sample->general);
    CHECK(sample->e == 2);
    CHECK(sample->t == 2);
    CHECK(sample->s == 1);
    CHECK(vanishes_at(I, sample->point));
}

TEST_CASE("no points on an empty scheme") {
    auto R = make_ring(Gf(32003), 4);
    Ideal<Gf> irrelevant(R, {P(R, "x0"), P(R, "x1"), P(R, "x2"), P(R, "x3")});
    Rng rng(mix_seed(2026, "projection-tests"));
    CHECK_FALSE(sample_smooth_point(irrelevant, rng).has_value());
}

TEST_CASE("inner projection of the twisted cubic is a conic") {
    auto R = make_ring(Gf(32003), 4);
    auto I = twisted_cubic(R);
    Rng rng(mix_seed(2026, "tc-project"));
    auto sample = sample_smooth_point(I, rng);
    REQUIRE(sample.has_value());
    auto pr = inner_projection(I, sample->point);
    CHECK(pr.t == 2);
    CHECK(pr.s == 1);
    auto hd = hilbert_data(pr.image);
    CHECK(hd.degree == 2);
    CHECK(hd.codim == 1);
    CHECK(hd.proj_dim == 1);
    CHECK(ideal_equal(pr.image, Ideal<Gf>(pr.image.ring_ptr(), {pr.image.canonical_gb().front()})));
}

TEST_CASE("iterated projection walks the degree down to a hypersurface") {
    auto R = make_ring(Gf(32003), 5);
    auto I = rational_normal_quartic(R);
    Rng rng(mix_seed(2026, "rnc4-chain"));
    auto chain = iterate_inner(I, rng);
    CHECK(chain.complete);
    CHECK(chain.stop_reason == "hypersurface");
    REQUIRE(chain.steps.size() == 2);
    CHECK(chain.steps[0].degree_before == 4);
    CHECK(chain.steps[0].degree_after == 3);
    CHECK(chain.steps[1].degree_before == 3);
    CHECK(chain.steps[1].degree_after == 2);
    auto hd = hilbert_data(chain.ideals.back());
    CHECK(hd.codim == 1);
    CHECK(hd.degree == 2);
}

TEST_CASE("a hypersurface produces an empty chain") {
    auto R = make_ring(Gf(32003), 3);
    Ideal<Gf> conic(R, {P(R, "x0*x2 - x1^2")});
    Rng rng(mix_seed(2026, "hypersurface"));
    auto chain = iterate_inner(conic, rng);
    CHECK(chain.complete);
    CHECK(chain.steps.empty());
    CHECK(chain.ideals.size() == 1);
}

TEST_CASE("delta invariant") {
    auto R = make_ring(Gf(32003), 4);
    SUBCASE("twisted cubic has minimal degree") {
        auto d = delta_genus(twisted_cubic(R));
        CHECK(d.delta == 0);
        CHECK_FALSE(d.maybe_disconnected);
    }
    SUBCASE("skew lines land below the irreducible range") {
        Ideal<Gf> I(R, {P(R, "x0*x2"), P(R, "x0*x3"), P(R, "x1*x2"), P(R, "x1*x3")});
        auto d = delta_genus(I);
        CHECK(d.delta == -1);
        CHECK(d.maybe_disconnected);
    }
    SUBCASE("complete intersection of quadrics") {
        Ideal<Gf> I(R, {P(R, "x0^2 + x1^2 + x2^2 + x3^2"), P(R, "x1^2 + 2*x2^2 + 3*x3^2")});
        CHECK(delta_genus(I).delta == 1);
    }
    SUBCASE("degenerate input is refused") {
        Ideal<Gf> I(R, {P(R, "x0"), P(R, "x1*x3 - x2^2")});
        CHECK_THROWS_AS(delta_genus(I), DomainError);
    }
}

TEST_CASE("pei observables survive a change of complement coordinates") {
    auto R = make_ring(Gf(32003), 4);
    Rng rng(mix_seed(2026, "invariance"));
    CHECK(pei_invariance_probe(twisted_cubic(R), rng));
    // Outer center with a longer filtration.
    Ideal<Gf> J(R, {P(R, "x1*x2 - x0^2"), P(R, "x1*x3 - x0*x2"), P(R, "x0*x3 - x2^2")});
    CHECK(pei_invariance_probe(J, rng));
}
