#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "syzygy/betti.hpp"
#include "syzygy/catalog.hpp"
#include "syzygy/hilbert.hpp"
#include "syzygy/io.hpp"

using namespace syz;

namespace {

// Certified quotient table with the full column window.  The Taylor bound on
// the regularity row is often far above the true table (the elliptic quintic
// needs qmax around 11 before certification kicks in), so grow qmax until the
// table certifies instead of guessing.
BettiTable certified_table(const Ideal<Gf>& I) {
    int pmax = static_cast<int>(I.ring().vars.size());
    for (int qmax = 3;; ++qmax) {
        BettiTable t = betti_table_quotient(I, pmax, qmax);
        if (t.certified_complete) return t;
        REQUIRE(qmax < 16);
    }
}

} // namespace

TEST_CASE("every built-in entry reproduces its attested metadata") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        CatalogEntry entry = catalog_entry(name);
        CHECK(entry.name == name);
        CHECK(entry.delta == entry.degree - entry.codim - 1);

        Ideal<Gf> I = catalog_ideal(entry);
        HilbertData H = hilbert_data(I);
        CHECK(H.degree == BigInt(entry.degree));
        CHECK(H.codim == entry.codim);

        BettiTable t = certified_table(I);
        CHECK(t.cells == entry.expected_cells);

        for (std::size_t i = 0; i < entry.strand.size(); ++i) {
            CAPTURE(i);
            CHECK(t.at(static_cast<int>(i) + 1, 1) == entry.strand[i]);
        }

        StrandInvariants si = strand_invariants(t);
        CHECK(entry.acm == (si.depth == H.krull_dim));

        bool quadratic = t.at(1, 1) > 0;
        for (int q = 2; q <= t.qmax; ++q)
            if (t.at(1, q) != 0) quadratic = false;
        CHECK(quadratic == entry.quadratic);
    }
}

TEST_CASE("rational normal curve generators are the Hankel minors") {
    CatalogEntry e = catalog_rnc(3);
    REQUIRE(e.components.size() == 1);
    CHECK(e.components[0] == std::vector<std::string>{
        "x0*x2 - x1*x1", "x0*x3 - x1*x2", "x1*x3 - x2*x2"});
    CHECK(e.vars.size() == 4);
    CHECK(e.degree == 3);
    CHECK(e.codim == 2);
    CHECK(e.strand == std::vector<long long>{3, 2});
    CHECK(e.tags == std::vector<std::string>{"formula"});

    CatalogEntry e6 = catalog_entry("rnc6");
    CHECK(e6.components[0].size() == 15);
    CHECK(e6.strand == std::vector<long long>{15, 40, 45, 24, 5});
}

TEST_CASE("scroll generators are pinned and a single block is the rnc") {
    CatalogEntry s = catalog_entry("scroll_1_2");
    REQUIRE(s.components.size() == 1);
    CHECK(s.components[0] == std::vector<std::string>{
        "x0*x3 - x1*x2", "x0*x4 - x1*x3", "x2*x4 - x3*x3"});
    CHECK(s.vars.size() == 5);
    CHECK(s.degree == 3);
    CHECK(s.codim == 2);
    CHECK(s.strand == std::vector<long long>{3, 2});

    CHECK(catalog_scroll({4}).components[0] == catalog_rnc(4).components[0]);

    CatalogEntry s22 = catalog_entry("scroll_2_2");
    CHECK(s22.vars.size() == 6);
    CHECK(s22.degree == 4);
    CHECK(s22.components[0].size() == 6);
}

TEST_CASE("complete intersection entry spells out both quadrics") {
    CatalogEntry e = catalog_ci_quadrics(3);
    REQUIRE(e.components.size() == 1);
    CHECK(e.components[0] == std::vector<std::string>{
        "x0^2 + x1^2 + x2^2 + x3^2", "x1^2 + 2*x2^2 + 3*x3^2"});
    CHECK(catalog_entry("ci_quadrics").name == "ci_quadrics3");
    CHECK(catalog_entry("ci_quadrics4").vars.size() == 5);
}

TEST_CASE("cone adds a free last variable and keeps the numbers") {
    CatalogEntry c = catalog_entry("cone_rnc3");
    CatalogEntry base = catalog_rnc(3);
    CHECK(c.vars.size() == 5);
    CHECK(c.vars.back() == "x4");
    CHECK(c.components == base.components);
    CHECK(c.degree == base.degree);
    CHECK(c.codim == base.codim);
    CHECK(c.expected_cells == base.expected_cells);
    CHECK(c.tags.back() == "cone");

    CHECK(catalog_entry("cone_cone_rnc3").vars.size() == 6);
    CHECK(catalog_entry("cone_ci_quadrics3").vars.size() == 5);
}

TEST_CASE("parameterized constructors reject bad input") {
    CHECK_THROWS_AS(catalog_rnc(1), DomainError);
    CHECK_THROWS_AS(catalog_scroll({}), DomainError);
    CHECK_THROWS_AS(catalog_scroll({0, 2}), DomainError);
    CHECK_THROWS_AS(catalog_scroll({1}), DomainError);
    CHECK_THROWS_AS(catalog_ci_quadrics(2), DomainError);
    CHECK_THROWS_AS(catalog_entry("rnc"), ParseError);
    CHECK_THROWS_AS(catalog_entry("rnc1"), DomainError);
    CHECK_THROWS_AS(catalog_entry("scroll_1_x"), ParseError);
    CHECK_THROWS_AS(catalog_entry("scroll_"), ParseError);
    CHECK_THROWS_AS(catalog_entry("veronese"), ParseError);
    CHECK_THROWS_AS(catalog_entry(""), ParseError);
    CHECK_THROWS_AS(catalog_entry("cone_nope"), ParseError);
}

TEST_CASE("emit round-trips through the ideal file parser") {
    for (const std::string name : {"rnc3", "skew_lines", "conics_meet_pt", "ci_quadrics3"}) {
        CAPTURE(name);
        CatalogEntry entry = catalog_entry(name);
        std::string text = catalog_emit(entry);
        IdealFileData data = parse_ideal_file(text);
        CHECK(data.field.characteristic == entry.characteristic);
        CHECK(data.vars == entry.vars);

        Ideal<Gf> I = catalog_ideal(entry);
        Ideal<Gf> J = build_ideal(data, Gf(entry.characteristic));
        CHECK(ideal_equal(I, J));
    }
}

TEST_CASE("category names render") {
    CHECK(category_name(Category::Var) == "Var");
    CHECK(category_name(Category::CC1) == "CC1");
    CHECK(category_name(Category::AlgSet) == "AlgSet");
    CHECK(catalog_entry("skew_lines").category == Category::AlgSet);
    CHECK(catalog_entry("line_cup_tcubic").category == Category::CC1);
    CHECK(catalog_entry("veronese5").category == Category::Var);
}
