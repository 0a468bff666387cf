#ifndef SYZYGY_CATALOG_HPP
#define SYZYGY_CATALOG_HPP

#include <map>
#include <string>
#include <vector>

#include "syzygy/ideal.hpp"
#include "syzygy/io.hpp"

namespace syz {

// Reference varieties and algebraic sets with attested ground-truth metadata.
// Union entries store one generator list per irreducible component; the ideal
// of the union is the intersection, computed on materialization.  Expected
// Betti cells carry provenance tags: "reference-table" means the table is
// copied from a published computation, "oracle:resolution" means it was
// validated against the raw-generator resolution oracle before being frozen,
// "formula" means the strand values come from the minimal-degree closed form.
//
// Irreducibility, category, and ACM flags are attested metadata: nothing here
// runs a primary decomposition.  Checks that need irreducibility must skip
// when the flag is false.

enum class Category { Var, CC1, AlgSet };

std::string category_name(Category c);

struct CatalogEntry {
    std::string name;     // canonical instance name, e.g. "rnc3"
    std::string display;  // one-line description
    std::uint32_t characteristic = 32003;
    std::vector<std::string> vars;
    std::vector<std::vector<std::string>> components;  // generators per component

    Category category = Category::Var;
    bool irreducible = false;
    bool acm = false;
    bool quadratic = false;  // every minimal generator has degree 2
    long long degree = 0;
    int codim = 0;      // e
    long long delta = 0;  // degree - codim - 1

    std::vector<long long> strand;  // expected beta_{p,1}(R/I), p = 1, 2, ...
    std::map<std::pair<int, int>, long long> expected_cells;  // full nonzero table of R/I
    std::vector<std::string> tags;
};

// Canonical names of the built-in instances, in catalog order.
std::vector<std::string> catalog_names();

// Build an entry by name.  Recognizes the built-in list plus the
// parameterized patterns rnc<d>, scroll_<a1>_..._<ak>, ci_quadrics<n>, and
// cone_<base>; throws ParseError on anything else.
CatalogEntry catalog_entry(const std::string& name);

// Parameterized constructors.  Invalid parameters throw DomainError.
CatalogEntry catalog_rnc(int d);
CatalogEntry catalog_scroll(const std::vector<int>& blocks);
CatalogEntry catalog_ci_quadrics(int n);
CatalogEntry catalog_cone(const CatalogEntry& base);

// Materialize the ideal of an entry (intersecting union components).
Ideal<Gf> catalog_ideal(const CatalogEntry& entry);

// Ideal file text for `catalog emit`: the canonical reduced Groebner basis
// of the materialized ideal, one generator per line.
std::string catalog_emit(const CatalogEntry& entry);

} // namespace syz

#endif
