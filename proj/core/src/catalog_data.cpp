#include "syzygy/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "syzygy/bounds.hpp"

namespace syz {

std::string category_name(Category c) {
    switch (c) {
        case Category::Var: return "Var";
        case Category::CC1: return "CC1";
        case Category::AlgSet: return "AlgSet";
    }
    return "?";
}

namespace {

std::vector<std::string> xvars(int count) {
    std::vector<std::string> v;
    for (int i = 0; i < count; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

std::string minor2(int top_i, int bot_i, int top_j, int bot_j) {
    std::ostringstream s;
    s << "x" << top_i << "*x" << bot_j << " - x" << bot_i << "*x" << top_j;
    return s.str();
}

void fill_vmd_table(CatalogEntry& e) {
    e.delta = 0;
    e.expected_cells[{0, 0}] = 1;
    for (int p = 1; p <= e.codim; ++p) {
        long long v = vmd_betti(e.codim, p).convert_to<long long>();
        e.strand.push_back(v);
        e.expected_cells[{p, 1}] = v;
    }
    e.tags = {"formula"};
}

CatalogEntry make_veronese5() {
    CatalogEntry e;
    e.name = "veronese5";
    e.display = "Veronese surface in P^5 (2x2 minors of the symmetric 3x3 matrix)";
    e.vars = xvars(6);
    e.components = {{"x0*x3 - x1^2", "x0*x4 - x1*x2", "x1*x4 - x2*x3", "x0*x5 - x2^2",
                     "x1*x5 - x2*x4", "x3*x5 - x4^2"}};
    e.category = Category::Var;
    e.irreducible = true;
    e.acm = true;
    e.quadratic = true;
    e.degree = 4;
    e.codim = 3;
    fill_vmd_table(e);
    return e;
}

CatalogEntry make_elliptic_nc5() {
    CatalogEntry e;
    e.name = "elliptic_nc5";
    e.display = "elliptic normal curve of degree 5 in P^4 (Pfaffians of x_{(i+j) mod 5})";
    e.vars = xvars(5);
    e.components = {{"x0^2 + x2*x3 - x1*x4", "x2^2 - x1*x3 + x0*x4", "x4^2 + x1*x2 - x0*x3",
                     "x1^2 - x0*x2 + x3*x4", "x3^2 + x0*x1 - x2*x4"}};
    e.category = Category::Var;
    e.irreducible = true;  // smooth (empty singular locus) and ACM-connected
    e.acm = true;
    e.quadratic = true;
    e.degree = 5;
    e.codim = 3;
    e.delta = 1;
    e.strand = {5, 5, 0};
    e.expected_cells = {{{0, 0}, 1}, {{1, 1}, 5}, {{2, 1}, 5}, {{3, 2}, 1}};
    e.tags = {"reference-table", "oracle:resolution"};
    return e;
}

CatalogEntry make_skew_lines() {
    CatalogEntry e;
    e.name = "skew_lines";
    e.display = "two skew lines in P^3 (nondegenerate, not connected in codimension 1)";
    e.vars = xvars(4);
    e.components = {{"x0*x2", "x0*x3", "x1*x2", "x1*x3"}};
    e.category = Category::AlgSet;
    e.irreducible = false;
    e.acm = false;
    e.quadratic = true;
    e.degree = 2;
    e.codim = 2;
    e.delta = -1;
    e.strand = {4, 4, 1};
    e.expected_cells = {{{0, 0}, 1}, {{1, 1}, 4}, {{2, 1}, 4}, {{3, 1}, 1}};
    e.tags = {"reference-table"};
    return e;
}

// Twisted cubic inside the hyperplane x4 = 0 of P^4, through (1:0:0:0:0).
std::vector<std::string> tcubic_in_h4() {
    return {"x4", "x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"};
}

CatalogEntry make_line_cup_tcubic() {
    CatalogEntry e;
    e.name = "line_cup_tcubic";
    e.display = "line union twisted cubic in P^4 meeting at one point (linearly joined)";
    e.vars = xvars(5);
    e.components = {{"x1", "x2", "x3"}, tcubic_in_h4()};
    e.category = Category::CC1;
    e.irreducible = false;
    e.acm = true;
    e.quadratic = true;
    e.degree = 4;
    e.codim = 3;
    e.delta = 0;
    e.strand = {6, 8, 3};
    e.expected_cells = {{{0, 0}, 1}, {{1, 1}, 6}, {{2, 1}, 8}, {{3, 1}, 3}};
    e.tags = {"reference-table"};
    return e;
}

CatalogEntry make_conics_meet_pt() {
    CatalogEntry e;
    e.name = "conics_meet_pt";
    e.display = "two plane conics in P^4 meeting at one point, spans too (linearly joined)";
    e.vars = xvars(5);
    e.components = {{"x3", "x4", "x0*x2 - x1^2"}, {"x1", "x2", "x0*x4 - x3^2"}};
    e.category = Category::CC1;
    e.irreducible = false;
    e.acm = true;
    e.quadratic = true;
    e.degree = 4;
    e.codim = 3;
    e.delta = 0;
    e.strand = {6, 8, 3};
    e.expected_cells = {{{0, 0}, 1}, {{1, 1}, 6}, {{2, 1}, 8}, {{3, 1}, 3}};
    e.tags = {"reference-table"};
    return e;
}

CatalogEntry make_conic_cup_tcubic_dbl() {
    CatalogEntry e;
    e.name = "conic_cup_tcubic_dbl";
    e.display = "plane conic union twisted cubic in P^4 meeting at one double point, "
                "spans meet in the common tangent line (not linearly joined)";
    e.vars = xvars(5);
    // Both curves pass through (1:0:0:0:0) with tangent line x2=x3=x4=0:
    // the contact scheme has length 2 supported there.
    e.components = {{"x2", "x3", "x0*x4 - x1^2"}, tcubic_in_h4()};
    e.category = Category::CC1;
    e.irreducible = false;
    e.acm = true;
    e.quadratic = true;
    e.degree = 5;
    e.codim = 3;
    e.delta = 1;
    e.strand = {5, 5, 0};
    e.expected_cells = {{{0, 0}, 1}, {{1, 1}, 5}, {{2, 1}, 5}, {{3, 2}, 1}};
    e.tags = {"reference-table"};
    return e;
}

CatalogEntry make_planecubic_cup_conic() {
    CatalogEntry e;
    e.name = "planecubic_cup_conic";
    e.display = "cuspidal plane cubic union plane conic in P^4, planes meeting at one "
                "point on both curves (linearly joined)";
    e.vars = xvars(5);
    e.components = {{"x3", "x4", "x1^3 - x0^2*x2"}, {"x1", "x2", "x0*x4 - x3^2"}};
    e.category = Category::CC1;
    e.irreducible = false;
    e.acm = true;
    e.quadratic = false;  // one cubic generator survives in the union
    e.degree = 5;
    e.codim = 3;
    e.delta = 1;
    e.strand = {5, 6, 2};
    e.expected_cells = {{{0, 0}, 1}, {{1, 1}, 5}, {{2, 1}, 6}, {{3, 1}, 2},
                        {{1, 2}, 1}, {{2, 2}, 2}, {{3, 2}, 1}};
    e.tags = {"reference-table"};
    return e;
}

bool parse_int_after(const std::string& name, const std::string& prefix, int& out) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return false;
    const std::string tail = name.substr(prefix.size());
    if (!std::all_of(tail.begin(), tail.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return false;
    if (tail.size() > 6) return false;
    out = std::stoi(tail);
    return true;
}

} // namespace

CatalogEntry catalog_rnc(int d) {
    if (d < 2) throw DomainError("rnc needs degree d >= 2, got " + std::to_string(d));
    CatalogEntry e;
    e.name = "rnc" + std::to_string(d);
    e.display = "rational normal curve of degree " + std::to_string(d) + " in P^" + std::to_string(d);
    e.vars = xvars(d + 1);
    std::vector<std::string> gens;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) gens.push_back(minor2(i, i + 1, j, j + 1));
    e.components = {gens};
    e.category = Category::Var;
    e.irreducible = true;
    e.acm = true;
    e.quadratic = true;
    e.degree = d;
    e.codim = d - 1;
    fill_vmd_table(e);
    return e;
}

CatalogEntry catalog_scroll(const std::vector<int>& blocks) {
    int total = 0;
    for (int a : blocks) {
        if (a < 1) throw DomainError("scroll blocks must be positive");
        total += a;
    }
    if (blocks.empty() || total < 2)
        throw DomainError("scroll needs blocks summing to at least 2");
    CatalogEntry e;
    e.name = "scroll";
    e.display = "rational normal scroll S(";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        e.name += "_" + std::to_string(blocks[i]);
        e.display += (i ? "," : "") + std::to_string(blocks[i]);
    }
    int nvars = total + static_cast<int>(blocks.size());
    e.display += ") in P^" + std::to_string(nvars - 1);
    e.vars = xvars(nvars);
    // Columns of the 2-row matrix: block b starting at variable s contributes
    // columns (x_{s+c}, x_{s+c+1}) for c = 0..a_b-1.
    std::vector<std::pair<int, int>> cols;
    int start = 0;
    for (int a : blocks) {
        for (int c = 0; c < a; ++c) cols.push_back({start + c, start + c + 1});
        start += a + 1;
    }
    std::vector<std::string> gens;
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = i + 1; j < cols.size(); ++j)
            gens.push_back(minor2(cols[i].first, cols[i].second, cols[j].first, cols[j].second));
    e.components = {gens};
    e.category = Category::Var;
    e.irreducible = true;
    e.acm = true;
    e.quadratic = true;
    e.degree = total;
    e.codim = total - 1;
    fill_vmd_table(e);
    return e;
}

CatalogEntry catalog_ci_quadrics(int n) {
    if (n < 3) throw DomainError("ci_quadrics needs ambient P^n with n >= 3, got " + std::to_string(n));
    CatalogEntry e;
    e.name = "ci_quadrics" + std::to_string(n);
    e.display = "smooth complete intersection of two quadrics in P^" + std::to_string(n);
    e.vars = xvars(n + 1);
    std::ostringstream q1, q2;
    for (int i = 0; i <= n; ++i) q1 << (i ? " + " : "") << "x" << i << "^2";
    for (int i = 1; i <= n; ++i) {
        if (i > 1) q2 << " + ";
        if (i > 1) q2 << i << "*";
        q2 << "x" << i << "^2";
    }
    e.components = {{q1.str(), q2.str()}};
    e.category = Category::Var;
    e.irreducible = true;
    e.acm = true;
    e.quadratic = true;
    e.degree = 4;
    e.codim = 2;
    e.delta = 1;
    e.strand = {2, 0};
    e.expected_cells = {{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}};
    e.tags = {"oracle:resolution"};
    return e;
}

CatalogEntry catalog_cone(const CatalogEntry& base) {
    CatalogEntry e = base;
    e.name = "cone_" + base.name;
    e.display = "cone over: " + base.display;
    e.vars.push_back("x" + std::to_string(base.vars.size()));
    e.tags.push_back("cone");
    // The coordinate ring gains a free variable, so the Betti table, degree,
    // codimension, and delta genus are unchanged.
    return e;
}

std::vector<std::string> catalog_names() {
    return {"rnc3", "rnc4", "rnc5", "scroll_1_2", "veronese5", "cone_rnc3",
            "ci_quadrics3", "elliptic_nc5", "skew_lines", "line_cup_tcubic",
            "conics_meet_pt", "conic_cup_tcubic_dbl", "planecubic_cup_conic"};
}

CatalogEntry catalog_entry(const std::string& name) {
    if (name == "veronese5") return make_veronese5();
    if (name == "elliptic_nc5") return make_elliptic_nc5();
    if (name == "skew_lines") return make_skew_lines();
    if (name == "line_cup_tcubic") return make_line_cup_tcubic();
    if (name == "conics_meet_pt") return make_conics_meet_pt();
    if (name == "conic_cup_tcubic_dbl") return make_conic_cup_tcubic_dbl();
    if (name == "planecubic_cup_conic") return make_planecubic_cup_conic();
    if (name == "ci_quadrics") return catalog_ci_quadrics(3);

    int param = 0;
    if (parse_int_after(name, "rnc", param)) return catalog_rnc(param);
    if (parse_int_after(name, "ci_quadrics", param)) return catalog_ci_quadrics(param);
    if (name.compare(0, 7, "scroll_") == 0) {
        std::vector<int> blocks;
        std::istringstream in(name.substr(7));
        std::string piece;
        while (std::getline(in, piece, '_')) {
            if (piece.empty() || !std::all_of(piece.begin(), piece.end(),
                                              [](char c) { return c >= '0' && c <= '9'; }))
                throw ParseError("bad scroll block in catalog name '" + name + "'");
            blocks.push_back(std::stoi(piece));
        }
        if (blocks.empty()) throw ParseError("catalog name '" + name + "' lists no scroll blocks");
        return catalog_scroll(blocks);
    }
    if (name.compare(0, 5, "cone_") == 0) return catalog_cone(catalog_entry(name.substr(5)));
    throw ParseError("unknown catalog entry '" + name + "'");
}

Ideal<Gf> catalog_ideal(const CatalogEntry& entry) {
    auto R = make_ring(Gf(entry.characteristic), entry.vars);
    bool first = true;
    Ideal<Gf> result(R, {});
    for (const auto& comp : entry.components) {
        std::vector<Poly<Gf>> gens;
        for (const auto& g : comp) gens.push_back(poly_parse(*R, g));
        Ideal<Gf> part(R, gens);
        result = first ? part : ideal_intersect(result, part);
        first = false;
    }
    return result;
}

std::string catalog_emit(const CatalogEntry& entry) {
    auto I = catalog_ideal(entry);
    std::ostringstream out;
    out << "# " << entry.name << ": " << entry.display << "\n";
    out << "field GF " << entry.characteristic << "\n";
    out << "vars";
    for (const auto& v : entry.vars) out << ' ' << v;
    out << "\n";
    for (const auto& g : I.canonical_gb()) out << poly_to_string(I.ring(), g) << "\n";
    return out.str();
}

} // namespace syz
