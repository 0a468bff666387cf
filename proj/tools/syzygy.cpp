// syzygy: command line front end for the exact syzygy engine.
//
// Conventions shared by every subcommand:
//   * Regularity follows the ideal convention: reg refers to the saturated
//     defining ideal, which is reg of the quotient ring plus one.
//   * Input ideals are used exactly as written; --saturate replaces the
//     ideal by its saturation with respect to the irrelevant maximal ideal
//     before anything else runs.  The verify checkers saturate internally
//     regardless, since the statements they test concern closed schemes.
//   * Exit codes: 0 success, 1 a verification assertion failed, 2 bad input
//     or usage, 3 a computation hit its degree/row cap before certifying.
//   * All randomness flows from --seed (or the SYZYGY_SEED environment
//     variable); output is byte-identical across runs with a fixed seed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "syzygy/bounds.hpp"
#include "syzygy/catalog.hpp"
#include "syzygy/io.hpp"
#include "syzygy/verify.hpp"

using namespace syz;
using nlohmann::ordered_json;

namespace {

constexpr const char* kConventions =
    "Conventions: regularity is reported for the saturated defining ideal "
    "(reg of the quotient plus one); input ideals are used as written unless "
    "--saturate is given; verification checkers always saturate internally.";

std::uint64_t env_seed() {
    const char* env = std::getenv("SYZYGY_SEED");
    if (!env || !*env) return 7;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
        throw ParseError(std::string("SYZYGY_SEED is not a decimal integer: '") + env + "'");
    return v;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Shared input plumbing: a positional ideal file or a --catalog name, an
// optional field override, and the saturation switch.
struct InputOpts {
    std::string path;
    std::string catalog;
    std::uint32_t field = 0;  // 0 means "as declared"
    bool saturate = false;
};

void add_input_options(CLI::App* cmd, InputOpts& in) {
    cmd->add_option("file", in.path, "ideal file (field/vars headers, one generator per line)");
    cmd->add_option("--catalog", in.catalog, "build the input from a catalog entry instead");
    cmd->add_option("--field", in.field,
                    "compute over GF(p) regardless of the declared field (odd prime)");
    cmd->add_flag("--saturate", in.saturate,
                  "saturate with respect to the irrelevant ideal before computing");
}

struct LoadedIdeal {
    std::string label;
    Ideal<Gf> ideal;
};

LoadedIdeal load_input(const InputOpts& in) {
    if (in.path.empty() == in.catalog.empty())
        throw ParseError("give exactly one input: an ideal file or --catalog <name>");
    LoadedIdeal out{"", Ideal<Gf>(make_ring(Gf(32003), {"x0"}), {})};
    if (!in.catalog.empty()) {
        auto entry = catalog_entry(in.catalog);
        if (in.field) entry.characteristic = in.field;
        out.label = entry.name;
        out.ideal = catalog_ideal(entry);
    } else {
        auto data = parse_ideal_file(slurp(in.path));
        std::uint32_t p = in.field;
        if (!p) {
            if (data.field.kind != FieldSpec::Kind::PrimeField)
                throw ParseError("'" + in.path +
                                 "' declares field QQ; the CLI computes over a prime field, "
                                 "pass --field <p> to choose one");
            p = data.field.characteristic;
        }
        out.label = in.path;
        out.ideal = build_ideal(data, Gf(p));
    }
    if (in.saturate) out.ideal = ideal_saturate_irrelevant(out.ideal);
    return out;
}

std::string ring_line(const Ring<Gf>& R) {
    std::string s = "GF(" + std::to_string(R.field.modulus()) + ")[";
    for (std::size_t i = 0; i < R.vars.size(); ++i) s += (i ? "," : "") + R.vars[i];
    return s + "]";
}

void emit_machine(const ordered_json& doc, bool to_stdout, const std::string& report_path) {
    if (to_stdout) std::cout << doc.dump(2) << "\n";
    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) throw ParseError("cannot write '" + report_path + "'");
        out << doc.dump(2) << "\n";
    }
}

// ---- betti ------------------------------------------------------------------

int run_betti(const InputOpts& in, int pmax, int qmax, int qcap, const std::string& format,
              bool json, const std::string& report_path) {
    auto loaded = load_input(in);
    const auto& I = loaded.ideal;
    const auto& R = I.ring();

    BettiTable T;
    if (pmax >= 0 || qmax >= 0) {
        // Explicit window: compute exactly what was asked for and say
        // whether it provably contains the whole table.
        int pw = pmax >= 0 ? pmax : static_cast<int>(R.nvars());
        int qw = qmax >= 0 ? qmax : qcap;
        T = betti_table_quotient(I, pw, qw);
    } else {
        T = certified_quotient_table(I, qcap);
    }

    auto hd = hilbert_data(I);
    std::optional<DeltaGenus> dg;
    try {
        dg = delta_genus(I);
    } catch (const DomainError&) {
        // degenerate or empty input: no delta to report
    }
    std::optional<StrandInvariants> si;
    try {
        si = strand_invariants(T);
    } catch (const TruncationError&) {
        // window too small to read the invariants off; the table still prints
    }

    if (json || !report_path.empty()) {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "betti";
        j["input"] = loaded.label;
        j["ring"] = ring_line(R);
        j["saturated"] = in.saturate;
        j["table"] = betti_to_json(T);
        if (si) {
            j["strand"] = {{"a", si->a}, {"b", si->b}, {"reg", si->reg},
                           {"pd", si->pd},   {"depth", si->depth}};
        }
        j["hilbert"] = {{"degree", hd.degree.str()}, {"codim", hd.codim},
                        {"krull_dim", hd.krull_dim}};
        if (dg) j["delta"] = dg->delta;
        emit_machine(j, json, report_path);
        if (json) return 0;
    }

    std::cout << "# " << loaded.label << " over " << ring_line(R)
              << (in.saturate ? " (saturated)" : "") << "\n";
    std::cout << (T.certified_complete
                      ? "quotient Betti table (certified complete):"
                      : "quotient Betti table (window only, rows above qmax may be nonzero):")
              << "\n";
    if (format == "csv")
        std::cout << T.csv();
    else if (format == "markdown")
        std::cout << T.markdown();
    else
        std::cout << T.grid();
    if (si)
        std::cout << "strand: a=" << si->a << " b=" << si->b << " reg=" << si->reg
                  << " pd=" << si->pd << " depth=" << si->depth << "\n";
    std::cout << "degree=" << hd.degree << " codim=" << hd.codim
              << " krull_dim=" << hd.krull_dim;
    if (dg) std::cout << " delta=" << dg->delta;
    std::cout << "\n";
    return 0;
}

// ---- pei --------------------------------------------------------------------

Row<Gf> parse_point(const std::string& text, const Ring<Gf>& R) {
    Row<Gf> q;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ','))
        q.push_back(static_cast<std::uint64_t>(std::strtoull(tok.c_str(), nullptr, 10)) %
                    R.field.modulus());
    if (q.size() != R.nvars())
        throw ParseError("--point needs " + std::to_string(R.nvars()) +
                         " comma-separated coordinates, got " + std::to_string(q.size()));
    return q;
}

int run_pei(const InputOpts& in, const std::string& point_text, std::uint64_t seed, int mcap,
            bool json, const std::string& report_path) {
    auto loaded = load_input(in);
    auto X = ideal_saturate_irrelevant(loaded.ideal);

    Row<Gf> q;
    if (!point_text.empty()) {
        q = parse_point(point_text, X.ring());
    } else {
        auto centers = detail::sample_centers(X, mix_seed(seed, "pei-cli"), 1);
        if (centers.empty())
            throw DomainError("no smooth rational center found; pass --point explicitly");
        q = centers.front();
    }

    auto pr = inner_projection(X, q);
    const auto& P = pr.filtration;

    std::string cert_status;
    std::size_t cert_cells = 0;
    bool cert_ok = false;
    try {
        auto cert = certify_pei(pr.normalized, P, mcap);
        cert_ok = true;
        cert_cells = cert.compared_cells;
        cert_status = "certified against direct linear algebra through degree " +
                      std::to_string(mcap) + " (" + std::to_string(cert_cells) + " cells)";
    } catch (const DomainError& err) {
        cert_status = std::string("FAILED: ") + err.what();
    }
    bool tangent = ideal_equal(pei(P, P.istar), tangent_space_ideal(pr.normalized, P.S));

    if (json || !report_path.empty()) {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "pei";
        j["input"] = loaded.label;
        j["center"] = q;
        j["t"] = pr.t;
        j["s"] = pr.s;
        j["istar"] = P.istar;
        ordered_json levels = ordered_json::array();
        for (int i = 0; i <= P.istar; ++i) {
            ordered_json lvl;
            lvl["i"] = i;
            ordered_json gens = ordered_json::array();
            auto Ki = pei(P, i);
            for (const auto& g : Ki.canonical_gb()) gens.push_back(poly_to_string(*P.S, g));
            lvl["gens"] = std::move(gens);
            levels.push_back(std::move(lvl));
        }
        j["levels"] = std::move(levels);
        j["certified"] = cert_ok;
        j["certification"] = cert_status;
        j["stable_equals_tangent"] = tangent;
        emit_machine(j, json, report_path);
        if (json) return cert_ok ? 0 : 1;
    }

    std::cout << "# " << loaded.label << ", center q=" << point_str(q) << "\n";
    std::cout << "coordinates moved so the center is (1:0:...:0); levels live in the "
                 "hyperplane ring "
              << ring_line(*P.S) << "\n";
    std::cout << "t=" << pr.t << " (independent linear forms in K_1), s=" << pr.s
              << " (stabilization), istar=" << P.istar << "\n";
    for (int i = 0; i <= P.istar; ++i) {
        auto Ki = pei(P, i);
        std::cout << "K_" << i << ":";
        bool first = true;
        for (const auto& g : Ki.canonical_gb()) {
            std::cout << (first ? " " : ", ") << poly_to_string(*P.S, g);
            first = false;
        }
        if (first) std::cout << " (0)";
        std::cout << "\n";
    }
    std::cout << "certification: " << cert_status << "\n";
    std::cout << "stable ideal equals the tangent-space ideal: " << (tangent ? "yes" : "no")
              << "\n";
    return cert_ok ? 0 : 1;
}

// ---- project ----------------------------------------------------------------

int run_project(const InputOpts& in, std::uint64_t seed, int steps, bool with_betti, bool json,
                const std::string& report_path) {
    auto loaded = load_input(in);
    Rng rng(mix_seed(seed, "project-cli"));
    auto chain = iterate_inner(loaded.ideal, rng);

    auto describe = [&](const Ideal<Gf>& ideal) {
        ordered_json d;
        auto hd = hilbert_data(ideal);
        d["e"] = hd.codim;
        d["degree"] = hd.degree.str();
        try {
            d["delta"] = delta_genus(ideal).delta;
        } catch (const DomainError&) {
            d["delta"] = nullptr;
        }
        if (with_betti) d["table"] = betti_to_json(certified_quotient_table(ideal));
        return d;
    };

    int shown = static_cast<int>(chain.steps.size());
    if (steps >= 0 && steps < shown) shown = steps;

    ordered_json start = describe(chain.ideals.front());
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < shown; ++i) {
        const auto& st = chain.steps[i];
        ordered_json row;
        row["step"] = i + 1;
        row["center"] = st.center;
        row["t"] = st.t;
        row["s"] = st.s;
        auto img = describe(chain.ideals[i + 1]);
        for (auto& [k, v] : img.items()) row[k] = v;
        rows.push_back(std::move(row));
    }
    ordered_json tail;
    tail["complete"] = chain.complete;
    tail["stop"] = chain.stop_reason;
    if (shown < static_cast<int>(chain.steps.size()))
        tail["suppressed_steps"] = static_cast<int>(chain.steps.size()) - shown;

    if (json || !report_path.empty()) {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "project";
        j["input"] = loaded.label;
        j["seed"] = seed;
        j["start"] = start;
        j["steps"] = rows;
        for (auto& [k, v] : tail.items()) j[k] = v;
        emit_machine(j, json, report_path);
        if (json) return 0;
    }

    // Default output is a JSON-lines trace: one object per projection step.
    ordered_json first;
    first["start"] = loaded.label;
    for (auto& [k, v] : start.items()) first[k] = v;
    std::cout << first.dump() << "\n";
    for (const auto& row : rows) std::cout << row.dump() << "\n";
    std::cout << tail.dump() << "\n";
    return 0;
}

// ---- bounds -----------------------------------------------------------------

int run_bounds(int e, std::optional<int> b, bool json, const std::string& report_path) {
    auto prof = bound_profile(e, b);
    if (json || !report_path.empty()) {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "bounds";
        j["e"] = e;
        if (b) j["b"] = *b;
        auto row = [](const std::vector<BigInt>& vals) {
            ordered_json a = ordered_json::array();
            for (const auto& v : vals) a.push_back(v.str());
            return a;
        };
        j["vmd"] = row(prof.vmd);
        j["delpezzo"] = row(prof.delpezzo);
        if (b) j["improved_conjectural"] = row(prof.improved);
        j["tags"] = prof.tags;
        emit_machine(j, json, report_path);
        if (json) return 0;
    }
    std::cout << prof.grid();
    return 0;
}

// ---- verify -----------------------------------------------------------------

int run_verify(const std::string& suite, std::uint64_t seed, bool timing, bool json,
               const std::string& report_path) {
    SuiteOptions opt;
    opt.seed = seed;
    opt.timing = timing;
    auto reports = run_suite(suite, opt);

    int failures = 0;
    for (const auto& r : reports)
        if (r.failed()) ++failures;

    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) throw ParseError("cannot write '" + report_path + "'");
        if (report_path.size() >= 3 && report_path.substr(report_path.size() - 3) == ".md")
            out << render_reports_markdown(reports, seed);
        else if (report_path.size() >= 5 &&
                 report_path.substr(report_path.size() - 5) == ".json")
            out << reports_to_json(reports, seed, timing).dump(2) << "\n";
        else
            throw ParseError("--report wants a .json or .md path, got '" + report_path + "'");
    }

    if (json) {
        std::cout << reports_to_json(reports, seed, timing).dump(2) << "\n";
    } else {
        int counts[5] = {0, 0, 0, 0, 0};
        for (const auto& r : reports) {
            counts[static_cast<int>(r.worst())]++;
            std::cout << render_report(r, timing);
        }
        std::cout << reports.size() << " checks (suite " << suite << ", seed " << seed
                  << "): pass=" << counts[0] << " fail=" << counts[1]
                  << " skipped=" << counts[2] << " vacuous=" << counts[3]
                  << " open-recorded=" << counts[4] << "\n";
    }
    return failures ? 1 : 0;
}

// ---- catalog ----------------------------------------------------------------

int run_catalog_list(bool json, const std::string& report_path) {
    ordered_json entries = ordered_json::array();
    for (const auto& name : catalog_names()) {
        auto e = catalog_entry(name);
        ordered_json j;
        j["name"] = e.name;
        j["display"] = e.display;
        j["category"] = category_name(e.category);
        j["vars"] = e.vars.size();
        j["degree"] = e.degree;
        j["codim"] = e.codim;
        j["delta"] = e.delta;
        j["irreducible"] = e.irreducible;
        j["acm"] = e.acm;
        j["quadratic"] = e.quadratic;
        j["tags"] = e.tags;
        entries.push_back(std::move(j));
    }
    if (json || !report_path.empty()) {
        ordered_json j;
        j["schema"] = 1;
        j["command"] = "catalog-list";
        j["entries"] = std::move(entries);
        emit_machine(j, json, report_path);
        if (json) return 0;
    }
    for (const auto& e : entries)
        std::cout << e["name"].get<std::string>() << "  [" << e["category"].get<std::string>()
                  << "]  deg=" << e["degree"] << " codim=" << e["codim"]
                  << " delta=" << e["delta"] << "  " << e["display"].get<std::string>() << "\n";
    std::cout << "parameterized families: rnc<d>, ci_quadrics<n>, scroll_<a>_<b>..., "
                 "cone_<entry>\n";
    return 0;
}

int run_catalog_emit(const std::string& name, std::uint32_t field) {
    auto entry = catalog_entry(name);
    if (field) entry.characteristic = field;
    std::cout << catalog_emit(entry);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact syzygy engine: Betti tables, partial elimination ideals, inner "
                 "projections, and machine verification of the strand statements"};
    app.require_subcommand(1);
    app.footer(kConventions);

    std::uint64_t seed = 0;
    try {
        seed = env_seed();
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }

    // betti
    InputOpts betti_in;
    int betti_pmax = -1, betti_qmax = -1, betti_qcap = 16;
    std::string betti_format = "grid";
    bool betti_json = false;
    std::string betti_report;
    auto* betti = app.add_subcommand(
        "betti", "graded Betti table of the quotient ring, plus strand invariants");
    add_input_options(betti, betti_in);
    betti->add_option("--pmax", betti_pmax, "explicit column window (default: all columns)");
    betti->add_option("--qmax", betti_qmax,
                      "explicit row window; without it the table is grown until certified");
    betti->add_option("--degree-cap", betti_qcap,
                      "refuse certification past this row bound (exit 3)")->capture_default_str();
    betti->add_option("--format", betti_format, "grid | csv | markdown")->capture_default_str()
        ->check(CLI::IsMember({"grid", "csv", "markdown"}));
    betti->add_flag("--json", betti_json, "machine-readable output");
    betti->add_option("--report", betti_report, "also write the JSON document to this path");
    betti->footer(kConventions);

    // pei
    InputOpts pei_in;
    std::string pei_point;
    std::uint64_t pei_seed = seed;
    int pei_mcap = 6;
    bool pei_json = false;
    std::string pei_report;
    auto* peic = app.add_subcommand(
        "pei", "partial elimination ideal filtration at a smooth point, with certification");
    add_input_options(peic, pei_in);
    peic->add_option("--point", pei_point, "center coordinates c0,c1,... (default: sampled)");
    peic->add_option("--seed", pei_seed, "seed for center sampling (or SYZYGY_SEED)")->capture_default_str();
    peic->add_option("--degree-cap", pei_mcap,
                     "certify the extraction against linear algebra through this degree")->capture_default_str();
    peic->add_flag("--json", pei_json, "machine-readable output");
    peic->add_option("--report", pei_report, "also write the JSON document to this path");
    peic->footer(kConventions);

    // project
    InputOpts proj_in;
    std::uint64_t proj_seed = seed;
    int proj_steps = -1;
    bool proj_betti = false, proj_json = false;
    std::string proj_report;
    auto* proj = app.add_subcommand(
        "project", "iterate general inner projections; JSON-lines trace of the chain");
    add_input_options(proj, proj_in);
    proj->add_option("--seed", proj_seed, "seed for center sampling (or SYZYGY_SEED)")->capture_default_str();
    proj->add_option("--steps", proj_steps, "print at most this many steps");
    proj->add_flag("--betti", proj_betti, "include the certified table of each image");
    proj->add_flag("--json", proj_json, "single JSON document instead of JSON-lines");
    proj->add_option("--report", proj_report, "also write the JSON document to this path");
    proj->footer(kConventions);

    // bounds
    int bounds_e = 0;
    int bounds_b = -1;
    bool bounds_json = false;
    std::string bounds_report;
    auto* bounds = app.add_subcommand(
        "bounds", "closed-form strand ceilings for codimension e (improved row is CONJECTURAL)");
    bounds->add_option("--e", bounds_e, "codimension")->required();
    bounds->add_option("--b", bounds_b, "b(X) parameter enabling the conjectural improved row");
    bounds->add_flag("--json", bounds_json, "machine-readable output");
    bounds->add_option("--report", bounds_report, "also write the JSON document to this path");
    bounds->footer(kConventions);

    // verify
    std::string verify_suite = "all";
    std::uint64_t verify_seed = seed;
    bool verify_timing = false, verify_json = false;
    std::string verify_report;
    auto* verify = app.add_subcommand(
        "verify", "run the statement checkers on the catalog; exit 1 iff any assertion fails");
    verify->add_option("--suite", verify_suite, "which suite to run")->capture_default_str()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--seed", verify_seed, "suite seed (or SYZYGY_SEED)")->capture_default_str();
    verify->add_flag("--timing", verify_timing,
                     "include wall-clock times (off by default so output is byte-identical)");
    verify->add_flag("--json", verify_json, "machine-readable report on stdout");
    verify->add_option("--report", verify_report, "write the report to a .json or .md file");
    verify->footer(kConventions);

    // catalog
    auto* cat = app.add_subcommand("catalog", "built-in example schemes");
    cat->require_subcommand(1);
    bool cat_json = false;
    std::string cat_report;
    auto* cat_list = cat->add_subcommand("list", "list entries with their attested metadata");
    cat_list->add_flag("--json", cat_json, "machine-readable output");
    cat_list->add_option("--report", cat_report, "also write the JSON document to this path");
    std::string emit_name;
    std::uint32_t emit_field = 0;
    auto* cat_emit =
        cat->add_subcommand("emit", "print an entry as an ideal file (canonical Groebner basis)");
    cat_emit->add_option("name", emit_name, "entry name")->required();
    cat_emit->add_option("--field", emit_field, "emit over GF(p) instead of the default");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (betti->parsed())
            return run_betti(betti_in, betti_pmax, betti_qmax, betti_qcap, betti_format,
                             betti_json, betti_report);
        if (peic->parsed())
            return run_pei(pei_in, pei_point, pei_seed, pei_mcap, pei_json, pei_report);
        if (proj->parsed())
            return run_project(proj_in, proj_seed, proj_steps, proj_betti, proj_json,
                               proj_report);
        if (bounds->parsed())
            return run_bounds(bounds_e, bounds_b < 0 ? std::nullopt : std::optional<int>(bounds_b),
                              bounds_json, bounds_report);
        if (verify->parsed())
            return run_verify(verify_suite, verify_seed, verify_timing, verify_json,
                              verify_report);
        if (cat->parsed()) {
            if (cat_list->parsed()) return run_catalog_list(cat_json, cat_report);
            if (cat_emit->parsed()) return run_catalog_emit(emit_name, emit_field);
        }
    } catch (const TruncationError& err) {
        std::cerr << "truncated: " << err.what() << "\n";
        return 3;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
