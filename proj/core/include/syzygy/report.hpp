#ifndef SYZYGY_REPORT_HPP
#define SYZYGY_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "syzygy/betti.hpp"
#include "syzygy/rng.hpp"

namespace syz {

// Five-valued check verdicts.  PASS/FAIL are the usual pair.  SKIPPED means
// a precondition of the statement is not met on this instance (wrong
// category, t < e, s > 1, ...) and nothing was asserted.  VACUOUS marks a
// material conditional whose hypothesis is false.  OPEN-RECORDED tallies the
// outcome of a question that is open: the value is evidence, never a
// failure.  Only FAIL affects exit codes.
enum class Verdict { Pass, Fail, Skipped, Vacuous, OpenRecorded };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Skipped: return "SKIPPED";
        case Verdict::Vacuous: return "VACUOUS";
        case Verdict::OpenRecorded: return "OPEN-RECORDED";
    }
    return "?";
}

inline int verdict_severity(Verdict v) {
    switch (v) {
        case Verdict::Pass: return 0;
        case Verdict::Vacuous: return 1;
        case Verdict::OpenRecorded: return 2;
        case Verdict::Skipped: return 3;
        case Verdict::Fail: return 4;
    }
    return 4;
}

struct Assertion {
    std::string label;
    std::string relation;  // "==", "<=", ">=", "info", "classify"
    std::string lhs;
    std::string rhs;
    Verdict verdict = Verdict::Pass;
    std::string note;
};

struct CheckReport {
    std::string check_id;
    std::string instance;
    std::uint64_t seed = 0;
    double millis = 0.0;      // human output only unless explicitly requested
    std::string repro;        // ideal file text, filled in when a check fails
    std::vector<Assertion> assertions;

    // Headline verdict.  Any failure dominates.  Otherwise info rows do not
    // count, a check whose every real line was skipped is SKIPPED, and a
    // skipped line next to asserted ones does not mask them (a sub-statement
    // that does not apply is noted inline, not promoted to the headline).
    Verdict worst() const {
        bool any_fail = false, any_real = false, any_asserted = false;
        Verdict w = Verdict::Pass;
        for (const auto& a : assertions) {
            if (a.verdict == Verdict::Fail) any_fail = true;
            if (a.relation == "info") continue;
            any_real = true;
            if (a.verdict == Verdict::Skipped) continue;
            any_asserted = true;
            if (verdict_severity(a.verdict) > verdict_severity(w)) w = a.verdict;
        }
        if (any_fail) return Verdict::Fail;
        if (any_real && !any_asserted) return Verdict::Skipped;
        return w;
    }

    bool failed() const {
        for (const auto& a : assertions)
            if (a.verdict == Verdict::Fail) return true;
        return false;
    }

    Assertion& add(std::string label, std::string relation, std::string lhs, std::string rhs,
                   Verdict v, std::string note = "") {
        assertions.push_back(Assertion{std::move(label), std::move(relation), std::move(lhs),
                                       std::move(rhs), v, std::move(note)});
        return assertions.back();
    }

    template <class L, class R>
    void check_eq(const std::string& label, const L& lhs, const R& rhs, std::string note = "") {
        add(label, "==", value_str(lhs), value_str(rhs),
            value_str(lhs) == value_str(rhs) ? Verdict::Pass : Verdict::Fail, std::move(note));
    }

    void check_le(const std::string& label, const BigInt& lhs, const BigInt& rhs, std::string note = "") {
        add(label, "<=", lhs.str(), rhs.str(), lhs <= rhs ? Verdict::Pass : Verdict::Fail,
            std::move(note));
    }

    void check_ge(const std::string& label, const BigInt& lhs, const BigInt& rhs, std::string note = "") {
        add(label, ">=", lhs.str(), rhs.str(), lhs >= rhs ? Verdict::Pass : Verdict::Fail,
            std::move(note));
    }

    void check_true(const std::string& label, bool value, std::string note = "") {
        add(label, "==", value ? "true" : "false", "true",
            value ? Verdict::Pass : Verdict::Fail, std::move(note));
    }

    void skip(const std::string& label, std::string reason) {
        add(label, "skip", "", "", Verdict::Skipped, std::move(reason));
    }

    void vacuous(const std::string& label, std::string reason) {
        add(label, "=>", "hypothesis false", "", Verdict::Vacuous, std::move(reason));
    }

    void record_open(const std::string& label, const std::string& lhs, const std::string& rhs,
                     std::string note) {
        add(label, "open", lhs, rhs, Verdict::OpenRecorded, std::move(note));
    }

    void info(const std::string& label, const std::string& value, std::string note = "") {
        add(label, "info", value, "", Verdict::Pass, std::move(note));
    }

    void classify(const std::string& label, const std::string& lhs, const std::string& rhs,
                  std::string note) {
        add(label, "classify", lhs, rhs, Verdict::Skipped, std::move(note));
    }

    static std::string value_str(const BigInt& v) { return v.str(); }
    static std::string value_str(long long v) { return std::to_string(v); }
    static std::string value_str(int v) { return std::to_string(v); }
    static std::string value_str(bool v) { return v ? "true" : "false"; }
    static std::string value_str(const std::string& v) { return v; }
    static std::string value_str(const char* v) { return v; }
};

// ---- Serialization ----------------------------------------------------------

// Betti tables travel as sparse (p, q, beta) triples sorted by (p, q).
inline nlohmann::ordered_json betti_to_json(const BettiTable& t) {
    nlohmann::ordered_json j;
    switch (t.kind) {
        case BettiTable::Kind::QuotientRing: j["kind"] = "quotient"; break;
        case BettiTable::Kind::IdealModule: j["kind"] = "ideal"; break;
        case BettiTable::Kind::Module: j["kind"] = "module"; break;
    }
    j["nvars"] = t.nvars;
    j["pmax"] = t.pmax;
    j["qmax"] = t.qmax;
    j["certified_complete"] = t.certified_complete;
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const auto& [pq, beta] : t.cells)
        cells.push_back(nlohmann::ordered_json::array({pq.first, pq.second, beta}));
    j["cells"] = std::move(cells);
    return j;
}

inline nlohmann::ordered_json assertion_to_json(const Assertion& a) {
    nlohmann::ordered_json j;
    j["label"] = a.label;
    j["relation"] = a.relation;
    j["lhs"] = a.lhs;
    j["rhs"] = a.rhs;
    j["verdict"] = verdict_name(a.verdict);
    if (!a.note.empty()) j["note"] = a.note;
    return j;
}

// Timing is deliberately excluded unless asked for: reports must be
// byte-identical across runs with a fixed seed, and wall-clock never is.
inline nlohmann::ordered_json report_to_json(const CheckReport& r, bool include_timing = false) {
    nlohmann::ordered_json j;
    j["check"] = r.check_id;
    j["instance"] = r.instance;
    j["seed"] = r.seed;
    j["verdict"] = verdict_name(r.worst());
    if (include_timing) j["millis"] = r.millis;
    nlohmann::ordered_json as = nlohmann::ordered_json::array();
    for (const auto& a : r.assertions) as.push_back(assertion_to_json(a));
    j["assertions"] = std::move(as);
    if (!r.repro.empty()) j["repro"] = r.repro;
    return j;
}

inline nlohmann::ordered_json reports_to_json(const std::vector<CheckReport>& rs,
                                              std::uint64_t seed, bool include_timing = false) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["seed"] = seed;
    int failures = 0;
    for (const auto& r : rs)
        if (r.failed()) ++failures;
    j["failures"] = failures;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : rs) checks.push_back(report_to_json(r, include_timing));
    j["checks"] = std::move(checks);
    return j;
}

// ---- Human rendering --------------------------------------------------------

inline std::string render_report(const CheckReport& r, bool show_timing = true) {
    std::ostringstream out;
    out << "[" << verdict_name(r.worst()) << "] " << r.check_id << " on " << r.instance
        << " (seed " << r.seed;
    if (show_timing) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.1f", r.millis);
        out << ", " << buf << " ms";
    }
    out << ")\n";
    for (const auto& a : r.assertions) {
        out << "  " << verdict_name(a.verdict) << "  " << a.label;
        if (a.relation == "skip" || a.relation == "=>") {
            // reason lives in the note
        } else if (a.relation == "info" || a.relation == "classify") {
            out << ": " << a.lhs;
            if (!a.rhs.empty()) out << " | " << a.rhs;
        } else if (a.relation == "open") {
            out << ": " << a.lhs << " vs " << a.rhs;
        } else {
            out << ": " << a.lhs << " " << a.relation << " " << a.rhs;
        }
        if (!a.note.empty()) out << "  [" << a.note << "]";
        out << "\n";
    }
    if (!r.repro.empty()) out << "  minimal reproduction (seed " << r.seed << "):\n" << r.repro;
    return out.str();
}

inline std::string render_reports_markdown(const std::vector<CheckReport>& rs, std::uint64_t seed) {
    std::ostringstream out;
    out << "# Verification report\n\nseed: " << seed << "\n";
    int failures = 0;
    for (const auto& r : rs)
        if (r.failed()) ++failures;
    out << "failures: " << failures << "\n";
    for (const auto& r : rs) {
        out << "\n## " << r.check_id << " on " << r.instance << "\n\n";
        out << "verdict: **" << verdict_name(r.worst()) << "**\n\n";
        out << "| verdict | assertion | lhs | relation | rhs | note |\n";
        out << "|---|---|---|---|---|---|\n";
        for (const auto& a : r.assertions)
            out << "| " << verdict_name(a.verdict) << " | " << a.label << " | " << a.lhs
                << " | " << a.relation << " | " << a.rhs << " | " << a.note << " |\n";
        if (!r.repro.empty()) out << "\nminimal reproduction:\n\n```\n" << r.repro << "```\n";
    }
    return out.str();
}

} // namespace syz

#endif
