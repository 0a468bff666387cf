#ifndef SYZYGY_IO_HPP
#define SYZYGY_IO_HPP

#include <sstream>
#include <string>
#include <vector>

#include "syzygy/ideal.hpp"

namespace syz {

// Parsed form of the ideal file format:
//   # comment lines anywhere (also trailing comments)
//   field GF <p>        (or: field QQ)
//   vars x0 x1 ... xN
//   <one generator per line, polynomial grammar>
struct IdealFileData {
    FieldSpec field;
    std::vector<std::string> vars;
    std::vector<std::string> gens;
    std::vector<int> gen_lines;  // source line of each generator, for error messages
};

inline IdealFileData parse_ideal_file(const std::string& text) {
    IdealFileData data;
    bool saw_field = false, saw_vars = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        // Trim.
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);

        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "field") {
            if (saw_field) throw ParseError("line " + std::to_string(lineno) + ": duplicate field header");
            std::string kind;
            ls >> kind;
            if (kind == "QQ") {
                data.field = FieldSpec::rationals();
            } else if (kind == "GF") {
                long long p = 0;
                if (!(ls >> p)) throw ParseError("line " + std::to_string(lineno) + ": field GF needs a prime");
                if (p <= 2 || !is_odd_prime(static_cast<std::uint32_t>(p)))
                    throw ParseError("line " + std::to_string(lineno) + ": GF characteristic must be an odd prime, got " +
                                     std::to_string(p));
                data.field = FieldSpec::prime_field(static_cast<std::uint32_t>(p));
            } else {
                throw ParseError("line " + std::to_string(lineno) + ": unknown field '" + kind + "'");
            }
            saw_field = true;
        } else if (word == "vars") {
            if (saw_vars) throw ParseError("line " + std::to_string(lineno) + ": duplicate vars header");
            std::string v;
            while (ls >> v) data.vars.push_back(v);
            if (data.vars.empty()) throw ParseError("line " + std::to_string(lineno) + ": vars header is empty");
            saw_vars = true;
        } else {
            if (!saw_field || !saw_vars)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": generators must come after 'field' and 'vars' headers");
            data.gens.push_back(line);
            data.gen_lines.push_back(lineno);
        }
    }
    if (!saw_field) throw ParseError("ideal file is missing the 'field' header");
    if (!saw_vars) throw ParseError("ideal file is missing the 'vars' header");
    return data;
}

template <class K>
Ideal<K> build_ideal(const IdealFileData& data, K field) {
    auto ring = make_ring(std::move(field), data.vars);
    std::vector<Poly<K>> gens;
    gens.reserve(data.gens.size());
    for (const auto& text : data.gens) gens.push_back(poly_parse(*ring, text));
    return Ideal<K>(ring, std::move(gens));
}

template <class K>
std::string render_ideal_file(const Ring<K>& R, const std::vector<Poly<K>>& gens,
                              const std::vector<std::string>& comments = {}) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << "\n";
    auto spec = R.field.spec();
    if (spec.kind == FieldSpec::Kind::Rationals)
        out << "field QQ\n";
    else
        out << "field GF " << spec.characteristic << "\n";
    out << "vars";
    for (const auto& v : R.vars) out << " " << v;
    out << "\n";
    for (const auto& g : gens) out << poly_to_string(R, g) << "\n";
    return out.str();
}

} // namespace syz

#endif
