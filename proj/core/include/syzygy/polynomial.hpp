#ifndef SYZYGY_POLYNOMIAL_HPP
#define SYZYGY_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "syzygy/ring.hpp"

namespace syz {

template <class K>
struct Term {
    Monomial m;
    typename K::elem c;
};

// A polynomial with terms stored in strictly descending canonical order
// (deglex, x0 most significant).  The representation is unique: no zero
// coefficients, no repeated monomials.  For a homogeneous polynomial this
// puts the term of maximal x0-exponent first, which is what the partial
// elimination code reads off as d0.
template <class K>
struct Poly {
    std::vector<Term<K>> terms;

    bool is_zero() const { return terms.empty(); }
    int degree() const { return terms.empty() ? -1 : terms.front().m.degree; }

    bool is_homogeneous() const {
        for (const auto& t : terms)
            if (t.m.degree != terms.front().m.degree) return false;
        return true;
    }
};

template <class K>
bool poly_eq(const Ring<K>& R, const Poly<K>& f, const Poly<K>& g) {
    if (f.terms.size() != g.terms.size()) return false;
    for (std::size_t i = 0; i < f.terms.size(); ++i)
        if (!(f.terms[i].m == g.terms[i].m) || !R.field.eq(f.terms[i].c, g.terms[i].c)) return false;
    return true;
}

// Sorts descending canonical, merges duplicate monomials, drops zeros.
template <class K>
Poly<K> poly_normalize(const Ring<K>& R, std::vector<Term<K>> terms) {
    MonomialOrder ord = R.canonical_order();
    std::sort(terms.begin(), terms.end(),
              [&](const Term<K>& a, const Term<K>& b) { return ord.greater(a.m, b.m); });
    Poly<K> out;
    out.terms.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.terms.empty() && out.terms.back().m == t.m)
            out.terms.back().c = R.field.add(out.terms.back().c, t.c);
        else
            out.terms.push_back(std::move(t));
        if (!out.terms.empty() && R.field.is_zero(out.terms.back().c)) out.terms.pop_back();
    }
    return out;
}

template <class K>
Poly<K> poly_zero() {
    return Poly<K>{};
}

template <class K>
Poly<K> poly_constant(const Ring<K>& R, typename K::elem c) {
    Poly<K> f;
    if (!R.field.is_zero(c)) f.terms.push_back(Term<K>{Monomial(R.nvars()), std::move(c)});
    return f;
}

template <class K>
Poly<K> poly_term(const Ring<K>& R, Monomial m, typename K::elem c) {
    Poly<K> f;
    if (!R.field.is_zero(c)) f.terms.push_back(Term<K>{std::move(m), std::move(c)});
    return f;
}

template <class K>
Poly<K> poly_variable(const Ring<K>& R, std::size_t i) {
    return poly_term(R, Monomial::variable(R.nvars(), i), R.field.one());
}

template <class K>
Poly<K> poly_add(const Ring<K>& R, const Poly<K>& f, const Poly<K>& g) {
    MonomialOrder ord = R.canonical_order();
    Poly<K> out;
    out.terms.reserve(f.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() && j < g.terms.size()) {
        int c = ord.cmp(f.terms[i].m, g.terms[j].m);
        if (c > 0) {
            out.terms.push_back(f.terms[i++]);
        } else if (c < 0) {
            out.terms.push_back(g.terms[j++]);
        } else {
            auto s = R.field.add(f.terms[i].c, g.terms[j].c);
            if (!R.field.is_zero(s)) out.terms.push_back(Term<K>{f.terms[i].m, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < f.terms.size(); ++i) out.terms.push_back(f.terms[i]);
    for (; j < g.terms.size(); ++j) out.terms.push_back(g.terms[j]);
    return out;
}

template <class K>
Poly<K> poly_neg(const Ring<K>& R, const Poly<K>& f) {
    Poly<K> out = f;
    for (auto& t : out.terms) t.c = R.field.neg(t.c);
    return out;
}

template <class K>
Poly<K> poly_sub(const Ring<K>& R, const Poly<K>& f, const Poly<K>& g) {
    return poly_add(R, f, poly_neg(R, g));
}

template <class K>
Poly<K> poly_scale(const Ring<K>& R, const Poly<K>& f, const typename K::elem& c) {
    if (R.field.is_zero(c)) return {};
    Poly<K> out = f;
    for (auto& t : out.terms) t.c = R.field.mul(t.c, c);
    return out;
}

// f * (c * m) for a single term.
template <class K>
Poly<K> poly_mul_term(const Ring<K>& R, const Poly<K>& f, const Monomial& m, const typename K::elem& c) {
    if (R.field.is_zero(c)) return {};
    Poly<K> out = f;
    for (auto& t : out.terms) {
        t.m = t.m * m;
        t.c = R.field.mul(t.c, c);
    }
    return out;
}

template <class K>
Poly<K> poly_mul(const Ring<K>& R, const Poly<K>& f, const Poly<K>& g) {
    std::unordered_map<Monomial, typename K::elem, MonomialHash> acc;
    acc.reserve(f.terms.size() * g.terms.size());
    for (const auto& a : f.terms)
        for (const auto& b : g.terms) {
            Monomial m = a.m * b.m;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), R.field.mul(a.c, b.c));
            else
                it->second = R.field.add(it->second, R.field.mul(a.c, b.c));
        }
    std::vector<Term<K>> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!R.field.is_zero(c)) terms.push_back(Term<K>{m, std::move(c)});
    return poly_normalize(R, std::move(terms));
}

template <class K>
Poly<K> poly_pow(const Ring<K>& R, const Poly<K>& f, int e) {
    Poly<K> out = poly_constant(R, R.field.one());
    for (int i = 0; i < e; ++i) out = poly_mul(R, out, f);
    return out;
}

// Divides by the leading coefficient (canonical order).
template <class K>
Poly<K> poly_monic(const Ring<K>& R, const Poly<K>& f) {
    if (f.is_zero()) return f;
    return poly_scale(R, f, R.field.inv(f.terms.front().c));
}

// The x0-degree of the leading term in canonical order.  For homogeneous f
// this is the maximal x0-exponent over all terms, because deglex with x0
// first sorts terms of equal total degree by x0-exponent.
template <class K>
int d0_of(const Poly<K>& f) {
    if (f.is_zero()) throw DomainError("d0 of the zero polynomial is undefined");
    return f.terms.front().m.e[0];
}

template <class K>
typename K::elem poly_eval(const Ring<K>& R, const Poly<K>& f, const std::vector<typename K::elem>& point) {
    if (point.size() != R.nvars()) throw DomainError("evaluation point has wrong length");
    auto result = R.field.zero();
    for (const auto& t : f.terms) {
        auto v = t.c;
        for (std::size_t i = 0; i < R.nvars(); ++i)
            for (int k = 0; k < t.m.e[i]; ++k) v = R.field.mul(v, point[i]);
        result = R.field.add(result, v);
    }
    return result;
}

template <class K>
Poly<K> poly_derivative(const Ring<K>& R, const Poly<K>& f, std::size_t i) {
    std::vector<Term<K>> terms;
    for (const auto& t : f.terms) {
        if (t.m.e[i] == 0) continue;
        Term<K> d;
        d.c = R.field.mul(t.c, R.field.from_long(t.m.e[i]));
        d.m = t.m;
        d.m.e[i] -= 1;
        d.m.degree -= 1;
        terms.push_back(std::move(d));
    }
    return poly_normalize(R, std::move(terms));
}

// Substitutes a constant for variable i.
template <class K>
Poly<K> poly_substitute_const(const Ring<K>& R, const Poly<K>& f, std::size_t i, const typename K::elem& value) {
    std::vector<Term<K>> terms;
    for (const auto& t : f.terms) {
        Term<K> s = t;
        for (int k = 0; k < t.m.e[i]; ++k) s.c = R.field.mul(s.c, value);
        s.m.degree -= s.m.e[i];
        s.m.e[i] = 0;
        if (!R.field.is_zero(s.c)) terms.push_back(std::move(s));
    }
    return poly_normalize(R, std::move(terms));
}

// Substitutes x_i -> images[i] simultaneously for all variables.  Used for
// linear changes of coordinates, where each image is a linear form.
template <class K>
Poly<K> poly_substitute_all(const Ring<K>& R, const Poly<K>& f, const std::vector<Poly<K>>& images) {
    if (images.size() != R.nvars()) throw DomainError("substitution needs one image per variable");
    // Memoize powers of each image; exponents in our inputs stay small.
    std::map<std::pair<std::size_t, int>, Poly<K>> powers;
    auto power = [&](std::size_t i, int e) -> const Poly<K>& {
        auto key = std::make_pair(i, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, poly_pow(R, images[i], e)).first;
        return it->second;
    };
    Poly<K> out;
    for (const auto& t : f.terms) {
        Poly<K> prod = poly_constant(R, t.c);
        for (std::size_t i = 0; i < R.nvars(); ++i)
            if (t.m.e[i] > 0) prod = poly_mul(R, prod, power(i, t.m.e[i]));
        out = poly_add(R, out, prod);
    }
    return out;
}

// ---- text form ----------------------------------------------------------

template <class K>
std::string monomial_to_string(const Ring<K>& R, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += R.vars[i];
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

template <class K>
std::string poly_to_string(const Ring<K>& R, const Poly<K>& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        const auto& t = f.terms[i];
        std::string coeff = R.field.to_string(t.c);
        bool negative = !coeff.empty() && coeff[0] == '-';
        if (i == 0) {
            if (negative) {
                s += "-";
                coeff = coeff.substr(1);
            }
        } else {
            s += negative ? " - " : " + ";
            if (negative) coeff = coeff.substr(1);
        }
        std::string mono = monomial_to_string(R, t.m);
        if (mono.empty())
            s += coeff;
        else if (coeff == "1")
            s += mono;
        else
            s += coeff + "*" + mono;
    }
    return s;
}

// Recursive-descent parser for
//   poly  := ['+'|'-'] term (('+'|'-') term)*
//   term  := [coeff '*'] factor ('*' factor)*  |  coeff
//   factor:= var ('^' int)?
//   coeff := int ['/' int]
// Whitespace is permitted between tokens.  Variables must name ring
// coordinates exactly.
template <class K>
Poly<K> poly_parse(const Ring<K>& R, const std::string& text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> void {
        throw ParseError("parse error at offset " + std::to_string(pos) + " in '" + text + "': " + why);
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto peek = [&]() -> int { return pos < text.size() ? static_cast<unsigned char>(text[pos]) : -1; };
    auto scan_int = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return text.substr(start, pos - start);
    };
    auto scan_name = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected a variable name");
        return text.substr(start, pos - start);
    };

    std::vector<Term<K>> terms;
    skip_ws();
    if (pos == text.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = text[pos] == '-';
            ++pos;
            skip_ws();
        } else if (!first) {
            if (pos == text.size()) break;
            fail("expected '+' or '-' between terms");
        }
        first = false;

        auto coeff = R.field.one();
        bool have_coeff = false;
        if (std::isdigit(peek())) {
            std::string num = scan_int();
            skip_ws();
            if (peek() == '/') {
                ++pos;
                skip_ws();
                num += "/" + scan_int();
            }
            coeff = R.field.parse(num);
            have_coeff = true;
            skip_ws();
        }

        Monomial mono(R.nvars());
        bool have_var = false;
        bool expect_factor = !have_coeff;
        if (have_coeff && peek() == '*') {
            ++pos;
            expect_factor = true;
        }
        while (expect_factor) {
            skip_ws();
            std::string name = scan_name();
            int vi = R.var_index(name);
            if (vi < 0) fail("unknown variable '" + name + "'");
            int exp = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos;
                skip_ws();
                exp = std::stoi(scan_int());
            }
            mono.e[vi] = static_cast<std::uint16_t>(mono.e[vi] + exp);
            mono.degree += exp;
            have_var = true;
            skip_ws();
            if (peek() == '*') {
                ++pos;
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        if (!have_coeff && !have_var) fail("expected a term");
        if (negative) coeff = R.field.neg(coeff);
        terms.push_back(Term<K>{std::move(mono), std::move(coeff)});
        skip_ws();
        if (pos == text.size()) break;
        if (peek() != '+' && peek() != '-') fail("unexpected character '" + std::string(1, text[pos]) + "'");
    }
    return poly_normalize(R, std::move(terms));
}

} // namespace syz

#endif
