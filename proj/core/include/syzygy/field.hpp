#ifndef SYZYGY_FIELD_HPP
#define SYZYGY_FIELD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace syz {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised on malformed text input (polynomials, ideal files, CLI values).
struct ParseError : Error {
    using Error::Error;
};

// Raised when operands belong to different rings or fields.
struct RingMismatchError : Error {
    using Error::Error;
};

// Raised when a mathematical precondition fails (singular matrix, zero
// polynomial where nonzero is required, unit ideal, ...).
struct DomainError : Error {
    using Error::Error;
};

// Raised when a result cannot be certified within the configured degree or
// homological caps.  Never silently degrades into a wrong answer.
struct TruncationError : Error {
    using Error::Error;
};

bool is_odd_prime(std::uint32_t n);

// Identifies the coefficient field of a computation.  Every scalar in one
// computation shares one FieldSpec.
struct FieldSpec {
    enum class Kind { PrimeField, Rationals };

    Kind kind = Kind::PrimeField;
    std::uint32_t characteristic = 32003;

    static FieldSpec prime_field(std::uint32_t p) {
        if (!is_odd_prime(p))
            throw DomainError("field characteristic must be an odd prime, got " + std::to_string(p));
        return FieldSpec{Kind::PrimeField, p};
    }
    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }

    bool operator==(const FieldSpec&) const = default;

    std::string to_string() const {
        return kind == Kind::Rationals ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
    }
};

// Prime field GF(p) with runtime modulus.  Elements are canonical residues
// in [0, p); all operations return canonical values.  p is an odd prime
// below 2^31 so products fit comfortably in 64 bits.
class Gf {
public:
    using elem = std::uint64_t;

    Gf() : p_(32003) {}
    explicit Gf(std::uint32_t p) : p_(p) {
        if (!is_odd_prime(p)) throw DomainError("GF modulus must be an odd prime, got " + std::to_string(p));
    }

    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::PrimeField, static_cast<std::uint32_t>(p_)}; }
    std::uint64_t modulus() const { return p_; }

    elem zero() const { return 0; }
    elem one() const { return 1; }
    bool is_zero(elem a) const { return a == 0; }
    bool eq(elem a, elem b) const { return a == b; }

    elem add(elem a, elem b) const {
        elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    elem sub(elem a, elem b) const { return a >= b ? a - b : a + p_ - b; }
    elem neg(elem a) const { return a == 0 ? 0 : p_ - a; }
    elem mul(elem a, elem b) const { return (a * b) % p_; }
    elem inv(elem a) const;
    elem div(elem a, elem b) const { return mul(a, inv(b)); }

    elem from_long(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<elem>(r);
    }

    // Balanced lift: residues above p/2 print as negative integers, so
    // polynomials over GF(p) render the way they were written.
    std::string to_string(elem a) const {
        if (2 * a > p_) return "-" + std::to_string(p_ - a);
        return std::to_string(a);
    }

    // Parses an integer or a fraction "a/b"; rejects b = 0 mod p.
    elem parse(const std::string& text) const;

    bool operator==(const Gf& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

// The rational numbers with exact arbitrary-precision arithmetic.
class Qq {
public:
    using elem = boost::multiprecision::cpp_rational;

    FieldSpec spec() const { return FieldSpec::rationals(); }

    elem zero() const { return 0; }
    elem one() const { return 1; }
    bool is_zero(const elem& a) const { return a == 0; }
    bool eq(const elem& a, const elem& b) const { return a == b; }

    elem add(const elem& a, const elem& b) const { return a + b; }
    elem sub(const elem& a, const elem& b) const { return a - b; }
    elem neg(const elem& a) const { return -a; }
    elem mul(const elem& a, const elem& b) const { return a * b; }
    elem inv(const elem& a) const {
        if (a == 0) throw DomainError("division by zero in QQ");
        return 1 / a;
    }
    elem div(const elem& a, const elem& b) const { return a * inv(b); }

    elem from_long(long long v) const { return elem(v); }

    std::string to_string(const elem& a) const { return a.str(); }

    elem parse(const std::string& text) const;

    bool operator==(const Qq&) const { return true; }
};

template <class K>
inline constexpr bool is_gf_v = std::is_same_v<K, Gf>;

} // namespace syz

#endif
