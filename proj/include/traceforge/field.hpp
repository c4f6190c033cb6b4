#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "traceforge/error.hpp"

namespace traceforge {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Which exact field the coefficients live in: the rationals or F_p.
class FieldSpec {
public:
    enum class Kind { Rationals, PrimeField };

    static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }

    static FieldSpec prime(std::uint64_t p) {
        require(p <= (std::uint64_t{1} << 31), ErrorCode::InvalidArgument,
                "prime modulus must be at most 2^31");
        require(is_prime(p), ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
        return FieldSpec(Kind::PrimeField, static_cast<std::uint32_t>(p));
    }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::PrimeField; }
    std::uint32_t characteristic() const noexcept { return p_; }

    std::string to_string() const {
        return is_finite() ? "F" + std::to_string(p_) : std::string("Q");
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

/// Element of Q. Always stored in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long num) : v_(num) {}
    Rational(long num, long den) {
        require(den != 0, ErrorCode::DivisionByZero, "zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rational zero(const FieldSpec& f) { return from_int(f, 0); }
    static Rational one(const FieldSpec& f) { return from_int(f, 1); }
    static Rational from_int(const FieldSpec& f, long n) {
        require(f.kind() == FieldSpec::Kind::Rationals, ErrorCode::FieldMismatch,
                "rational scalar requested for " + f.to_string());
        return Rational(n);
    }

    /// Parses "a" or "a/b".
    static Rational parse(const std::string& text) {
        mpq_class q;
        if (text.empty() || q.set_str(text, 10) != 0)
            fail(ErrorCode::ParseError, "bad rational '" + text + "'");
        require(q.get_den() != 0, ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
        return Rational(q);
    }

    FieldSpec field() const { return FieldSpec::rationals(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    const mpq_class& value() const { return v_; }

    Rational inv() const {
        require(!is_zero(), ErrorCode::DivisionByZero, "inverse of 0");
        return Rational(mpq_class(1) / v_);
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        require(!o.is_zero(), ErrorCode::DivisionByZero, "division by 0");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    std::string to_string() const { return v_.get_str(); }
    std::size_t hash() const { return std::hash<std::string>{}(to_string()); }

private:
    mpq_class v_{0};
};

/// Element of F_p, stored as a residue in [0, p) together with its modulus.
class Residue {
public:
    Residue() = default;
    Residue(std::uint64_t value, std::uint32_t p) : v_(static_cast<std::uint32_t>(value % p)), p_(p) {}

    static Residue zero(const FieldSpec& f) { return from_int(f, 0); }
    static Residue one(const FieldSpec& f) { return from_int(f, 1); }
    static Residue from_int(const FieldSpec& f, long n) {
        require(f.is_finite(), ErrorCode::FieldMismatch, "residue requested for Q");
        const long p = f.characteristic();
        long r = n % p;
        if (r < 0) r += p;
        return Residue(static_cast<std::uint64_t>(r), f.characteristic());
    }

    /// "n" or "a/b"; a fraction is a * b^-1 mod p.
    static Residue parse(const std::string& text, const FieldSpec& f) {
        auto integer = [&](const std::string& s) {
            std::size_t pos = 0;
            long n = 0;
            try {
                n = std::stol(s, &pos);
            } catch (const std::exception&) {
                fail(ErrorCode::ParseError, "bad residue '" + text + "'");
            }
            require(pos == s.size(), ErrorCode::ParseError, "bad residue '" + text + "'");
            return n;
        };
        const auto slash = text.find('/');
        if (slash == std::string::npos) return from_int(f, integer(text));
        return from_int(f, integer(text.substr(0, slash))) / from_int(f, integer(text.substr(slash + 1)));
    }

    FieldSpec field() const { return FieldSpec::prime(p_); }
    std::uint32_t modulus() const noexcept { return p_; }
    std::uint32_t value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    Residue inv() const {
        require(!is_zero(), ErrorCode::DivisionByZero, "inverse of 0 mod " + std::to_string(p_));
        // Fermat: v^(p-2)
        std::uint64_t base = v_, e = p_ - 2, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return Residue(acc, p_);
    }

    Residue operator-() const { return Residue(v_ == 0 ? 0 : p_ - v_, p_); }
    Residue& operator+=(const Residue& o) {
        check(o);
        std::uint64_t s = std::uint64_t{v_} + o.v_;
        v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
        return *this;
    }
    Residue& operator-=(const Residue& o) {
        check(o);
        v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t{v_} + p_ - o.v_);
        return *this;
    }
    Residue& operator*=(const Residue& o) {
        check(o);
        v_ = static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % p_);
        return *this;
    }
    Residue& operator/=(const Residue& o) { return *this *= o.inv(); }
    friend Residue operator+(Residue a, const Residue& b) { return a += b; }
    friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
    friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
    friend Residue operator/(Residue a, const Residue& b) { return a /= b; }
    friend bool operator==(const Residue& a, const Residue& b) {
        a.check(b);
        return a.v_ == b.v_;
    }

    std::string to_string() const { return std::to_string(v_); }
    std::size_t hash() const noexcept { return v_; }

private:
    void check(const Residue& o) const {
        if (p_ != o.p_)
            fail(ErrorCode::FieldMismatch,
                 "F" + std::to_string(p_) + " vs F" + std::to_string(o.p_));
    }

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 2;
};

/// The scalar types every container in the library is templated over.
template <class E>
concept ExactScalar = requires(const E a, const E b, const FieldSpec f) {
    { a + b } -> std::same_as<E>;
    { a - b } -> std::same_as<E>;
    { a * b } -> std::same_as<E>;
    { a / b } -> std::same_as<E>;
    { -a } -> std::same_as<E>;
    { a.inv() } -> std::same_as<E>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.field() } -> std::same_as<FieldSpec>;
    { a.to_string() } -> std::same_as<std::string>;
    { E::zero(f) } -> std::same_as<E>;
    { E::one(f) } -> std::same_as<E>;
    { E::from_int(f, 1L) } -> std::same_as<E>;
};

static_assert(ExactScalar<Rational>);
static_assert(ExactScalar<Residue>);

template <ExactScalar E>
E parse_scalar(const std::string& text, const FieldSpec& f) {
    if constexpr (std::is_same_v<E, Rational>) {
        require(!f.is_finite(), ErrorCode::FieldMismatch, "rational parse over " + f.to_string());
        return Rational::parse(text);
    } else {
        return Residue::parse(text, f);
    }
}

inline std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Residue& r) { return os << r.to_string(); }

} // namespace traceforge
