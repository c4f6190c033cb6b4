#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "traceforge/field.hpp"

namespace traceforge {

/// Finite Laurent polynomial sum a_j t^j; zero coefficients are never stored.
template <ExactScalar E>
class LaurentPoly {
public:
    explicit LaurentPoly(FieldSpec field) : field_(field) {}

    static LaurentPoly monomial(FieldSpec field, int exponent, E coeff) {
        LaurentPoly p(field);
        p.add_term(exponent, coeff);
        return p;
    }
    static LaurentPoly monomial(FieldSpec field, int exponent) {
        return monomial(field, exponent, E::one(field));
    }
    static LaurentPoly constant(FieldSpec field, long c) {
        return monomial(field, 0, E::from_int(field, c));
    }

    const FieldSpec& field() const noexcept { return field_; }
    const std::map<int, E>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Least exponent; nullopt for the zero polynomial.
    std::optional<int> valuation() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first;
    }
    std::optional<int> degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.rbegin()->first;
    }

    E coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? E::zero(field_) : it->second;
    }

    void add_term(int exponent, const E& c) {
        check(c.field());
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Drops every term with exponent >= bound.
    LaurentPoly truncated(int bound) const {
        LaurentPoly out(field_);
        for (const auto& [e, c] : terms_)
            if (e < bound) out.terms_.emplace(e, c);
        return out;
    }

    LaurentPoly shifted(int k) const {
        LaurentPoly out(field_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
        return out;
    }

    LaurentPoly operator-() const {
        LaurentPoly out(field_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        check(o.field_);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check(b.field_);
        LaurentPoly out(a.field_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }
    friend LaurentPoly operator*(const E& s, const LaurentPoly& a) {
        LaurentPoly out(a.field_);
        for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
        return out;
    }

    /// Product with every exponent >= bound discarded.
    LaurentPoly multiply_truncated(const LaurentPoly& b, int bound) const {
        check(b.field_);
        LaurentPoly out(field_);
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : b.terms_)
                if (ea + eb < bound) out.add_term(ea + eb, ca * cb);
        return out;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.field_ == b.field_ && a.terms_ == b.terms_;
    }

    /// Renders as "t^4 + 3*t^5", "1 - t", "-1/2*t^-1".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string cs = c.to_string();
            bool negative = !cs.empty() && cs[0] == '-';
            if (negative) cs.erase(0, 1);
            if (first)
                os << (negative ? "-" : "");
            else
                os << (negative ? " - " : " + ");
            first = false;
            const bool unit = cs == "1";
            if (e == 0) {
                os << cs;
                continue;
            }
            if (!unit) os << cs << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }

    /// Inverse of to_string; also accepts "t^4+3t^5" and "2 * t".
    static LaurentPoly parse(const std::string& text, FieldSpec field) {
        std::string s;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
        require(!s.empty(), ErrorCode::ParseError, "empty polynomial");
        LaurentPoly out(field);
        if (s == "0") return out;
        std::size_t i = 0;
        while (i < s.size()) {
            bool negative = false;
            if (s[i] == '+' || s[i] == '-') {
                negative = s[i] == '-';
                ++i;
            } else if (i != 0) {
                fail(ErrorCode::ParseError, "expected '+' or '-' in '" + text + "'");
            }
            // A term ends at the next '+'/'-' that is not an exponent sign.
            std::size_t j = i;
            while (j < s.size() && !((s[j] == '+' || s[j] == '-') && j > i && s[j - 1] != '^')) ++j;
            const std::string term = s.substr(i, j - i);
            require(!term.empty(), ErrorCode::ParseError, "empty term in '" + text + "'");
            std::string coeff_text = "1";
            int exponent = 0;
            const auto tpos = term.find('t');
            if (tpos == std::string::npos) {
                coeff_text = term;
            } else {
                std::string head = term.substr(0, tpos);
                if (!head.empty() && head.back() == '*') head.pop_back();
                if (!head.empty()) coeff_text = head;
                const std::string tailpart = term.substr(tpos + 1);
                if (tailpart.empty()) {
                    exponent = 1;
                } else {
                    require(tailpart[0] == '^' && tailpart.size() > 1, ErrorCode::ParseError,
                            "bad exponent in '" + term + "'");
                    try {
                        std::size_t used = 0;
                        exponent = std::stoi(tailpart.substr(1), &used);
                        require(used == tailpart.size() - 1, ErrorCode::ParseError,
                                "bad exponent in '" + term + "'");
                    } catch (const std::logic_error&) {
                        fail(ErrorCode::ParseError, "bad exponent in '" + term + "'");
                    }
                }
            }
            E c = parse_scalar<E>(coeff_text, field);
            out.add_term(exponent, negative ? -c : c);
            i = j;
        }
        return out;
    }

private:
    void check(const FieldSpec& f) const {
        require(f == field_, ErrorCode::FieldMismatch, f.to_string() + " vs " + field_.to_string());
    }

    FieldSpec field_;
    std::map<int, E> terms_;
};

} // namespace traceforge
