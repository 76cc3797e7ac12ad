#pragma once

#include "rht/rational.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace rht {

/// Exponent pair (power of t, power of s).
using LaurentExponent = std::pair<int, int>;

/// Bivariate Laurent polynomial in two formal parameters t and s with exact
/// rational coefficients.  Zero coefficients are never stored.
///
/// One-parameter families are written in t alone; s only shows up while
/// checking the group law lambda_s o lambda_t = lambda_{st}.
class Laurent {
public:
    using Terms = std::map<LaurentExponent, Rational>;

    Laurent() = default;
    Laurent(const Rational& constant);  // NOLINT(implicit)
    Laurent(long constant) : Laurent(Rational(constant)) {}  // NOLINT(implicit)
    Laurent(int constant) : Laurent(Rational(constant)) {}   // NOLINT(implicit)

    static Laurent monomial(const Rational& coeff, int t_power, int s_power = 0);
    static Laurent t(int power = 1) { return monomial(Rational(1), power, 0); }
    static Laurent s(int power = 1) { return monomial(Rational(1), 0, power); }

    /// Parses strings such as "1/2*t^2 - t", "3", "-t^-1*s".
    static Laurent parse(std::string_view text);
    /// Terms in descending (t, s) order, e.g. "t^2 - 2*t + 1/3".
    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool involves_s() const;
    /// The constant if this Laurent polynomial has only a (0,0) term (or is zero).
    [[nodiscard]] std::optional<Rational> as_constant() const;
    /// (coefficient, t power) if this is a single term c*t^k with no s.
    [[nodiscard]] std::optional<std::pair<Rational, int>> as_t_monomial() const;
    [[nodiscard]] Rational coefficient(int t_power, int s_power = 0) const;

    /// Replaces t by the given value, keeping s symbolic.  Throws
    /// std::domain_error on t = 0 with a negative power of t present.
    [[nodiscard]] Laurent at_t(const Rational& value) const;
    /// The coefficient family in parameter s instead of t (t^a s^b -> s^a).
    /// Requires no s present.
    [[nodiscard]] Laurent rename_t_to_s() const;
    /// Substitutes t -> s*t, i.e. t^a s^b -> t^a s^(a+b).
    [[nodiscard]] Laurent substitute_t_by_st() const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b) { Laurent r = a; r *= b; return r; }
    friend Laurent operator-(const Laurent& a);
    /// Division is only defined by a nonzero rational constant.
    friend Laurent operator/(const Laurent& a, const Laurent& b);

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

    friend std::ostream& operator<<(std::ostream& os, const Laurent& l) { return os << l.to_string(); }

private:
    void add_term(const LaurentExponent& e, const Rational& c);

    Terms terms_;
};

}  // namespace rht
