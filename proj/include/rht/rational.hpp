#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace rht {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.  Thin value wrapper around GMP's mpq_class that avoids
/// leaking GMP expression templates into generic (Eigen) code.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(implicit)
    Rational(int value) : value_(value) {}   // NOLINT(implicit)
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& integer) : value_(integer) {}
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Parses "p", "-p", "p/q" (q > 0 after sign normalization).  Throws
    /// std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    [[nodiscard]] std::string to_string() const;

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    /// Largest integer <= value.
    [[nodiscard]] mpz_class floor() const;
    /// Smallest integer >= value.
    [[nodiscard]] mpz_class ceil() const;
    [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(value_))); }
    /// Multiplicative inverse; throws std::domain_error on zero.
    [[nodiscard]] Rational inverse() const;
    /// Integer power, negative exponents allowed for nonzero values.
    [[nodiscard]] Rational pow(long exponent) const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_{0};
};

/// Converts an integral rational to int64, throwing std::overflow_error when
/// it does not fit and std::invalid_argument when it is not an integer.
std::int64_t to_int64(const Rational& r);
std::int64_t to_int64(const mpz_class& z);

}  // namespace rht
