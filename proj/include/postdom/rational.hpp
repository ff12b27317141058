#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Every probability in the library is a Rational. Values are always kept in
 * canonical form: the denominator is positive, the sign is carried by the
 * numerator and gcd(|numerator|, denominator) = 1, so two Rationals are
 * equal iff their (numerator, denominator) pairs are identical.
 *
 * The text form is "n/d" in decimal digits, including integers ("1/1").
 */

#include <compare>
#include <concepts>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace postdom {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T n) {  // NOLINT(google-explicit-constructor)
        if constexpr (std::is_signed_v<T>) {
            value_ = mpq_class(static_cast<long>(n));
        } else {
            value_ = mpq_class(static_cast<unsigned long>(n));
        }
    }

    // Throws ArithmeticError when den == 0.
    Rational(const BigInt& num, const BigInt& den);

    static Rational make(const BigInt& num, const BigInt& den) { return {num, den}; }

    // Accepts "n/d" or "n" with an optional leading '-'. Non-canonical input
    // ("2/4", "3/-6") is normalized; anything else throws ParseError.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_positive() const { return sign() > 0; }
    bool is_negative() const { return sign() < 0; }

    Rational abs() const;
    Rational reciprocal() const;

    // Canonical "n/d" text.
    std::string str() const;

    // Lossy; for display only, never used by the core.
    double to_double() const { return value_.get_d(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Exact three-way comparison.
inline std::strong_ordering compare(const Rational& a, const Rational& b) { return a <=> b; }

using RationalVector = std::vector<Rational>;

Rational sum(std::span<const Rational> values);

// Throws PreconditionError on length mismatch.
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

std::vector<std::string> to_strings(std::span<const Rational> values);
RationalVector parse_all(std::span<const std::string> texts);

}  // namespace postdom
