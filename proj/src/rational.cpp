#include "postdom/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "postdom/errors.hpp"

namespace postdom {

namespace {

bool is_integer_text(std::string_view s) {
    if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
    }
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    if (!is_integer_text(s)) {
        throw ParseError("malformed rational: '" + std::string(whole) + "'");
    }
    return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw ArithmeticError("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text), BigInt(1));
    }
    const BigInt num = parse_integer(text.substr(0, slash), text);
    const BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw ArithmeticError("reciprocal of zero");
    }
    return Rational(mpq_class(1) / value_);
}

std::string Rational::str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw ArithmeticError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational sum(std::span<const Rational> values) {
    Rational total;
    for (const auto& v : values) {
        total += v;
    }
    return total;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) {
        throw PreconditionError("dot product of vectors with different lengths");
    }
    Rational total;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += a[i] * b[i];
    }
    return total;
}

std::vector<std::string> to_strings(std::span<const Rational> values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) {
        out.push_back(v.str());
    }
    return out;
}

RationalVector parse_all(std::span<const std::string> texts) {
    RationalVector out;
    out.reserve(texts.size());
    for (const auto& t : texts) {
        out.push_back(Rational::parse(t));
    }
    return out;
}

}  // namespace postdom
