#include "g2deg/rational.hpp"

#include "g2deg/errors.hpp"

#include <ostream>

namespace g2deg {

namespace {

bool is_integer_literal(std::string_view text)
{
    if (text.empty()) {
        return false;
    }
    std::size_t i = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (i == text.size()) {
        return false;
    }
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view text)
{
    if (!is_integer_literal(text)) {
        throw FormatError("malformed rational '" + std::string(text) + "'");
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    return mpz_class(std::string(text), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator)
{
    if (denominator == 0) {
        throw Error("zero denominator");
    }
    value_ = mpq_class(numerator, 1);
    value_ /= mpq_class(denominator, 1);
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    if (value_.get_den() == 0) {
        throw Error("zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(mpq_class(parse_integer(text)));
    }
    mpz_class num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+') {
        throw FormatError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class den = parse_integer(den_text);
    if (den == 0) {
        throw FormatError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(mpq_class(num, den));
}

std::string Rational::str() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw Error("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& q)
{
    return os << q.str();
}

}  // namespace g2deg
