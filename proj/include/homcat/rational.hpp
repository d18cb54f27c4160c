#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace homcat {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number over arbitrary-precision integers.
///
/// Always stored in lowest terms with positive denominator; zero is 0/1.
/// All arithmetic is exact. Serialized as "p/q", or "p" when q == 1.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(n) {}
    Rational(const BigInt& n) : value_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        value_ = Backend(num, den);  // canonicalizes
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_one() const { return value_ == 1; }

    Rational operator-() const { return Rational(Backend(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    /// Canonical form: "p/q", or just "p" when the denominator is 1.
    std::string str() const {
        BigInt q = denominator();
        if (q == 1) return numerator().str();
        return numerator().str() + "/" + q.str();
    }

    /// Parses "p" or "p/q"; normalizes to lowest terms. Throws on malformed input.
    static Rational parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("Rational: empty string");
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(BigInt(s));
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            return Rational(num, den);
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
    }

private:
    using Backend = boost::multiprecision::cpp_rational;
    explicit Rational(Backend v) : value_(std::move(v)) {}
    Backend value_;
};

}  // namespace homcat
