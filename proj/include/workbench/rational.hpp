#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wb {

/// Exact rational scalar. Always held in canonical form: reduced fraction,
/// positive denominator. All coordinate arithmetic in the project goes
/// through this type; there is no floating point in any predicate.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses "p/q" or "p" (q = 1). Rejects q = 0 and garbage; non-canonical
    /// input like "2/4" or "3/-6" is normalized on read.
    static Rational parse(const std::string& text);

    /// Canonical form: "p/q", or just "p" when q = 1.
    std::string str() const { return v_.get_str(); }

    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    /// Fixed-point decimal rendering (used only for SVG emission, never in
    /// predicates). Computed with integer arithmetic, truncated toward zero.
    std::string decimal(int digits) const;

    int sign() const { return sgn(v_); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (sgn(b.v_) == 0) throw std::invalid_argument("rational: division by zero");
        return Rational(a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(-v_); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// a + t*(b-a) for rational t; the workhorse of deterministic layout code.
inline Rational lerp(const Rational& a, const Rational& b, const Rational& t) {
    return a + (b - a) * t;
}

}  // namespace wb
