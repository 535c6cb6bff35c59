#include "wavewr/rational.hpp"

#include <cmath>
#include <numeric>

#include "wavewr/errors.hpp"

namespace wavewr {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw SolverError("rational arithmetic overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw SolverError("rational arithmetic overflow");
    return r;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    num_ = g == 0 ? 0 : num / g;
    den_ = g == 0 ? 1 : den / g;
}

Rational Rational::operator+(const Rational& o) const {
    const std::int64_t g = std::gcd(den_, o.den_);
    const std::int64_t l = checked_mul(den_ / g, o.den_);
    return Rational(checked_add(checked_mul(num_, l / den_), checked_mul(o.num_, l / o.den_)), l);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    const std::int64_t g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
    const std::int64_t g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
    const std::int64_t a = g1 == 0 ? num_ : num_ / g1;
    const std::int64_t d2 = g1 == 0 ? o.den_ : o.den_ / g1;
    const std::int64_t b = g2 == 0 ? o.num_ : o.num_ / g2;
    const std::int64_t d1 = g2 == 0 ? den_ : den_ / g2;
    return Rational(checked_mul(a, b), checked_mul(d1, d2));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw ValidationError("rational division by zero");
    return *this * Rational(o.den_, o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    const __int128 lhs = static_cast<__int128>(num_) * o.den_;
    const __int128 rhs = static_cast<__int128>(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

std::string Rational::str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> to_rational(double x, std::int64_t max_den, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    const double scale = std::max(1.0, std::abs(x));
    // Convergents p_k/q_k of the continued fraction of x.
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double r = x;
    for (int iter = 0; iter < 64; ++iter) {
        const double a = std::floor(r);
        if (std::abs(a) > 9.0e15) break;
        const auto ai = static_cast<std::int64_t>(a);
        std::int64_t p2 = 0, q2 = 0;
        if (__builtin_mul_overflow(ai, p1, &p2) || __builtin_add_overflow(p2, p0, &p2)) break;
        if (__builtin_mul_overflow(ai, q1, &q2) || __builtin_add_overflow(q2, q0, &q2)) break;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if (std::abs(static_cast<double>(p1) / static_cast<double>(q1) - x) <= tol * scale) {
            return Rational(p1, q1);
        }
        const double frac = r - a;
        if (frac == 0.0) break;
        r = 1.0 / frac;
    }
    return std::nullopt;
}

}  // namespace wavewr
