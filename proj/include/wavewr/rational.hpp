#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace wavewr {

/// Exact rational with a positive denominator, always in lowest terms.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    /// Smallest integer >= this.
    std::int64_t ceil() const;
    std::int64_t floor() const;

    std::string str() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Continued-fraction approximation of x with denominator <= max_den.
/// Returns nullopt when no such fraction lies within tol * max(1, |x|).
std::optional<Rational> to_rational(double x, std::int64_t max_den = 1'000'000, double tol = 1e-12);

}  // namespace wavewr
