#pragma once

#include <string>

#include "irrmeasure/rational.hpp"

namespace irrmeasure {

/// Closed rational enclosure [lo, hi]. `precision_bits` records the working
/// precision the enclosure was produced at.
class Interval {
public:
    Interval() : Interval(Rat(0), Rat(0), 64) {}
    Interval(Rat lo, Rat hi, unsigned long precision_bits);
    static Interval point(const Rat& x, unsigned long precision_bits = 64) {
        return Interval(x, x, precision_bits);
    }

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    unsigned long precision_bits() const { return precision_bits_; }

    Rat width() const { return hi_ - lo_; }
    Rat midpoint() const { return (lo_ + hi_) / 2; }
    bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    bool overlaps(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }
    bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }
    bool is_point() const { return lo_ == hi_; }

    // Outward rounding to a dyadic grid of 2^-bits; never shrinks the set.
    Interval rounded_outward(unsigned long bits) const;

    // Intersection; throws InvalidArgument when disjoint.
    Interval intersect(const Interval& other) const;

    friend Interval operator+(const Interval& x, const Interval& y);
    friend Interval operator-(const Interval& x, const Interval& y);
    friend Interval operator*(const Interval& x, const Interval& y);
    // Throws DivisionByZero when y contains 0.
    friend Interval operator/(const Interval& x, const Interval& y);
    friend Interval operator-(const Interval& x);

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Rat lo_;
    Rat hi_;
    unsigned long precision_bits_;
};

Interval abs(const Interval& x);
Interval pow(const Interval& x, unsigned exponent);

// Enclosure of sqrt over [lo, hi]; exact for perfect-square endpoints.
// Throws NegativeArgument when lo < 0.
Interval sqrt_interval(const Interval& x);

// Lower/upper bounds of sqrt(r) on a 2^-bits grid (exact when r is a square).
Rat sqrt_lower(const Rat& r, unsigned long bits);
Rat sqrt_upper(const Rat& r, unsigned long bits);

// "[lo, hi]" with both ends as decimals truncated outward to `digits` places.
std::string to_string(const Interval& x, unsigned digits = 20);

}  // namespace irrmeasure
