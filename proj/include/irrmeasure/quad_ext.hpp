#pragma once

#include <compare>
#include <string>

#include "irrmeasure/rational.hpp"

namespace irrmeasure {

class Interval;

/// Exact element a + b*sqrt(D) of a real quadratic field.
///
/// D is kept squarefree: constructing from radicand 8 yields 2*sqrt(2).
/// A value with b == 0 is rational and combines with elements of any field;
/// two irrational operands must share D or the operation throws MixedField.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(1) {}
    QuadExt(const Rat& a) : a_(a), b_(0), d_(1) {}  // NOLINT: implicit from rational
    QuadExt(const Integer& a) : a_(a), b_(0), d_(1) {}  // NOLINT
    QuadExt(long a) : a_(a), b_(0), d_(1) {}  // NOLINT

    // a + b*sqrt(radicand), radicand >= 1; square factors are pulled into b.
    QuadExt(const Rat& a, const Rat& b, const Integer& radicand);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    // Squarefree radicand; 1 for pure rationals built without a field.
    const Integer& radicand() const { return d_; }

    bool is_rational() const { return sgn(b_) == 0; }
    bool is_integer() const { return is_rational() && a_.get_den() == 1; }

    int sign() const;
    QuadExt conjugate() const { return QuadExt(a_, -b_, d_, Normalized{}); }
    // a^2 - b^2 D
    Rat norm() const { return a_ * a_ - b_ * b_ * Rat(d_); }
    QuadExt reciprocal() const;

    Integer floor() const;
    QuadExt abs() const { return sign() < 0 ? -*this : *this; }

    Interval to_interval(unsigned long precision_bits) const;

    // "a+b√D" / "a-b√D"; rationals print as "a".
    std::string to_string() const;

    friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_, x.d_, Normalized{}); }
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y);

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    // Exact; throws MixedField across different fields.
    friend bool operator==(const QuadExt& x, const QuadExt& y);
    friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y);

private:
    struct Normalized {};
    QuadExt(Rat a, Rat b, Integer d, Normalized) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (sgn(b_) == 0) d_ = 1;
    }

    Rat a_;
    Rat b_;
    Integer d_;
};

// True when x and y can be combined exactly (same field, or one is rational).
bool same_field(const QuadExt& x, const QuadExt& y);

// Squarefree decomposition radicand = square^2 * core.
struct SquarefreeSplit {
    Integer square;
    Integer core;
};
SquarefreeSplit squarefree_split(const Integer& radicand);

}  // namespace irrmeasure
