#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irrmeasure/interval.hpp"
#include "irrmeasure/quad_ext.hpp"

namespace irrmeasure {

inline constexpr unsigned long kDefaultPrecisionCapBits = 4096;

/// Immutable real-valued expression over exact quadratic-field leaves.
///
/// Values that leave a single field (sqrt of an irrational, sums across
/// fields) are decided through interval evaluation at doubling precision.
/// Subtrees that stay inside one field fold back to an exact QuadExt.
class Expr {
public:
    Expr();
    Expr(const QuadExt& value);  // NOLINT: leaves convert implicitly
    Expr(const Rat& value);      // NOLINT
    Expr(const Integer& value);  // NOLINT
    Expr(long value);            // NOLINT

    // Enclosure at working precision `bits`, or nullopt when that precision
    // cannot separate a divisor (or sqrt argument) from zero.
    std::optional<Interval> evaluate(unsigned long bits) const;

    // Exact value when every operation stays inside one quadratic field.
    std::optional<QuadExt> try_exact() const;

    friend Expr operator+(const Expr& x, const Expr& y);
    friend Expr operator-(const Expr& x, const Expr& y);
    friend Expr operator*(const Expr& x, const Expr& y);
    friend Expr operator/(const Expr& x, const Expr& y);
    friend Expr operator-(const Expr& x);
    friend Expr abs(const Expr& x);
    friend Expr sqrt(const Expr& x);
    friend Expr pow(const Expr& x, unsigned exponent);

    struct Node;

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

enum class Ordering { Less, Equal, Greater, Undecided };
std::string_view to_string(Ordering ordering);

/// Decides lhs <=> rhs. Same-field operands compare exactly (and may return
/// Equal); otherwise precision doubles from 64 bits until the enclosures are
/// disjoint, returning Undecided once the next step would exceed `cap_bits`.
Ordering refine_compare(const Expr& lhs, const Expr& rhs,
                        unsigned long cap_bits = kDefaultPrecisionCapBits);

// Sign of x as -1/0/+1; throws Error(UndecidedSign) at the cap.
int decide_sign(const Expr& x, unsigned long cap_bits = kDefaultPrecisionCapBits);

// Enclosure of width <= 2^-bits; throws UndecidedSign if unreachable.
Interval enclose(const Expr& x, unsigned long bits,
                 unsigned long cap_bits = kDefaultPrecisionCapBits);

/// Correctly rounded (half away from zero) decimal with `digits` fractional
/// digits. Throws UndecidedSign when the cap is hit before the rounding of
/// both interval ends agrees.
std::string render_decimal(const Expr& x, unsigned digits,
                           unsigned long cap_bits = kDefaultPrecisionCapBits);

namespace constants {

enum class Name { Tau, Phi, K, C };

QuadExt tau();   // (1 + sqrt5) / 2
QuadExt phi();   // (sqrt5 - 1) / 2
Expr sqrt_tau();
Expr K();        // sqrt(tau) - 1
Expr C();        // sqrt5 * (1 - sqrt(phi))
// K * (sqrt(tau) + tau^(-3/2)); same number as C().
Expr C_via_K();

Expr expr(Name name);
std::optional<Name> parse_name(std::string_view text);
std::string_view to_string(Name name);

// Enclosure of the named constant, width <= 2^-precision_bits.
Interval value(Name name, unsigned long precision_bits);

}  // namespace constants

}  // namespace irrmeasure
