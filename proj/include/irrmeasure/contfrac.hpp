#pragma once

#include <optional>
#include <string>
#include <vector>

#include "irrmeasure/quad_ext.hpp"
#include "irrmeasure/rational.hpp"

namespace irrmeasure {

/// [a0; preperiod..., (period...)]. An empty period means a finite
/// (rational) expansion; a nonempty one means a quadratic irrational.
struct CFExpansion {
    Integer a0;
    std::vector<Integer> preperiod;
    std::vector<Integer> period;

    bool is_rational() const { return period.empty(); }

    // a_j, or nullopt past the end of a finite expansion.
    std::optional<Integer> quotient(std::size_t j) const;

    // Number of partial quotients for rationals (a0 included).
    std::size_t finite_length() const { return 1 + preperiod.size(); }

    // "[1;(2)]", "[0;5,(1)]", "[0;2,3]", "[5]"
    std::string to_string() const;

    // Throws InvalidArgument if some a_j (j >= 1) is < 1.
    void validate() const;

    // Squarefree D of the value's field when known (0 otherwise); lets tails
    // skip factoring the period discriminant. Ignored by equality.
    Integer radicand_hint = 0;

    friend bool operator==(const CFExpansion& x, const CFExpansion& y) {
        return x.a0 == y.a0 && x.preperiod == y.preperiod && x.period == y.period;
    }
};

struct Convergent {
    std::size_t index = 0;
    Integer p;
    Integer q;
};

// Continuant argument <a_1, ..., a_n>.
using Word = std::vector<Integer>;

// Periodic expansion of an irrational x; period found by repetition of the
// (P, Q) state of the surd recursion. Throws RationalInput when b == 0.
CFExpansion expand_quadratic(const QuadExt& x);

// Canonical finite expansion (last quotient >= 2 unless length 1).
CFExpansion rational_to_cf(const Integer& num, const Integer& den);

// Exact value of the expansion.
QuadExt value(const CFExpansion& cf);

// Convergents 0..n (fewer for a rational that ends earlier).
std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t n);

// Convergents with q <= bound, in index order.
std::vector<Convergent> denominators_up_to(const CFExpansion& cf, const Integer& bound);

/// Exact r-th tail [a_r; a_{r+1}, ...]; r = 0 gives the value itself.
/// Throws RationalInput for finite expansions.
QuadExt tail(const CFExpansion& cf, std::size_t r);

Integer continuant(const Word& w);

// Neither x + y nor x - y is an integer.
bool is_nonintegral_sum_and_diff(const QuadExt& x, const QuadExt& y);

/// Incremental p_n/q_n recurrence over an expansion.
class ConvergentStream {
public:
    explicit ConvergentStream(const CFExpansion& cf);

    const Convergent& current() const { return current_; }
    const Convergent& previous() const { return previous_; }  // index -1 holds (1, 0)
    // Advances to the next convergent; false at the end of a finite expansion.
    bool next();

private:
    CFExpansion cf_;
    Convergent previous_;
    Convergent current_;
};

}  // namespace irrmeasure
