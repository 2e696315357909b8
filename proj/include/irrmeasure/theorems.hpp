#pragma once

#include <optional>
#include <vector>

#include "irrmeasure/imf.hpp"

namespace irrmeasure {

/// An explicit t with |d(t)| >= C t.
struct Witness {
    Integer t;
    std::size_t r_alpha = 0;
    std::size_t r_beta = 0;
    StepDifference d;
    Rat ratio_lower_bound;  // <= |d(t)| / t
    Ordering comparison = Ordering::Greater;
};

/// Smallest t in [from, search_bound] (breakpoints plus `from` itself) with
/// |d(t)| >= C t. d is constant on each step while C t grows, so the left
/// ends of the steps are the only candidates.
/// Throws NotFoundInRange, UndecidedSign.
Witness find_witness(const Number& alpha, const Number& beta, const Integer& from, const Integer& search_bound,
                     unsigned long cap_bits = kDefaultPrecisionCapBits);

// Re-verifies |d(t)| > C t from scratch.
Ordering reverify(const Witness& w, unsigned long cap_bits = kDefaultPrecisionCapBits);

struct Coincidence {
    std::size_t n = 0;
    std::size_t m = 0;
    Integer first;   // q_n = t_m   (or q_n = t_{m+1})
    Integer second;  // q_{n+1} = t_{m+1}   (or q_{n+2} = t_{m+2})
};

// (q_n, q_{n+1}) = (t_m, t_{m+1}) with n, m <= depth.
std::vector<Coincidence> scan_lemma_conseq(const Number& alpha, const Number& beta, std::size_t depth);

// (q_n, q_{n+2}) = (t_{m+1}, t_{m+2}) with a_{n+2} = 1 and n, m <= depth.
std::vector<Coincidence> scan_lemma_conseq1(const Number& alpha, const Number& beta, std::size_t depth);

enum class DichotomyBranch { FirstBranch, SecondBranch, Both };
std::string_view to_string(DichotomyBranch branch);

struct DichotomyReport {
    std::size_t n = 0;
    std::size_t s = 0;
    DichotomyBranch branch = DichotomyBranch::Both;
    Expr first_lhs, first_rhs;    // 1/eta_s - 1/xi_{n-1}  vs  t_s(beta_{s+1} + t_{s-1}/t_s)(1 - 1/sqrt(alpha_{n+1}))
    Expr second_lhs, second_rhs;  // 1/xi_n - 1/eta_s  vs  q_n(alpha_{n+1} + q_{n-1}/q_n)(1 - 1/sqrt(alpha_{n+1}))
};

/// For eta_s in (xi_n, xi_{n-1}) (n >= 1), evaluates both alternatives.
/// xi_n = |q_n alpha - p_n|, eta_s = |t_s beta - r_s|.
/// Throws PreconditionFailed, UndecidedSign, DichotomyViolation.
DichotomyReport check_dichotomy(const Number& alpha, const Number& beta, std::size_t n, std::size_t s,
                                unsigned long cap_bits = kDefaultPrecisionCapBits);

// All (n, s) with 1 <= n <= depth, 0 <= s <= depth meeting the precondition.
std::vector<DichotomyReport> scan_dichotomy(const Number& alpha, const Number& beta, std::size_t depth,
                                            unsigned long cap_bits = kDefaultPrecisionCapBits);

/// Interleaving certificate. For side Alpha the pattern is
/// q_{n-1} <= t_{m-1} < q_n < t_m with a_{n+1} >= 2, the two points are
/// t_{m-1} and q_n, and the jump d(t_{m-1}) - d(q_n) exceeds q_n(a_{n+1} - 1).
/// Side Beta mirrors it: t_{m-1} <= q_{n-1} < t_m < q_n, b_{m+1} >= 2,
/// points q_{n-1} and t_m, jump d(t_m) - d(q_{n-1}) > t_m(b_{m+1} - 1).
/// One point then carries |d| > pivot/2 > C t.
struct GapCertificate {
    enum class Side { Alpha, Beta };
    Side side = Side::Alpha;
    std::size_t n = 0;
    std::size_t m = 0;
    Integer pivot;     // q_n (Alpha) or t_m (Beta)
    Integer quotient;  // a_{n+1} (Alpha) or b_{m+1} (Beta)
    Integer lower_t;
    Integer upper_t;
    StepDifference d_lower;
    StepDifference d_upper;
    Integer witness_t;  // the point with |d| > pivot / 2
    bool chain_verified = false;
};

// Throws GapViolation if a certificate fails to verify.
std::vector<GapCertificate> scan_interleave_gap(const Number& alpha, const Number& beta, std::size_t depth,
                                                unsigned long cap_bits = kDefaultPrecisionCapBits);

/// The near-optimal pair (tau, theta) for a given epsilon.
struct OptimalPair {
    Rat epsilon;
    Integer U;
    Integer V;
    QuadExt A;  // (tau V + U) / (tau + 2)
    std::size_t k = 0;
    std::size_t w = 0;
    Word b;  // b_1..b_w
    CFExpansion theta;
    long index_shift = 0;  // s_n = X_{n + index_shift}
    Interval error;        // |V + U/tau - sqrt(tau)|

    // X_0 = U, X_1 = V, X_{n+1} = X_n + X_{n-1}.
    std::vector<Integer> x_sequence(std::size_t count) const;
};

/// Deterministic search: U = 0, 1, ...; V = nearest integer to sqrt(tau) - U/tau;
/// first pair with error < epsilon, gcd(U, V) = 1 and tau V + U > 0.
/// Throws InvalidArgument (epsilon outside (0,1)), SearchExhausted.
OptimalPair construct_optimal(const Rat& epsilon, unsigned long cap_bits = kDefaultPrecisionCapBits);

struct NearOptimalityReport {
    Interval max_ratio;  // max |d(t)|/t over the steps in range
    Integer argmax_t;
    std::size_t steps = 0;
    bool pass = false;  // every ratio < C + slack
};

// Slack defaults to 5 epsilon in callers. Requires t_min >= s_{w+10}.
NearOptimalityReport verify_near_optimality(const OptimalPair& pair, const Integer& t_min, const Integer& t_max,
                                            const Rat& slack, unsigned long cap_bits = kDefaultPrecisionCapBits);

struct BinetCheck {
    Integer value;
    Interval enclosure;  // (tau^n - (-tau)^-n) / sqrt5 at 256 bits
};

// F_n by recurrence, checked against the Binet enclosure (1 <= n <= 300).
BinetCheck binet_fib(unsigned n);

}  // namespace irrmeasure
