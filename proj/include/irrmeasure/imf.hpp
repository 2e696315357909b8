#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "irrmeasure/contfrac.hpp"
#include "irrmeasure/expr.hpp"
#include "irrmeasure/number_spec.hpp"

namespace irrmeasure {

/// psi_x(t) = |q_r x - p_r| where r is the largest index with q_r <= t.
struct PsiValue {
    std::size_t index = 0;
    Integer q;
    QuadExt value;      // exact distance to the nearest integer
    QuadExt inv_value;  // q_r x_{r+1} + q_{r-1}
};

PsiValue psi(const CFExpansion& x, const Integer& t);

/// 1/psi_x(t), evaluated in both closed forms q_r x_{r+1} + q_{r-1} and
/// q_{r+1} + q_r / x_{r+2}; throws FormMismatch if they ever differ.
QuadExt inv_psi(const CFExpansion& x, const Integer& t);

// Per-index quantities |q_n x - p_n| and its reciprocal q_n x_{n+1} + q_{n-1}.
QuadExt convergent_error(const CFExpansion& x, std::size_t n);
QuadExt inv_convergent_error(const CFExpansion& x, std::size_t n);

/// d(t) = 1/psi_beta(t) - 1/psi_alpha(t), kept as two exact field elements
/// since alpha and beta usually live in different fields.
struct StepDifference {
    QuadExt inv_psi_alpha;
    QuadExt inv_psi_beta;

    Expr expr() const { return Expr(inv_psi_beta) - Expr(inv_psi_alpha); }
    // -1 or +1; throws UndecidedSign when the cap is reached.
    int sign(unsigned long cap_bits = kDefaultPrecisionCapBits) const;
    std::string decimal(unsigned digits, unsigned long cap_bits = kDefaultPrecisionCapBits) const;
};

// Throws RationalInput / IntegralSumOrDiff unless alpha, beta are irrational
// with alpha +- beta not integers.
void require_admissible(const Number& alpha, const Number& beta);

StepDifference d_at(const Number& alpha, const Number& beta, const Integer& t);

struct ProfileEntry {
    Integer t;
    std::size_t r_alpha = 0;
    std::size_t r_beta = 0;
    QuadExt inv_psi_alpha;
    QuadExt inv_psi_beta;

    StepDifference d() const { return {inv_psi_alpha, inv_psi_beta}; }
};

/// Step values of d on [t_min, t_max]: a leading entry at t_min with the step
/// active there, then one entry per merged distinct denominator in the range.
struct BreakpointProfile {
    Integer t_min;
    Integer t_max;
    std::vector<ProfileEntry> entries;
};

BreakpointProfile breakpoint_profile(const Number& alpha, const Number& beta, const Integer& t_min,
                                     const Integer& t_max);

// Entries whose d has strict sign opposite to the previous entry.
std::vector<Integer> sign_changes(const BreakpointProfile& profile,
                                  unsigned long cap_bits = kDefaultPrecisionCapBits);

// CSV: header "t,inv_psi_alpha,inv_psi_beta,d,digits=<n>", one row per entry.
void write_profile_csv(std::ostream& out, const BreakpointProfile& profile, unsigned digits,
                       unsigned long cap_bits = kDefaultPrecisionCapBits);

struct Letter {
    enum class Kind { B, Q, T };
    Kind kind = Kind::B;
    std::size_t n = 0;  // index into the alpha denominators (B, Q)
    std::size_t s = 0;  // index into the beta denominators (B, T)
    Integer value;

    // "B(n,s)", "Q(n)", "T(s)"
    std::string to_string() const;
    friend bool operator==(const Letter&, const Letter&) = default;
};

using MergedWord = std::vector<Letter>;

/// First `count` letters of the merged denominator word. A value reached by
/// two indices of one number (only the duplicated 1) records the larger index.
MergedWord merged_word(const Number& alpha, const Number& beta, std::size_t count);

}  // namespace irrmeasure
