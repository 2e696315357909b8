#include "irrmeasure/imf.hpp"

#include <algorithm>
#include <ostream>

#include "irrmeasure/error.hpp"

namespace irrmeasure {

namespace {

void require_irrational(const CFExpansion& x) {
    if (x.is_rational()) throw Error(ErrorCode::RationalInput, "psi needs an irrational number, got " + x.to_string());
}

// Convergents up to and including the first with q > bound.
std::vector<Convergent> covering_convergents(const CFExpansion& x, const Integer& bound) {
    std::vector<Convergent> out;
    ConvergentStream stream(x);
    out.push_back(stream.current());
    while (out.back().q <= bound && stream.next()) out.push_back(stream.current());
    return out;
}

// Largest index r with q_r <= t.
std::size_t largest_index_at(const std::vector<Convergent>& convs, const Integer& t) {
    auto it = std::upper_bound(convs.begin(), convs.end(), t,
                               [](const Integer& v, const Convergent& c) { return v < c.q; });
    return static_cast<std::size_t>(it - convs.begin()) - 1;
}

QuadExt inv_from(const CFExpansion& x, const std::vector<Convergent>& convs, std::size_t r) {
    Integer q_prev = r == 0 ? Integer(0) : convs[r - 1].q;
    return QuadExt(convs[r].q) * tail(x, r + 1) + QuadExt(q_prev);
}

}  // namespace

PsiValue psi(const CFExpansion& x, const Integer& t) {
    require_irrational(x);
    if (t < 1) throw Error(ErrorCode::InvalidArgument, "psi needs t >= 1");
    auto convs = covering_convergents(x, t);
    std::size_t r = largest_index_at(convs, t);
    PsiValue out;
    out.index = r;
    out.q = convs[r].q;
    out.value = (QuadExt(convs[r].q) * value(x) - QuadExt(convs[r].p)).abs();
    out.inv_value = inv_from(x, convs, r);
    return out;
}

QuadExt inv_psi(const CFExpansion& x, const Integer& t) {
    require_irrational(x);
    if (t < 1) throw Error(ErrorCode::InvalidArgument, "inv_psi needs t >= 1");
    auto convs = covering_convergents(x, t);
    std::size_t r = largest_index_at(convs, t);
    QuadExt first = inv_from(x, convs, r);
    // q_{r+1} + q_r / x_{r+2}
    QuadExt second = QuadExt(convs[r + 1].q) + QuadExt(convs[r].q) / tail(x, r + 2);
    if (first != second) {
        throw Error(ErrorCode::FormMismatch, "1/psi closed forms disagree: " + first.to_string() + " vs " +
                                                 second.to_string());
    }
    return first;
}

QuadExt inv_convergent_error(const CFExpansion& x, std::size_t n) {
    require_irrational(x);
    auto convs = convergents(x, n);
    return inv_from(x, convs, n);
}

QuadExt convergent_error(const CFExpansion& x, std::size_t n) {
    require_irrational(x);
    auto convs = convergents(x, n);
    return (QuadExt(convs[n].q) * value(x) - QuadExt(convs[n].p)).abs();
}

int StepDifference::sign(unsigned long cap_bits) const {
    int s = decide_sign(expr(), cap_bits);
    if (s == 0) throw Error(ErrorCode::UndecidedSign, "d(t) is exactly zero");
    return s;
}

std::string StepDifference::decimal(unsigned digits, unsigned long cap_bits) const {
    return render_decimal(expr(), digits, cap_bits);
}

void require_admissible(const Number& alpha, const Number& beta) {
    if (!alpha.is_irrational()) throw Error(ErrorCode::RationalInput, "alpha is rational");
    if (!beta.is_irrational()) throw Error(ErrorCode::RationalInput, "beta is rational");
    if (!is_nonintegral_sum_and_diff(alpha.value, beta.value)) {
        throw Error(ErrorCode::IntegralSumOrDiff,
                    "alpha + beta or alpha - beta is an integer (" + alpha.value.to_string() + ", " +
                        beta.value.to_string() + ")");
    }
}

StepDifference d_at(const Number& alpha, const Number& beta, const Integer& t) {
    require_admissible(alpha, beta);
    return {psi(alpha.cf, t).inv_value, psi(beta.cf, t).inv_value};
}

BreakpointProfile breakpoint_profile(const Number& alpha, const Number& beta, const Integer& t_min,
                                     const Integer& t_max) {
    require_admissible(alpha, beta);
    if (t_min < 1 || t_min > t_max) throw Error(ErrorCode::InvalidArgument, "profile needs 1 <= t_min <= t_max");

    auto conv_a = covering_convergents(alpha.cf, t_max);
    auto conv_b = covering_convergents(beta.cf, t_max);

    std::vector<Integer> points{t_min};
    for (const auto* convs : {&conv_a, &conv_b}) {
        for (const auto& c : *convs) {
            if (c.q > t_min && c.q <= t_max) points.push_back(c.q);
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    BreakpointProfile profile{t_min, t_max, {}};
    profile.entries.reserve(points.size());
    for (const auto& t : points) {
        ProfileEntry e;
        e.t = t;
        e.r_alpha = largest_index_at(conv_a, t);
        e.r_beta = largest_index_at(conv_b, t);
        e.inv_psi_alpha = inv_from(alpha.cf, conv_a, e.r_alpha);
        e.inv_psi_beta = inv_from(beta.cf, conv_b, e.r_beta);
        profile.entries.push_back(std::move(e));
    }
    return profile;
}

std::vector<Integer> sign_changes(const BreakpointProfile& profile, unsigned long cap_bits) {
    if (profile.entries.empty()) throw Error(ErrorCode::InvalidArgument, "empty profile");
    std::vector<Integer> flips;
    int previous = profile.entries.front().d().sign(cap_bits);
    for (std::size_t i = 1; i < profile.entries.size(); ++i) {
        int s = profile.entries[i].d().sign(cap_bits);
        if (s != previous) flips.push_back(profile.entries[i].t);
        previous = s;
    }
    return flips;
}

void write_profile_csv(std::ostream& out, const BreakpointProfile& profile, unsigned digits,
                       unsigned long cap_bits) {
    out << "t,inv_psi_alpha,inv_psi_beta,d,digits=" << digits << "\n";
    for (const auto& e : profile.entries) {
        out << e.t.get_str() << ',' << render_decimal(Expr(e.inv_psi_alpha), digits, cap_bits) << ','
            << render_decimal(Expr(e.inv_psi_beta), digits, cap_bits) << ',' << e.d().decimal(digits, cap_bits)
            << "\n";
    }
}

std::string Letter::to_string() const {
    switch (kind) {
        case Kind::B: return "B(" + std::to_string(n) + "," + std::to_string(s) + ")";
        case Kind::Q: return "Q(" + std::to_string(n) + ")";
        case Kind::T: return "T(" + std::to_string(s) + ")";
    }
    return "?";
}

namespace {

struct Distinct {
    Integer value;
    std::size_t index;
};

// Distinct denominator values, each with its largest index.
std::vector<Distinct> distinct_denominators(const CFExpansion& x, std::size_t count) {
    std::vector<Distinct> out;
    for (const auto& c : convergents(x, count + 1)) {
        if (!out.empty() && out.back().value == c.q) {
            out.back().index = c.index;
        } else {
            out.push_back({c.q, c.index});
        }
    }
    return out;
}

}  // namespace

MergedWord merged_word(const Number& alpha, const Number& beta, std::size_t count) {
    require_admissible(alpha, beta);
    if (count < 1) throw Error(ErrorCode::InvalidArgument, "merged_word needs count >= 1");
    auto da = distinct_denominators(alpha.cf, count);
    auto db = distinct_denominators(beta.cf, count);
    MergedWord word;
    std::size_t i = 0, j = 0;
    while (word.size() < count && i < da.size() && j < db.size()) {
        Letter l;
        if (da[i].value == db[j].value) {
            l = {Letter::Kind::B, da[i].index, db[j].index, da[i].value};
            ++i;
            ++j;
        } else if (da[i].value < db[j].value) {
            l = {Letter::Kind::Q, da[i].index, 0, da[i].value};
            ++i;
        } else {
            l = {Letter::Kind::T, 0, db[j].index, db[j].value};
            ++j;
        }
        word.push_back(std::move(l));
    }
    return word;
}

}  // namespace irrmeasure
