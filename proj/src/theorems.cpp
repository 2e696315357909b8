#include "irrmeasure/theorems.hpp"

#include <algorithm>

#include "irrmeasure/error.hpp"

namespace irrmeasure {

namespace {

[[noreturn]] void undecided(const std::string& what, unsigned long cap_bits) {
    throw Error(ErrorCode::UndecidedSign, what + " undecided at " + std::to_string(cap_bits) + " bits");
}

bool at_least(const Expr& lhs, const Expr& rhs, unsigned long cap_bits, const std::string& what) {
    Ordering o = refine_compare(lhs, rhs, cap_bits);
    if (o == Ordering::Undecided) undecided(what, cap_bits);
    return o != Ordering::Less;
}

bool strictly_greater(const Expr& lhs, const Expr& rhs, unsigned long cap_bits, const std::string& what) {
    Ordering o = refine_compare(lhs, rhs, cap_bits);
    if (o == Ordering::Undecided) undecided(what, cap_bits);
    return o == Ordering::Greater;
}

Expr ct(const Integer& t) { return constants::C() * Expr(Rat(t)); }

}  // namespace

Witness find_witness(const Number& alpha, const Number& beta, const Integer& from, const Integer& search_bound,
                     unsigned long cap_bits) {
    if (from < 1 || from > search_bound) throw Error(ErrorCode::InvalidArgument, "need 1 <= from <= bound");
    BreakpointProfile profile = breakpoint_profile(alpha, beta, from, search_bound);
    for (const auto& e : profile.entries) {
        StepDifference d = e.d();
        Expr magnitude = abs(d.expr());
        Ordering o = refine_compare(magnitude, ct(e.t), cap_bits);
        if (o == Ordering::Undecided) undecided("|d(t)| vs Ct at t=" + e.t.get_str(), cap_bits);
        if (o == Ordering::Less) continue;
        Witness w;
        w.t = e.t;
        w.r_alpha = e.r_alpha;
        w.r_beta = e.r_beta;
        w.d = d;
        w.comparison = o == Ordering::Greater ? Ordering::Greater : Ordering::Equal;
        w.ratio_lower_bound = enclose(magnitude / Expr(Rat(e.t)), 64, cap_bits).lo();
        return w;
    }
    throw Error(ErrorCode::NotFoundInRange,
                "no witness in [" + from.get_str() + ", " + search_bound.get_str() + "]; the bound is too small");
}

Ordering reverify(const Witness& w, unsigned long cap_bits) {
    return refine_compare(abs(w.d.expr()), ct(w.t), cap_bits);
}

std::vector<Coincidence> scan_lemma_conseq(const Number& alpha, const Number& beta, std::size_t depth) {
    require_admissible(alpha, beta);
    auto qa = convergents(alpha.cf, depth + 1);
    auto tb = convergents(beta.cf, depth + 1);
    std::vector<Coincidence> out;
    for (std::size_t n = 0; n <= depth; ++n) {
        for (std::size_t m = 0; m <= depth; ++m) {
            if (qa[n].q == tb[m].q && qa[n + 1].q == tb[m + 1].q) out.push_back({n, m, qa[n].q, qa[n + 1].q});
        }
    }
    return out;
}

std::vector<Coincidence> scan_lemma_conseq1(const Number& alpha, const Number& beta, std::size_t depth) {
    require_admissible(alpha, beta);
    std::vector<Coincidence> out;
    if (depth == 0) return out;
    auto qa = convergents(alpha.cf, depth + 2);
    auto tb = convergents(beta.cf, depth + 2);
    for (std::size_t n = 0; n <= depth; ++n) {
        if (*alpha.cf.quotient(n + 2) != 1) continue;
        for (std::size_t m = 0; m <= depth; ++m) {
            if (qa[n].q == tb[m + 1].q && qa[n + 2].q == tb[m + 2].q) out.push_back({n, m, qa[n].q, qa[n + 2].q});
        }
    }
    return out;
}

std::string_view to_string(DichotomyBranch branch) {
    switch (branch) {
        case DichotomyBranch::FirstBranch: return "FirstBranch";
        case DichotomyBranch::SecondBranch: return "SecondBranch";
        case DichotomyBranch::Both: return "Both";
    }
    return "Both";
}

namespace {

// Convergents, tails and 1/|q_n x - p_n| for indices 0..depth.
struct IndexTable {
    std::vector<Convergent> convs;
    std::vector<QuadExt> tails;       // tails[i] = x_i
    std::vector<QuadExt> inv_errors;  // q_n x_{n+1} + q_{n-1}

    IndexTable(const CFExpansion& x, std::size_t depth) : convs(convergents(x, depth)) {
        for (std::size_t i = 0; i <= depth + 1; ++i) tails.push_back(tail(x, i));
        for (std::size_t n = 0; n <= depth; ++n) {
            Integer q_prev = n == 0 ? Integer(0) : convs[n - 1].q;
            inv_errors.push_back(QuadExt(convs[n].q) * tails[n + 1] + QuadExt(q_prev));
        }
    }

    const Integer& q(std::size_t n) const { return convs[n].q; }
    Integer q_before(std::size_t n) const { return n == 0 ? Integer(0) : convs[n - 1].q; }
};

// eta_s in (xi_n, xi_{n-1}) in terms of reciprocals: 1/xi_{n-1} < 1/eta_s < 1/xi_n.
bool dichotomy_precondition(const IndexTable& a, const IndexTable& b, std::size_t n, std::size_t s,
                            unsigned long cap_bits) {
    Expr inv_eta(b.inv_errors[s]);
    Ordering upper = refine_compare(inv_eta, Expr(a.inv_errors[n]), cap_bits);
    if (upper == Ordering::Undecided) undecided("eta_s vs xi_n", cap_bits);
    if (upper != Ordering::Less) return false;
    Ordering lower = refine_compare(inv_eta, Expr(a.inv_errors[n - 1]), cap_bits);
    if (lower == Ordering::Undecided) undecided("eta_s vs xi_{n-1}", cap_bits);
    return lower == Ordering::Greater;
}

DichotomyReport evaluate_dichotomy(const IndexTable& a, const IndexTable& b, std::size_t n, std::size_t s,
                                   unsigned long cap_bits) {
    DichotomyReport r;
    r.n = n;
    r.s = s;
    const QuadExt& alpha_next = a.tails[n + 1];
    Expr factor = Expr(1L) - Expr(1L) / sqrt(Expr(alpha_next));

    r.first_lhs = Expr(b.inv_errors[s]) - Expr(a.inv_errors[n - 1]);
    r.first_rhs = Expr(Rat(b.q(s))) * (Expr(b.tails[s + 1]) + Expr(make_rat(b.q_before(s), b.q(s)))) * factor;
    r.second_lhs = Expr(a.inv_errors[n]) - Expr(b.inv_errors[s]);
    r.second_rhs = Expr(Rat(a.q(n))) * (Expr(alpha_next) + Expr(make_rat(a.q_before(n), a.q(n)))) * factor;

    bool first = at_least(r.first_lhs, r.first_rhs, cap_bits, "first dichotomy branch");
    bool second = at_least(r.second_lhs, r.second_rhs, cap_bits, "second dichotomy branch");
    if (!first && !second) {
        throw Error(ErrorCode::DichotomyViolation,
                    "neither dichotomy branch holds at n=" + std::to_string(n) + ", s=" + std::to_string(s));
    }
    r.branch = first && second ? DichotomyBranch::Both
                               : (first ? DichotomyBranch::FirstBranch : DichotomyBranch::SecondBranch);
    return r;
}

}  // namespace

DichotomyReport check_dichotomy(const Number& alpha, const Number& beta, std::size_t n, std::size_t s,
                                unsigned long cap_bits) {
    require_admissible(alpha, beta);
    if (n < 1) throw Error(ErrorCode::PreconditionFailed, "check_dichotomy needs n >= 1");
    IndexTable a(alpha.cf, n);
    IndexTable b(beta.cf, s);
    if (!dichotomy_precondition(a, b, n, s, cap_bits)) {
        throw Error(ErrorCode::PreconditionFailed, "eta_" + std::to_string(s) + " is not inside (xi_" +
                                                       std::to_string(n) + ", xi_" + std::to_string(n - 1) + ")");
    }
    return evaluate_dichotomy(a, b, n, s, cap_bits);
}

std::vector<DichotomyReport> scan_dichotomy(const Number& alpha, const Number& beta, std::size_t depth,
                                            unsigned long cap_bits) {
    require_admissible(alpha, beta);
    IndexTable a(alpha.cf, depth);
    IndexTable b(beta.cf, depth);
    std::vector<DichotomyReport> out;
    // 1/eta_s grows with s and 1/xi_n grows with n, so the bracketing n
    // (smallest with 1/xi_n > 1/eta_s) never moves backwards.
    std::size_t n = 1;
    for (std::size_t s = 0; s <= depth; ++s) {
        Expr inv_eta(b.inv_errors[s]);
        while (n <= depth) {
            Ordering o = refine_compare(Expr(a.inv_errors[n]), inv_eta, cap_bits);
            if (o == Ordering::Undecided) undecided("xi_n vs eta_s", cap_bits);
            if (o == Ordering::Greater) break;
            ++n;
        }
        if (n > depth) break;
        if (dichotomy_precondition(a, b, n, s, cap_bits)) out.push_back(evaluate_dichotomy(a, b, n, s, cap_bits));
    }
    return out;
}

namespace {

// Smallest index m with q_m > value.
std::optional<std::size_t> first_above(const std::vector<Convergent>& convs, const Integer& value) {
    for (const auto& c : convs) {
        if (c.q > value) return c.index;
    }
    return std::nullopt;
}

void scan_side(const Number& own, const Number& other, GapCertificate::Side side, std::size_t depth,
               unsigned long cap_bits, std::vector<GapCertificate>& out) {
    auto mine = convergents(own.cf, depth + 1);
    auto theirs = convergents(other.cf, depth + 1);
    const Number& alpha = side == GapCertificate::Side::Alpha ? own : other;
    const Number& beta = side == GapCertificate::Side::Alpha ? other : own;

    for (std::size_t n = 1; n <= depth; ++n) {
        const Integer& pivot = mine[n].q;
        auto m = first_above(theirs, pivot);
        if (!m || *m > depth || *m == 0) continue;
        const Integer& before = theirs[*m - 1].q;
        if (!(mine[n - 1].q <= before && before < pivot)) continue;
        Integer a_next = *own.cf.quotient(n + 1);
        if (a_next < 2) continue;

        GapCertificate c;
        c.side = side;
        c.pivot = pivot;
        c.quotient = a_next;
        if (side == GapCertificate::Side::Alpha) {
            c.n = n;
            c.m = *m;
        } else {
            c.n = *m;
            c.m = n;
        }
        // Own step changes at the pivot; the other number's step is constant on [before, pivot].
        c.lower_t = before;
        c.upper_t = pivot;
        c.d_lower = d_at(alpha, beta, c.lower_t);
        c.d_upper = d_at(alpha, beta, c.upper_t);

        Expr jump = side == GapCertificate::Side::Alpha ? c.d_lower.expr() - c.d_upper.expr()
                                                        : c.d_upper.expr() - c.d_lower.expr();
        Expr bound = Expr(Rat(pivot * (a_next - 1)));
        c.chain_verified = strictly_greater(jump, bound, cap_bits, "interleave jump");
        if (!c.chain_verified) {
            throw Error(ErrorCode::GapViolation, "jump does not exceed pivot*(quotient-1) at pivot " + pivot.get_str());
        }

        Expr half = Expr(make_rat(pivot, 2));
        if (strictly_greater(abs(c.d_upper.expr()), half, cap_bits, "|d| vs pivot/2")) {
            c.witness_t = c.upper_t;
        } else if (strictly_greater(abs(c.d_lower.expr()), half, cap_bits, "|d| vs pivot/2")) {
            c.witness_t = c.lower_t;
        } else {
            throw Error(ErrorCode::GapViolation, "neither point has |d| > pivot/2 at pivot " + pivot.get_str());
        }
        const StepDifference& dw = c.witness_t == c.upper_t ? c.d_upper : c.d_lower;
        if (!strictly_greater(abs(dw.expr()), ct(c.witness_t), cap_bits, "|d| vs Ct")) {
            throw Error(ErrorCode::GapViolation, "certificate point fails |d| > Ct at t=" + c.witness_t.get_str());
        }
        out.push_back(std::move(c));
    }
}

}  // namespace

std::vector<GapCertificate> scan_interleave_gap(const Number& alpha, const Number& beta, std::size_t depth,
                                                unsigned long cap_bits) {
    require_admissible(alpha, beta);
    std::vector<GapCertificate> out;
    scan_side(alpha, beta, GapCertificate::Side::Alpha, depth, cap_bits, out);
    scan_side(beta, alpha, GapCertificate::Side::Beta, depth, cap_bits, out);
    return out;
}

std::vector<Integer> OptimalPair::x_sequence(std::size_t count) const {
    std::vector<Integer> xs;
    if (count > 0) xs.push_back(U);
    if (count > 1) xs.push_back(V);
    while (xs.size() < count) xs.push_back(xs[xs.size() - 1] + xs[xs.size() - 2]);
    return xs;
}

namespace {

constexpr unsigned long kMaxU = 1000000;
constexpr std::size_t kMaxXSteps = 100000;
constexpr std::size_t kShiftCheckSpan = 20;

}  // namespace

OptimalPair construct_optimal(const Rat& epsilon, unsigned long cap_bits) {
    if (sgn(epsilon) <= 0 || epsilon >= 1) throw Error(ErrorCode::InvalidArgument, "epsilon must lie in (0, 1)");
    const QuadExt tau = constants::tau();
    const QuadExt phi = constants::phi();  // 1/tau
    const Expr root = constants::sqrt_tau();

    OptimalPair pair;
    pair.epsilon = epsilon;
    bool found = false;
    for (unsigned long u = 0; u <= kMaxU && !found; ++u) {
        Integer U(u);
        Expr target = root - Expr(QuadExt(U) * phi);
        Integer V = floor(Rat(enclose(target, 16, cap_bits).midpoint() + Rat(1, 2)));
        Expr error = abs(Expr(QuadExt(V) + QuadExt(U) * phi) - root);
        Ordering o = refine_compare(error, Expr(epsilon), cap_bits);
        if (o == Ordering::Undecided) undecided("|V + U/tau - sqrt(tau)| vs epsilon", cap_bits);
        if (o != Ordering::Less) continue;
        Integer g;
        mpz_gcd(g.get_mpz_t(), U.get_mpz_t(), V.get_mpz_t());
        if (g != 1) continue;
        if ((tau * QuadExt(V) + QuadExt(U)).sign() <= 0) continue;
        pair.U = U;
        pair.V = V;
        pair.error = enclose(error, 64, cap_bits);
        found = true;
    }
    if (!found) throw Error(ErrorCode::SearchExhausted, "no (U, V) found for U <= 10^6");

    pair.A = (tau * QuadExt(pair.V) + QuadExt(pair.U)) / (tau + QuadExt(2L));

    // Least k with 1 <= X_{k-1} < X_k, so X_{k-1}/X_k = [0; b_w, ..., b_1].
    Integer prev = pair.U, cur = pair.V;
    std::size_t k = 1;
    while (!(prev >= 1 && prev < cur)) {
        if (++k > kMaxXSteps) throw Error(ErrorCode::SearchExhausted, "X_n never becomes positive and increasing");
        Integer next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    pair.k = k;
    CFExpansion ratio = rational_to_cf(prev, cur);
    pair.b.assign(ratio.preperiod.rbegin(), ratio.preperiod.rend());
    pair.w = pair.b.size();
    pair.theta = CFExpansion{0, pair.b, {1}, 5};
    pair.index_shift = static_cast<long>(pair.k) - static_cast<long>(pair.w);

    // s_n = X_{n + index_shift} for w-1 <= n <= w+20.
    auto s = convergents(pair.theta, pair.w + kShiftCheckSpan);
    auto xs = pair.x_sequence(pair.k + kShiftCheckSpan + 1);
    for (std::size_t n = pair.w - 1; n <= pair.w + kShiftCheckSpan; ++n) {
        auto xi = static_cast<std::size_t>(static_cast<long>(n) + pair.index_shift);
        if (s[n].q != xs[xi]) {
            throw Error(ErrorCode::FormMismatch, "theta denominator s_" + std::to_string(n) + " = " + s[n].q.get_str() +
                                                     " differs from X_" + std::to_string(xi));
        }
    }
    return pair;
}

NearOptimalityReport verify_near_optimality(const OptimalPair& pair, const Integer& t_min, const Integer& t_max,
                                            const Rat& slack, unsigned long cap_bits) {
    auto s = convergents(pair.theta, pair.w + 10);
    if (t_min < s.back().q) {
        throw Error(ErrorCode::PreconditionFailed, "t_min must be at least s_{w+10} = " + s.back().q.get_str());
    }
    Number tau = make_number(constants::tau());
    Number theta = make_number(pair.theta);
    BreakpointProfile profile = breakpoint_profile(tau, theta, t_min, t_max);

    Expr limit = constants::C() + Expr(slack);
    NearOptimalityReport report;
    report.steps = profile.entries.size();
    report.pass = true;
    std::optional<Expr> best;
    for (const auto& e : profile.entries) {
        Expr ratio = abs(e.d().expr()) / Expr(Rat(e.t));
        if (!best || strictly_greater(ratio, *best, cap_bits, "ratio comparison")) {
            best = ratio;
            report.argmax_t = e.t;
        }
        Ordering o = refine_compare(ratio, limit, cap_bits);
        if (o == Ordering::Undecided) undecided("|d|/t vs C + slack", cap_bits);
        if (o != Ordering::Less) report.pass = false;
    }
    report.max_ratio = enclose(*best, 64, cap_bits);
    return report;
}

BinetCheck binet_fib(unsigned n) {
    if (n < 1 || n > 300) throw Error(ErrorCode::InvalidArgument, "binet_fib needs 1 <= n <= 300");
    Integer prev = 0, cur = 1;  // F_0, F_1
    for (unsigned i = 1; i < n; ++i) {
        Integer next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }

    // Interval route only: sqrt(5) is not folded into Q(sqrt 5) here.
    Expr root5 = sqrt(Expr(5L));
    Expr tau = (Expr(1L) + root5) / Expr(2L);
    Expr power = pow(tau, n);
    Expr alternating = Expr(n % 2 == 0 ? 1L : -1L) / power;
    auto enclosure = ((power - alternating) / root5).evaluate(256);
    if (!enclosure) throw Error(ErrorCode::FormMismatch, "Binet enclosure failed to evaluate");
    Integer lo = ceil(enclosure->lo());
    Integer hi = floor(enclosure->hi());
    if (lo != hi || lo != cur) {
        throw Error(ErrorCode::FormMismatch, "Binet enclosure " + to_string(*enclosure) + " does not isolate F_" +
                                                 std::to_string(n) + " = " + cur.get_str());
    }
    return {cur, *enclosure};
}

}  // namespace irrmeasure
