#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle/mpfr_oracle.hpp"
#include "support.hpp"

#include <irrmeasure/certificates.hpp>
#include <irrmeasure/contfrac.hpp>
#include <irrmeasure/imf.hpp>
#include <irrmeasure/number_spec.hpp>
#include <irrmeasure/theorems.hpp>

#include <cmath>
#include <cstdint>
#include <numeric>

using namespace irrmeasure;
namespace cst = irrmeasure::constants;

namespace {

Number num(const char* spec) { return parse_number(spec); }
const Number& sqrt2() {
    static const Number n = num("surd:(0+sqrt(2))/1");
    return n;
}
const Number& sqrt3() {
    static const Number n = num("surd:(0+sqrt(3))/1");
    return n;
}
const Number& tau() {
    static const Number n = num("tau");
    return n;
}
const Number& theta5() {
    static const Number n = num("cf:[0;5,(1)]");
    return n;
}

std::vector<mpz_class> oracle_qs(const Number& x, std::size_t count) {
    return oracle::denominators(x.value.a(), x.value.b(), x.value.radicand(), count);
}

std::vector<std::pair<std::size_t, std::size_t>> index_pairs(const std::vector<Coincidence>& cs) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& c : cs) out.emplace_back(c.n, c.m);
    return out;
}

}  // namespace

TEST_CASE("find_witness examples") {
    Witness w4 = find_witness(sqrt2(), tau(), Integer(4), Integer(1000000));
    CHECK(w4.t == 5);
    CHECK(w4.comparison == Ordering::Greater);
    CHECK(w4.d.decimal(6) == "-2.980898");
    CHECK(render_decimal(Expr(w4.ratio_lower_bound), 3) == "0.596");
    CHECK(w4.ratio_lower_bound <= Rat(2980898, 5000000));

    CHECK(find_witness(sqrt2(), tau(), Integer(1), Integer(1000000)).t == 2);

    // the step [5, 8) already carries a witness at t = 6: |d| = 2.98090 >= 6C = 2.86908
    Witness w6 = find_witness(sqrt2(), tau(), Integer(6), Integer(1000000));
    CHECK(w6.t == 6);
    CHECK(find_witness(sqrt2(), tau(), Integer(7), Integer(1000000)).t == 8);
    CHECK(find_witness(sqrt2(), tau(), Integer(9), Integer(1000000)).t == 12);
    CHECK(d_at(sqrt2(), tau(), Integer(12)).decimal(6) == "-16.026291");

    CHECK(thrown_code([] { (void)find_witness(sqrt2(), tau(), Integer(3), Integer(4)); }) ==
          ErrorCode::NotFoundInRange);
    CHECK(thrown_code([] { (void)find_witness(tau(), tau(), Integer(3), Integer(40)); }) ==
          ErrorCode::IntegralSumOrDiff);
}

TEST_CASE("witnesses are re-verifiable and minimal") {
    std::vector<std::pair<Number, Number>> pairs = {{sqrt2(), tau()}, {sqrt2(), sqrt3()}, {tau(), theta5()}};
    for (const auto& [a, b] : pairs) {
        for (const char* T : {"1", "10", "1000", "1000000", "123456789"}) {
            Witness w = find_witness(a, b, Integer(T), Integer("1000000000000"));
            CHECK(w.t >= Integer(T));
            CHECK(reverify(w) == Ordering::Greater);
            Expr lhs = abs(w.d.expr());
            CHECK(refine_compare(lhs, Expr(w.ratio_lower_bound) * Expr(w.t)) != Ordering::Less);
            BreakpointProfile p = breakpoint_profile(a, b, Integer(T), w.t);
            for (std::size_t i = 0; i + 1 < p.entries.size(); ++i) {
                CHECK(refine_compare(abs(p.entries[i].d().expr()), cst::C() * Expr(p.entries[i].t)) == Ordering::Less);
            }
        }
    }
}

TEST_CASE("scan_lemma_conseq against enumeration") {
    auto one = scan_lemma_conseq(sqrt2(), tau(), 50);
    REQUIRE(one.size() == 1);
    CHECK(one[0].n == 0);
    CHECK(one[0].m == 1);
    CHECK(one[0].first == 1);
    CHECK(one[0].second == 2);

    auto qa = oracle_qs(sqrt2(), 52), tb = oracle_qs(sqrt3(), 52);
    std::vector<std::pair<std::size_t, std::size_t>> want;
    for (std::size_t n = 0; n <= 50; ++n)
        for (std::size_t m = 0; m <= 50; ++m)
            if (qa[n] == tb[m] && qa[n + 1] == tb[m + 1]) want.emplace_back(n, m);
    auto got50 = scan_lemma_conseq(sqrt2(), sqrt3(), 50);
    CHECK(index_pairs(got50) == want);
    CHECK(index_pairs(scan_lemma_conseq(sqrt2(), sqrt3(), 25)) == want);

    CHECK(thrown_code([] { (void)scan_lemma_conseq(tau(), tau(), 10); }) == ErrorCode::IntegralSumOrDiff);
}

TEST_CASE("scan_lemma_conseq1 against enumeration") {
    CHECK(scan_lemma_conseq1(sqrt2(), tau(), 50).empty());
    CHECK(scan_lemma_conseq1(tau(), theta5(), 0).empty());

    auto qa = oracle_qs(tau(), 53), tb = oracle_qs(theta5(), 53);
    auto aq = oracle::quotients(tau().value.a(), tau().value.b(), tau().value.radicand(), 53);
    std::vector<std::pair<std::size_t, std::size_t>> want;
    for (std::size_t n = 0; n <= 50; ++n) {
        if (aq[n + 2] != 1) continue;
        for (std::size_t m = 0; m <= 50; ++m)
            if (qa[n] == tb[m + 1] && qa[n + 2] == tb[m + 2]) want.emplace_back(n, m);
    }
    auto got = scan_lemma_conseq1(tau(), theta5(), 50);
    CHECK(index_pairs(got) == want);
    CHECK(got.size() < 51);
}

TEST_CASE("check_dichotomy examples") {
    DichotomyReport r = check_dichotomy(sqrt2(), tau(), 2, 3);
    CHECK(r.branch == DichotomyBranch::SecondBranch);
    CHECK(render_decimal(r.second_lhs, 6) == "7.216966");
    CHECK(render_decimal(r.second_rhs, 6) == "5.015009");
    CHECK(refine_compare(r.second_lhs, r.second_rhs) == Ordering::Greater);
    CHECK(refine_compare(r.first_lhs, r.first_rhs) == Ordering::Less);

    CHECK(thrown_code([] { (void)check_dichotomy(sqrt2(), tau(), 2, 0); }) == ErrorCode::PreconditionFailed);
    CHECK(thrown_code([] { (void)check_dichotomy(sqrt2(), tau(), 0, 1); }) == ErrorCode::PreconditionFailed);

    auto all = scan_dichotomy(sqrt2(), tau(), 30);
    bool first = false, second = false;
    for (const auto& rep : all) {
        first |= rep.branch != DichotomyBranch::SecondBranch;
        second |= rep.branch != DichotomyBranch::FirstBranch;
    }
    CHECK(first);
    CHECK(second);
}

TEST_CASE("dichotomy never fails on valid pairs") {
    std::vector<std::pair<Number, Number>> pairs = {{sqrt2(), tau()}, {sqrt2(), sqrt3()}, {tau(), theta5()}};
    for (const auto& [a, b] : pairs) {
        auto reports = scan_dichotomy(a, b, 40);
        CHECK(!reports.empty());
        for (const auto& rep : reports) {
            bool one = refine_compare(rep.first_lhs, rep.first_rhs) != Ordering::Less;
            bool two = refine_compare(rep.second_lhs, rep.second_rhs) != Ordering::Less;
            CHECK((one || two));
        }
    }
}

TEST_CASE("interleave gap certificates") {
    auto certs = scan_interleave_gap(sqrt2(), tau(), 40);
    const GapCertificate* n3 = nullptr;
    for (const auto& c : certs) {
        CHECK(c.chain_verified);
        // d(t_{m-1}) - d(q_n) > q_n (a_{n+1} - 1) on the alpha side, mirrored on the beta side
        Expr jump = c.side == GapCertificate::Side::Alpha ? c.d_lower.expr() - c.d_upper.expr()
                                                          : c.d_upper.expr() - c.d_lower.expr();
        CHECK(refine_compare(jump, Expr(c.pivot) * Expr(Integer(c.quotient - 1))) == Ordering::Greater);
        StepDifference at = c.witness_t == c.lower_t ? c.d_lower : c.d_upper;
        CHECK(refine_compare(abs(at.expr()), Expr(Rat(c.pivot, 2))) == Ordering::Greater);
        CHECK(refine_compare(abs(at.expr()), cst::C() * Expr(c.witness_t)) == Ordering::Greater);
        if (c.side == GapCertificate::Side::Alpha && c.n == 3) n3 = &c;
    }
    REQUIRE(n3 != nullptr);
    CHECK(n3->lower_t == 8);
    CHECK(n3->upper_t == 12);
    CHECK(n3->pivot == 12);
    CHECK(n3->quotient == 2);
    CHECK(n3->witness_t == 12);
    CHECK(n3->d_upper.decimal(4) == "-16.0263");
    CHECK(render_decimal(n3->d_lower.expr() - n3->d_upper.expr(), 3) == "19.899");

    CHECK(scan_interleave_gap(tau(), theta5(), 40).empty());
    auto s3 = scan_interleave_gap(sqrt3(), tau(), 40);
    CHECK(!s3.empty());
    for (const auto& c : s3) CHECK(c.chain_verified);
}

TEST_CASE("construct_optimal for epsilon 0.06") {
    OptimalPair p = construct_optimal(Rat(3, 50));
    CHECK(p.U == 7);
    CHECK(p.V == -3);
    CHECK(p.k == 4);
    CHECK(p.w == 1);
    CHECK(p.b == Word{Integer(5)});
    CHECK(p.theta.to_string() == "[0;5,(1)]");
    CHECK(p.index_shift == 3);
    auto xs = p.x_sequence(7);
    CHECK(xs == std::vector<Integer>{7, -3, 4, 1, 5, 6, 11});
    CHECK(p.A == (cst::tau() * QuadExt(-3L) + QuadExt(7L)) / (cst::tau() + QuadExt(2L)));
    CHECK(p.A.sign() > 0);
    CHECK(render_decimal(Expr(p.A), 6) == "0.593112");
    CHECK(p.A * QuadExt(Rat(0), Rat(1), Integer(5)) == QuadExt(p.V) + QuadExt(p.U) / cst::tau());
    CHECK(p.error.hi() < Rat(3, 50));
    CHECK(to_string(p.error, 6).find("0.054218") != std::string::npos);
    CHECK(gcd(p.U, p.V) == 1);

    auto s = convergents(p.theta, 30);
    auto big = p.x_sequence(40);
    for (std::size_t n = p.w - 1; n <= p.w + 20; ++n) CHECK(s[n].q == big[n + 3]);
}

TEST_CASE("construct_optimal for epsilon 0.5 matches a direct search") {
    // independent double-precision search in the same order
    const double t = (1 + std::sqrt(5.0)) / 2, st = std::sqrt(t);
    long U = 0, V = 0;
    for (;; ++U) {
        V = std::lround(st - U / t);
        if (std::fabs(V + U / t - st) < 0.5 && std::gcd(U, V) == 1 && t * V + U > 0) break;
    }
    OptimalPair p = construct_optimal(Rat(1, 2));
    CHECK(p.U == U);
    CHECK(p.V == V);
    CHECK(p.U == 0);
    CHECK(p.V == 1);
    CHECK(p.k == 3);
    CHECK(p.theta.to_string() == "[0;2,(1)]");
    CHECK(p.index_shift == 2);
    auto s = convergents(p.theta, 25);
    auto xs = p.x_sequence(30);
    for (std::size_t n = 0; n <= 21; ++n) CHECK(s[n].q == xs[n + 2]);

    CHECK(thrown_code([] { (void)construct_optimal(Rat(0)); }) == ErrorCode::InvalidArgument);
    CHECK(thrown_code([] { (void)construct_optimal(Rat(1)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("X_n / F_n approaches A sqrt5 monotonically") {
    OptimalPair p = construct_optimal(Rat(3, 50));
    QuadExt target = p.A * QuadExt(Rat(0), Rat(1), Integer(5));
    auto xs = p.x_sequence(60);
    Integer f0 = 0, f1 = 1;
    QuadExt prev_gap;
    for (std::size_t n = 1; n < 60; ++n) {
        QuadExt gap = (QuadExt(Rat(xs[n], f1)) - target).abs();
        if (n >= 3) CHECK(gap < prev_gap);
        prev_gap = gap;
        Integer f2 = f0 + f1;
        f0 = f1;
        f1 = f2;
    }
}

TEST_CASE("verify_near_optimality") {
    OptimalPair p = construct_optimal(Rat(3, 50));
    NearOptimalityReport r = verify_near_optimality(p, Integer(1000000), Integer("1000000000000"), Rat(3, 10));
    CHECK(r.pass);
    CHECK(r.steps > 10);
    Interval c = cst::value(cst::Name::C, 64);
    CHECK(r.max_ratio.lo() > c.lo() - Rat(3, 10));
    CHECK(r.max_ratio.hi() < c.hi() + Rat(3, 10));
    CHECK(to_string(r.max_ratio, 6).find("0.550044") != std::string::npos);

    Rat tight = r.max_ratio.lo() - c.hi() - Rat(1, 100);
    REQUIRE(tight > 0);
    CHECK_FALSE(verify_near_optimality(p, Integer(1000000), Integer("1000000000000"), tight).pass);

    auto theta = make_number(p.theta);
    auto s = denominators_up_to(p.theta, Integer(10000000));
    Integer bp = s.back().q;
    NearOptimalityReport single = verify_near_optimality(p, bp, bp, Rat(3, 10));
    CHECK(single.steps == 1);
    CHECK(single.argmax_t == bp);

    CHECK(thrown_code([&] { (void)verify_near_optimality(p, Integer(2), Integer(100), Rat(1)); }) ==
          ErrorCode::PreconditionFailed);
}

TEST_CASE("binet_fib") {
    CHECK(binet_fib(10).value == 55);
    CHECK(binet_fib(2).value == 1);
    CHECK(binet_fib(1).value == 1);
    std::uint64_t a = 1, b = 1;
    for (unsigned n = 1; n <= 90; ++n) {
        BinetCheck bc = binet_fib(n);
        CHECK(bc.value == Integer(std::to_string(a)));
        CHECK(bc.enclosure.contains(Rat(bc.value)));
        CHECK(bc.enclosure.width() < 1);
        std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    CHECK(binet_fib(300).enclosure.contains(Rat(binet_fib(300).value)));
    CHECK(thrown_code([] { (void)binet_fib(0); }) == ErrorCode::InvalidArgument);
    CHECK(thrown_code([] { (void)binet_fib(301); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("certificate JSON shape") {
    RenderOptions opt;
    auto check_shape = [](const nlohmann::json& j) {
        CHECK(j.contains("kind"));
        CHECK(j.contains("indices"));
        CHECK(j.contains("verdict"));
    };
    Witness w = find_witness(sqrt2(), tau(), Integer(4), Integer(1000));
    auto jw = to_json(w, opt);
    check_shape(jw);
    CHECK(jw["t"] == "5");
    CHECK(jw["exact_values"]["inv_psi_alpha"] == "7+5√2");
    check_shape(to_json(check_dichotomy(sqrt2(), tau(), 2, 3), opt));
    check_shape(to_json(scan_interleave_gap(sqrt2(), tau(), 10).front(), opt));
    check_shape(to_json(scan_lemma_conseq(sqrt2(), tau(), 10).front(), "conseq"));
    auto jp = to_json(construct_optimal(Rat(3, 50)), opt);
    CHECK(jp["kind"] == "optimal_pair");
    auto je = to_json(Error(ErrorCode::NotFoundInRange, "x"));
    CHECK(je["error"]["code"] == "NotFoundInRange");
}
