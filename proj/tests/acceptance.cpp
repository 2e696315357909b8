// Acceptance run: one PASS/FAIL line per criterion. `acceptance N` runs only
// criterion N; without arguments all eight run. Exit status is nonzero when
// any criterion that ran failed.

#include "oracle/mpfr_oracle.hpp"

#include <irrmeasure/contfrac.hpp>
#include <irrmeasure/error.hpp>
#include <irrmeasure/expr.hpp>
#include <irrmeasure/imf.hpp>
#include <irrmeasure/number_spec.hpp>
#include <irrmeasure/theorems.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace irrmeasure;
namespace cst = irrmeasure::constants;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

Number num(const char* spec) { return parse_number(spec); }

std::string join(const std::vector<Integer>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].get_str();
    return s + "}";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome ac1() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    std::string c = render_decimal(cst::C(), 10), k = render_decimal(cst::K(), 10),
                c21 = render_decimal(Expr(2) * cst::C() + Expr(1), 10);
    o.require(c.rfind("0.47818", 0) == 0, "C = " + c);
    o.require(k.rfind("0.2720", 0) == 0, "K = " + k);
    o.require(c21.rfind("1.95636", 0) == 0, "2C+1 = " + c21);
    o.require(seconds_since(t0) < 1.0, "runtime >= 1 s");
    o.detail = o.pass ? "C=" + c + " K=" + k + " 2C+1=" + c21 : o.detail;
    return o;
}

Outcome ac2() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    const Rat tol = Rat(1, pow2(180));
    std::size_t checked = 0;
    for (const char* spec : {"surd:(0+sqrt(2))/1", "surd:(0+sqrt(3))/1", "tau", "surd:(9+sqrt(2))/7", "cf:[0;5,(1)]"}) {
        Number x = num(spec);
        auto brute = oracle::brute_force_psi(x.value.a(), x.value.b(), x.value.radicand(), 5000, 200);
        for (unsigned long t = 1; t <= 5000; ++t) {
            PsiValue v = psi(x.cf, Integer(t));
            Rat mid = v.value.to_interval(220).midpoint();
            bool same_q = v.q == brute[t - 1].argmin_q;
            bool close = abs(mid - brute[t - 1].value) < tol;
            if (!same_q || !close) {
                o.require(false, std::string(spec) + " disagrees at t=" + std::to_string(t));
                break;
            }
            ++checked;
        }
    }
    o.require(seconds_since(t0) < 60.0, "runtime >= 60 s");
    if (o.pass) o.detail = std::to_string(checked) + " (number, t) pairs agree";
    return o;
}

Outcome ac3() {
    Outcome o;
    std::ostringstream found;
    std::vector<std::pair<const char*, const char*>> pairs = {
        {"surd:(0+sqrt(2))/1", "tau"}, {"surd:(0+sqrt(2))/1", "surd:(0+sqrt(3))/1"}, {"tau", "cf:[0;5,(1)]"}};
    for (const auto& [as, bs] : pairs) {
        auto t0 = std::chrono::steady_clock::now();
        Number a = num(as), b = num(bs);
        for (const char* T : {"10", "1000", "1000000"}) {
            try {
                Witness w = find_witness(a, b, Integer(T), Integer("1000000000000"));
                o.require(w.t >= Integer(T), "witness below T");
                o.require(reverify(w) == Ordering::Greater, "reverify failed at t=" + w.t.get_str());
                found << " T=" << T << "->" << w.t.get_str();
            } catch (const Error& e) {
                o.require(false, std::string(as) + "," + bs + " T=" + T + ": " + e.what());
            }
        }
        o.require(seconds_since(t0) < 10.0, "pair runtime >= 10 s");
    }
    Witness w4 = find_witness(num("surd:(0+sqrt(2))/1"), num("tau"), Integer(4), Integer("1000000000000"));
    o.require(w4.t == 5, "(sqrt2,tau) T=4 gave t=" + w4.t.get_str());
    if (o.pass) o.detail = "witnesses:" + found.str();
    return o;
}

Outcome ac4() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    Number r2 = num("surd:(0+sqrt(2))/1");
    auto flips = sign_changes(breakpoint_profile(r2, num("tau"), Integer(1), Integer(13)));
    std::vector<Integer> expected = {Integer(2), Integer(3), Integer(5)};
    o.require(flips == expected, "(sqrt2,tau) on [1,13] flips at " + join(flips) + ", expected exactly {2,3,5}");
    auto many = sign_changes(breakpoint_profile(r2, num("surd:(0+sqrt(3))/1"), Integer(1), Integer(1000000)));
    o.require(many.size() >= 10, "(sqrt2,sqrt3) on [1,1e6] has only " + std::to_string(many.size()) + " flips");
    o.require(seconds_since(t0) < 5.0, "runtime >= 5 s");
    if (o.pass) o.detail = "flips " + join(flips) + "; " + std::to_string(many.size()) + " flips up to 1e6";
    return o;
}

Outcome ac5() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(424242);
    auto range = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    auto random_number = [&] {
        for (;;) {
            long d = range(2, 500);
            if (is_perfect_square(Integer(d))) continue;
            long q = range(1, 40) * (range(0, 1) ? 1 : -1);
            return make_number(QuadExt(make_rat(Integer(range(-80, 80)), Integer(q)), Rat(1) / Rat(q), Integer(d)));
        }
    };
    auto random_word = [&](long max_len) {
        Word w(static_cast<std::size_t>(range(1, max_len)));
        for (auto& x : w) x = range(1, 12);
        return w;
    };
    int failures[6] = {0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 1000; ++i) {
        Number x = random_number();
        std::size_t n = static_cast<std::size_t>(range(1, 40));
        auto cs = convergents(x.cf, n + 2);
        // determinant identity
        Integer det = cs[n].p * cs[n - 1].q - cs[n - 1].p * cs[n].q;
        if (det != (n % 2 == 1 ? 1 : -1)) ++failures[0];
        // continuant reversal
        Word w = random_word(30);
        if (continuant(w) != continuant(Word(w.rbegin(), w.rend()))) ++failures[1];
        // concatenation identity
        Word a = random_word(15), b = random_word(15);
        Word ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        if (continuant(ab) != continuant(a) * continuant(b) +
                                  continuant(Word(a.begin(), a.end() - 1)) * continuant(Word(b.begin() + 1, b.end())))
            ++failures[2];
        // both closed forms of 1/psi at a random t
        Integer t = cs[n].q + range(0, 5);
        try {
            PsiValue v = psi(x.cf, t);
            auto cv = convergents(x.cf, v.index + 1);
            Integer q_prev = v.index == 0 ? Integer(0) : cv[v.index - 1].q;
            QuadExt first = QuadExt(cv[v.index].q) * tail(x.cf, v.index + 1) + QuadExt(q_prev);
            QuadExt second = QuadExt(cv[v.index + 1].q) + QuadExt(cv[v.index].q) / tail(x.cf, v.index + 2);
            if (first != second || inv_psi(x.cf, t) != first || v.value * first != QuadExt(1L)) ++failures[3];
        } catch (const Error&) {
            ++failures[3];
        }
        // integer shift: q_n x - (-1)^n / (q_n x_{n+1} + q_{n-1}) is an integer
        QuadExt inv = QuadExt(cs[n].q) * tail(x.cf, n + 1) + QuadExt(cs[n - 1].q);
        QuadExt shifted = QuadExt(cs[n].q) * x.value - QuadExt(n % 2 == 0 ? 1L : -1L) / inv;
        if (!shifted.is_integer() || convergent_error(x.cf, n) * inv != QuadExt(1L)) ++failures[4];
        // tail ratio
        if (convergent_error(x.cf, n - 1) / convergent_error(x.cf, n) != tail(x.cf, n + 1)) ++failures[5];
    }
    const char* names[6] = {"determinant", "reversal", "concatenation", "closed forms", "integer shift", "tail ratio"};
    for (int k = 0; k < 6; ++k)
        o.require(failures[k] == 0, std::string(names[k]) + ": " + std::to_string(failures[k]) + " failures");
    o.require(seconds_since(t0) < 30.0, "runtime >= 30 s");
    if (o.pass) o.detail = "6 identities x 1000 cases, 0 failures";
    return o;
}

Outcome ac6() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<const char*, const char*>> pairs = {
        {"surd:(0+sqrt(2))/1", "tau"}, {"surd:(0+sqrt(2))/1", "surd:(0+sqrt(3))/1"}, {"tau", "cf:[0;5,(1)]"}};
    std::size_t reports = 0, certs = 0;
    bool saw_n3 = false;
    for (const auto& [as, bs] : pairs) {
        Number a = num(as), b = num(bs);
        try {
            reports += scan_dichotomy(a, b, 60).size();
            for (const auto& c : scan_interleave_gap(a, b, 60)) {
                ++certs;
                o.require(c.chain_verified, "unverified certificate");
                if (std::string(as) == "surd:(0+sqrt(2))/1" && std::string(bs) == "tau" &&
                    c.side == GapCertificate::Side::Alpha && c.n == 3) {
                    saw_n3 = c.witness_t == 12 && c.d_upper.decimal(4) == "-16.0263" &&
                             refine_compare(abs(c.d_upper.expr()), Expr(6)) == Ordering::Greater;
                }
            }
        } catch (const Error& e) {
            o.require(false, std::string(as) + "," + bs + ": " + e.what());
        }
    }
    o.require(saw_n3, "(sqrt2,tau) n=3 certificate with |d(12)| = 16.0263 > 6 missing");
    o.require(seconds_since(t0) < 30.0, "runtime >= 30 s");
    if (o.pass)
        o.detail = std::to_string(reports) + " dichotomy reports, " + std::to_string(certs) + " gap certificates verified";
    return o;
}

Outcome ac7() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    Rat eps(3, 50);
    OptimalPair p = construct_optimal(eps);
    o.require(p.U == 7 && p.V == -3, "(U,V) = (" + p.U.get_str() + "," + p.V.get_str() + ")");
    o.require(p.theta.to_string() == "[0;5,(1)]", "theta = " + p.theta.to_string());
    o.require(p.index_shift == 3, "index shift " + std::to_string(p.index_shift));
    auto s = convergents(p.theta, 30);
    auto xs = p.x_sequence(40);
    for (std::size_t n = 0; n < 20; ++n) o.require(s[n].q == xs[n + 3], "s_" + std::to_string(n) + " != X_{n+3}");
    NearOptimalityReport r = verify_near_optimality(p, Integer(1000000), Integer("1000000000000"), 5 * eps);
    Interval c = cst::value(cst::Name::C, 64);
    o.require(r.max_ratio.lo() >= c.lo() - Rat(3, 10) && r.max_ratio.hi() <= c.hi() + Rat(3, 10),
              "max ratio outside [C-0.3, C+0.3]");
    o.require(r.pass, "verify_near_optimality failed at slack 5 eps");
    o.require(seconds_since(t0) < 20.0, "runtime >= 20 s");
    if (o.pass) o.detail = "max |d|/t = " + render_decimal(Expr(r.max_ratio.midpoint()), 9) + " at t=" + r.argmax_t.get_str();
    return o;
}

Outcome ac8() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    Integer a = 1, b = 1;
    for (unsigned n = 1; n <= 90; ++n) {
        BinetCheck bc = binet_fib(n);
        bool ok = bc.value == a && bc.enclosure.contains(Rat(a)) && bc.enclosure.width() < 1 &&
                  ceil(bc.enclosure.lo()) == floor(bc.enclosure.hi());
        o.require(ok, "n=" + std::to_string(n));
        Integer c = a + b;
        a = b;
        b = c;
    }
    o.require(seconds_since(t0) < 1.0, "runtime >= 1 s");
    if (o.pass) o.detail = "F_1..F_90 inside their Binet enclosures";
    return o;
}

const char* kTitles[8] = {
    "constants C, K, 2C+1",
    "CF psi equals 200-bit brute force for t <= 5000",
    "witnesses for T in {10, 1e3, 1e6}",
    "sign changes of d",
    "identity suite, 1000 cases each",
    "dichotomy and interleave-gap checkers",
    "optimal pair for epsilon = 0.06",
    "Binet enclosures of F_n, n <= 90",
};

}  // namespace

int main(int argc, char** argv) {
    std::function<Outcome()> criteria[8] = {ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8};
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    if (argc > 1 && (only < 1 || only > 8)) {
        std::fprintf(stderr, "usage: acceptance [1-8]\n");
        return 64;
    }
    int failed = 0;
    for (int i = 1; i <= 8; ++i) {
        if (only != 0 && i != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i - 1]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("AC%d %s  %s (%.3f s)  %s\n", i, o.pass ? "PASS" : "FAIL", kTitles[i - 1], seconds_since(t0),
                    o.detail.c_str());
        if (!o.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
