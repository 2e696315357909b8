#include "irrmeasure/quad_ext.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "irrmeasure/error.hpp"
#include "irrmeasure/interval.hpp"

namespace irrmeasure {

namespace {

constexpr unsigned long kTrialBound = 100000;

// Pollard-Brent; n odd composite with no factor below kTrialBound.
Integer pollard_factor(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1, q = 1, ys;
        auto f = [&](const Integer& v) {
            Integer r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        unsigned long r = 1;
        const unsigned long batch = 64;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            for (unsigned long k = 0; k < r && d == 1; k += batch) {
                ys = y;
                for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
                    y = f(y);
                    Integer diff = x - y;
                    q = q * abs(diff) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        } while (d == 1);
        if (d == n) {
            do {
                ys = f(ys);
                Integer diff = x - ys;
                diff = abs(diff);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void collect_large_primes(const Integer& n, std::vector<Integer>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        out.push_back(n);
        return;
    }
    if (is_perfect_square(n)) {
        Integer r = isqrt(n);
        collect_large_primes(r, out);
        collect_large_primes(r, out);
        return;
    }
    Integer d = pollard_factor(n);
    collect_large_primes(d, out);
    collect_large_primes(Integer(n / d), out);
}

SquarefreeSplit compute_split(const Integer& radicand) {
    Integer n = radicand;
    Integer square = 1, core = 1;
    for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > n) break;
        unsigned exponent = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++exponent;
        }
        for (unsigned i = 0; i + 1 < exponent; i += 2) square *= p;
        if (exponent % 2 == 1) core *= p;
    }
    if (n > 1) {
        std::vector<Integer> primes;
        collect_large_primes(n, primes);
        std::map<Integer, unsigned> counts;
        for (const auto& p : primes) ++counts[p];
        for (const auto& [p, e] : counts) {
            for (unsigned i = 0; i + 1 < e; i += 2) square *= p;
            if (e % 2 == 1) core *= p;
        }
    }
    return {square, core};
}

}  // namespace

SquarefreeSplit squarefree_split(const Integer& radicand) {
    if (sgn(radicand) <= 0) throw Error(ErrorCode::InvalidArgument, "radicand must be positive");
    static std::mutex mutex;
    static std::map<Integer, SquarefreeSplit> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(radicand); it != cache.end()) return it->second;
    }
    SquarefreeSplit split = compute_split(radicand);
    std::lock_guard lock(mutex);
    cache.emplace(radicand, split);
    return split;
}

QuadExt::QuadExt(const Rat& a, const Rat& b, const Integer& radicand) : a_(a), b_(b), d_(1) {
    a_.canonicalize();
    b_.canonicalize();
    if (sgn(b_) == 0) return;
    SquarefreeSplit split = squarefree_split(radicand);
    b_ *= Rat(split.square);
    if (split.core == 1) {
        a_ += b_;
        b_ = 0;
    } else {
        d_ = split.core;
    }
}

bool same_field(const QuadExt& x, const QuadExt& y) {
    return x.is_rational() || y.is_rational() || x.radicand() == y.radicand();
}

namespace {

const Integer& common_radicand(const QuadExt& x, const QuadExt& y) {
    if (!same_field(x, y)) {
        throw Error(ErrorCode::MixedField, "operands lie in Q(sqrt " + x.radicand().get_str() + ") and Q(sqrt " +
                                               y.radicand().get_str() + ")");
    }
    return x.is_rational() ? y.radicand() : x.radicand();
}

}  // namespace

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    const Integer& d = common_radicand(x, y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d, QuadExt::Normalized{});
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    const Integer& d = common_radicand(x, y);
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d, QuadExt::Normalized{});
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    const Integer& d = common_radicand(x, y);
    Rat a = x.a_ * y.a_ + x.b_ * y.b_ * Rat(d);
    Rat b = x.a_ * y.b_ + x.b_ * y.a_;
    return QuadExt(std::move(a), std::move(b), d, QuadExt::Normalized{});
}

QuadExt QuadExt::reciprocal() const {
    if (sign() == 0) throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
    Rat n = norm();
    return QuadExt(a_ / n, -b_ / n, d_, Normalized{});
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    common_radicand(x, y);
    return x * y.reciprocal();
}

int QuadExt::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: the larger of a^2 and b^2 D wins (never equal, D non-square).
    return a_ * a_ > b_ * b_ * Rat(d_) ? sa : sb;
}

bool operator==(const QuadExt& x, const QuadExt& y) { return (x - y).sign() == 0; }

std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
    int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Interval QuadExt::to_interval(unsigned long precision_bits) const {
    if (is_rational()) return Interval::point(a_, precision_bits);
    // b*sqrt(D) = sign(b) * sqrt(b^2 D)
    Rat square = b_ * b_ * Rat(d_);
    Rat lo = sqrt_lower(square, precision_bits);
    Rat hi = sqrt_upper(square, precision_bits);
    if (sgn(b_) < 0) {
        std::swap(lo, hi);
        lo = -lo;
        hi = -hi;
    }
    return Interval(a_ + lo, a_ + hi, precision_bits);
}

Integer QuadExt::floor() const {
    if (is_rational()) return irrmeasure::floor(a_);
    for (unsigned long bits = 16;; bits *= 2) {
        Interval iv = to_interval(bits);
        Integer lo = irrmeasure::floor(iv.lo());
        if (lo == irrmeasure::floor(iv.hi())) {
            // Confirm lo <= x < lo + 1 inside the field.
            if ((*this - QuadExt(lo)).sign() >= 0 && (*this - QuadExt(Integer(lo + 1))).sign() < 0) return lo;
            throw Error(ErrorCode::FormMismatch, "floor enclosure disagrees with exact sign test");
        }
    }
}

std::string QuadExt::to_string() const {
    std::string out = a_.get_str();
    if (is_rational()) return out;
    Rat mag = irrmeasure::sign(b_) < 0 ? Rat(-b_) : b_;
    out += irrmeasure::sign(b_) < 0 ? "-" : "+";
    out += mag.get_str();
    out += "√";
    out += d_.get_str();
    return out;
}

}  // namespace irrmeasure
