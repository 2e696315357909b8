#include "irrmeasure/interval.hpp"

#include <algorithm>
#include <array>

#include "irrmeasure/error.hpp"

namespace irrmeasure {

Interval::Interval(Rat lo, Rat hi, unsigned long precision_bits)
    : lo_(std::move(lo)), hi_(std::move(hi)), precision_bits_(precision_bits) {
    if (lo_ > hi_) throw Error(ErrorCode::InvalidArgument, "interval with lo > hi");
}

namespace {

Rat scaled_floor(const Rat& x, unsigned long bits) {
    Integer scale = pow2(bits);
    Integer num = x.get_num() * scale;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
    return make_rat(q, scale);
}

Rat scaled_ceil(const Rat& x, unsigned long bits) {
    Integer scale = pow2(bits);
    Integer num = x.get_num() * scale;
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
    return make_rat(q, scale);
}

bool is_square_rat(const Rat& r) { return is_perfect_square(r.get_num()) && is_perfect_square(r.get_den()); }

}  // namespace

Interval Interval::rounded_outward(unsigned long bits) const {
    // Integer endpoints are already on every grid.
    auto lo = lo_.get_den() == 1 ? lo_ : scaled_floor(lo_, bits);
    auto hi = hi_.get_den() == 1 ? hi_ : scaled_ceil(hi_, bits);
    return Interval(lo, hi, bits);
}

Interval Interval::intersect(const Interval& other) const {
    if (!overlaps(other)) throw Error(ErrorCode::InvalidArgument, "disjoint intervals");
    return Interval(std::max(lo_, other.lo_), std::min(hi_, other.hi_),
                    std::max(precision_bits_, other.precision_bits_));
}

Interval operator+(const Interval& x, const Interval& y) {
    return Interval(x.lo_ + y.lo_, x.hi_ + y.hi_, std::min(x.precision_bits_, y.precision_bits_));
}

Interval operator-(const Interval& x, const Interval& y) {
    return Interval(x.lo_ - y.hi_, x.hi_ - y.lo_, std::min(x.precision_bits_, y.precision_bits_));
}

Interval operator-(const Interval& x) { return Interval(-x.hi_, -x.lo_, x.precision_bits_); }

Interval operator*(const Interval& x, const Interval& y) {
    std::array<Rat, 4> p = {x.lo_ * y.lo_, x.lo_ * y.hi_, x.hi_ * y.lo_, x.hi_ * y.hi_};
    auto [mn, mx] = std::minmax_element(p.begin(), p.end());
    return Interval(*mn, *mx, std::min(x.precision_bits_, y.precision_bits_));
}

Interval operator/(const Interval& x, const Interval& y) {
    if (y.contains_zero()) throw Error(ErrorCode::DivisionByZero, "divisor interval contains zero");
    Interval inv(1 / y.hi_, 1 / y.lo_, y.precision_bits_);
    return x * inv;
}

Interval abs(const Interval& x) {
    if (sgn(x.lo()) >= 0) return x;
    if (sgn(x.hi()) <= 0) return -x;
    return Interval(Rat(0), std::max(Rat(-x.lo()), x.hi()), x.precision_bits());
}

Interval pow(const Interval& x, unsigned exponent) {
    // square-and-multiply; intermediate results rounded outward with guard bits
    const unsigned long guard = x.precision_bits() + 32;
    Interval result = Interval::point(Rat(1), x.precision_bits());
    Interval base = x;
    for (unsigned e = exponent; e != 0; e >>= 1) {
        if (e & 1U) result = (result * base).rounded_outward(guard);
        if (e > 1) base = (base * base).rounded_outward(guard);
    }
    if (exponent % 2 == 0 && exponent > 0 && x.contains_zero()) {
        result = Interval(Rat(0), result.hi(), result.precision_bits());
    }
    return result;
}

Rat sqrt_lower(const Rat& r, unsigned long bits) {
    if (sgn(r) < 0) throw Error(ErrorCode::NegativeArgument, "sqrt of negative value");
    if (is_square_rat(r)) return make_rat(isqrt(r.get_num()), isqrt(r.get_den()));
    // sqrt(N/M) = sqrt(N M) / M
    Integer nm = r.get_num() * r.get_den();
    Integer scaled = isqrt(Integer(nm * pow2(2 * bits)));
    return make_rat(scaled, r.get_den() * pow2(bits));
}

Rat sqrt_upper(const Rat& r, unsigned long bits) {
    if (sgn(r) < 0) throw Error(ErrorCode::NegativeArgument, "sqrt of negative value");
    if (is_square_rat(r)) return make_rat(isqrt(r.get_num()), isqrt(r.get_den()));
    Integer nm = r.get_num() * r.get_den();
    Integer scaled = isqrt(Integer(nm * pow2(2 * bits))) + 1;
    return make_rat(scaled, r.get_den() * pow2(bits));
}

Interval sqrt_interval(const Interval& x) {
    if (sgn(x.lo()) < 0) throw Error(ErrorCode::NegativeArgument, "sqrt_interval with negative lower end");
    unsigned long bits = x.precision_bits() + 2;
    return Interval(sqrt_lower(x.lo(), bits), sqrt_upper(x.hi(), bits), x.precision_bits());
}

namespace {

std::string decimal(const Rat& x, unsigned digits, bool round_up) {
    Integer scale = pow10(digits);
    Rat scaled = x * Rat(scale);
    Integer n = round_up ? ceil(scaled) : floor(scaled);
    bool negative = sgn(n) < 0;
    Integer mag = abs(n);
    std::string s = mag.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    return negative ? "-" + s : s;
}

}  // namespace

std::string to_string(const Interval& x, unsigned digits) {
    return "[" + decimal(x.lo(), digits, false) + ", " + decimal(x.hi(), digits, true) + "]";
}

}  // namespace irrmeasure
