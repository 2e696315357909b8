#include "irrmeasure/contfrac.hpp"

#include <map>
#include <utility>

#include "irrmeasure/error.hpp"

namespace irrmeasure {

std::optional<Integer> CFExpansion::quotient(std::size_t j) const {
    if (j == 0) return a0;
    if (j - 1 < preperiod.size()) return preperiod[j - 1];
    if (period.empty()) return std::nullopt;
    return period[(j - 1 - preperiod.size()) % period.size()];
}

std::string CFExpansion::to_string() const {
    std::string out = "[" + a0.get_str();
    if (preperiod.empty() && period.empty()) return out + "]";
    out += ";";
    for (std::size_t i = 0; i < preperiod.size(); ++i) {
        if (i > 0) out += ",";
        out += preperiod[i].get_str();
    }
    if (!period.empty()) {
        if (!preperiod.empty()) out += ",";
        out += "(";
        for (std::size_t i = 0; i < period.size(); ++i) {
            if (i > 0) out += ",";
            out += period[i].get_str();
        }
        out += ")";
    }
    return out + "]";
}

void CFExpansion::validate() const {
    for (const auto& a : preperiod) {
        if (a < 1) throw Error(ErrorCode::InvalidArgument, "partial quotient < 1 in " + to_string());
    }
    for (const auto& a : period) {
        if (a < 1) throw Error(ErrorCode::InvalidArgument, "partial quotient < 1 in " + to_string());
    }
}

namespace {

// floor((P + sqrt(d)) / Q) for non-square d, via s = isqrt(d).
Integer surd_floor(const Integer& p, const Integer& q, const Integer& s) {
    Integer num = sgn(q) > 0 ? Integer(p + s) : Integer(p + s + 1);
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
    return out;
}

}  // namespace

CFExpansion expand_quadratic(const QuadExt& x) {
    if (x.is_rational()) throw Error(ErrorCode::RationalInput, "expand_quadratic needs an irrational input");

    // x = (A + B sqrt D) / E with integers, then as (P + sqrt d) / Q.
    Integer e;
    mpz_lcm(e.get_mpz_t(), x.a().get_den_mpz_t(), x.b().get_den_mpz_t());
    Integer a = x.a().get_num() * (e / x.a().get_den());
    Integer b = x.b().get_num() * (e / x.b().get_den());
    Integer d = b * b * x.radicand();
    Integer p = sgn(b) > 0 ? a : Integer(-a);
    Integer q = sgn(b) > 0 ? e : Integer(-e);
    Integer rem = d - p * p;
    if (mpz_divisible_p(rem.get_mpz_t(), q.get_mpz_t()) == 0) {
        Integer aq = abs(q);
        p *= aq;
        d *= q * q;
        q *= aq;
    }
    const Integer s = isqrt(d);

    CFExpansion cf;
    std::vector<Integer> quotients;
    std::map<std::pair<Integer, Integer>, std::size_t> seen;
    for (std::size_t j = 0;; ++j) {
        if (j >= 1) {
            auto [it, inserted] = seen.emplace(std::make_pair(p, q), j);
            if (!inserted) {
                std::size_t start = it->second;
                cf.a0 = quotients[0];
                cf.preperiod.assign(quotients.begin() + 1, quotients.begin() + static_cast<std::ptrdiff_t>(start));
                cf.period.assign(quotients.begin() + static_cast<std::ptrdiff_t>(start), quotients.end());
                cf.radicand_hint = x.radicand();
                return cf;
            }
        }
        Integer aj = surd_floor(p, q, s);
        quotients.push_back(aj);
        p = aj * q - p;
        q = (d - p * p) / q;
    }
}

CFExpansion rational_to_cf(const Integer& num, const Integer& den) {
    if (sgn(den) <= 0) throw Error(ErrorCode::InvalidArgument, "rational_to_cf needs den >= 1");
    CFExpansion cf;
    Integer n = num, m = den;
    bool first = true;
    while (sgn(m) != 0) {
        Integer qt, r;
        mpz_fdiv_qr(qt.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
        if (first) {
            cf.a0 = qt;
            first = false;
        } else {
            cf.preperiod.push_back(qt);
        }
        n = m;
        m = r;
    }
    return cf;
}

namespace {

// y = [c_1; c_2, ..., c_m, y] solved as the positive root of
// k y^2 + (k' - h) y - h' = 0 with h/k, h'/k' the last two convergents.
QuadExt purely_periodic_value(const std::vector<Integer>& word, const Integer& radicand_hint) {
    Integer h = 1, hp = 0, k = 0, kp = 1;  // h_{-1}, h_{-2}, k_{-1}, k_{-2}
    for (const auto& c : word) {
        Integer hn = c * h + hp;
        Integer kn = c * k + kp;
        hp = h;
        kp = k;
        h = hn;
        k = kn;
    }
    Integer lin = h - kp;
    Integer disc = lin * lin + 4 * k * hp;
    if (sgn(radicand_hint) > 0 && mpz_divisible_p(disc.get_mpz_t(), radicand_hint.get_mpz_t()) != 0) {
        Integer cofactor = disc / radicand_hint;
        if (is_perfect_square(cofactor)) return QuadExt(make_rat(lin, 2 * k), make_rat(isqrt(cofactor), 2 * k), radicand_hint);
    }
    return QuadExt(make_rat(lin, 2 * k), make_rat(1, 2 * k), disc);
}

}  // namespace

QuadExt tail(const CFExpansion& cf, std::size_t r) {
    if (cf.is_rational()) throw Error(ErrorCode::RationalInput, "tail of a finite expansion");
    const std::size_t pre = cf.preperiod.size();
    const std::size_t m = cf.period.size();
    if (r >= 1 && r - 1 >= pre) {
        std::size_t shift = (r - 1 - pre) % m;
        std::vector<Integer> rotated(cf.period.begin() + static_cast<std::ptrdiff_t>(shift), cf.period.end());
        rotated.insert(rotated.end(), cf.period.begin(), cf.period.begin() + static_cast<std::ptrdiff_t>(shift));
        return purely_periodic_value(rotated, cf.radicand_hint);
    }
    QuadExt y = purely_periodic_value(cf.period, cf.radicand_hint);
    for (std::size_t j = pre; j >= std::max<std::size_t>(r, 1); --j) {
        y = QuadExt(cf.preperiod[j - 1]) + y.reciprocal();
    }
    if (r == 0) y = QuadExt(cf.a0) + y.reciprocal();
    return y;
}

QuadExt value(const CFExpansion& cf) {
    if (!cf.is_rational()) return tail(cf, 0);
    Rat y = cf.preperiod.empty() ? Rat(cf.a0) : Rat(cf.preperiod.back());
    for (std::size_t j = cf.preperiod.size(); j-- > 0;) {
        const Integer& a = j == 0 ? cf.a0 : cf.preperiod[j - 1];
        y = Rat(a) + 1 / y;
    }
    return QuadExt(y);
}

ConvergentStream::ConvergentStream(const CFExpansion& cf) : cf_(cf) {
    previous_ = Convergent{0, 1, 0};
    current_ = Convergent{0, cf_.a0, 1};
}

bool ConvergentStream::next() {
    auto a = cf_.quotient(current_.index + 1);
    if (!a) return false;
    Convergent next{current_.index + 1, *a * current_.p + previous_.p, *a * current_.q + previous_.q};
    previous_ = std::move(current_);
    current_ = std::move(next);
    return true;
}

std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t n) {
    std::vector<Convergent> out;
    ConvergentStream stream(cf);
    out.push_back(stream.current());
    while (out.size() <= n && stream.next()) out.push_back(stream.current());
    return out;
}

std::vector<Convergent> denominators_up_to(const CFExpansion& cf, const Integer& bound) {
    if (bound < 1) throw Error(ErrorCode::InvalidArgument, "denominators_up_to needs bound >= 1");
    std::vector<Convergent> out;
    ConvergentStream stream(cf);
    out.push_back(stream.current());
    while (stream.next() && stream.current().q <= bound) out.push_back(stream.current());
    return out;
}

Integer continuant(const Word& w) {
    Integer prev = 0, cur = 1;
    for (const auto& a : w) {
        Integer next = a * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool is_nonintegral_sum_and_diff(const QuadExt& x, const QuadExt& y) {
    if (!same_field(x, y)) return true;
    return !(x + y).is_integer() && !(x - y).is_integer();
}

}  // namespace irrmeasure
