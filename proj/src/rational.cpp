#include "irrmeasure/rational.hpp"

#include <cctype>

#include "irrmeasure/error.hpp"

namespace irrmeasure {

Integer floor(const Rat& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Integer ceil(const Rat& x) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Integer isqrt(const Integer& n) {
    if (sgn(n) < 0) throw Error(ErrorCode::NegativeArgument, "isqrt of negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Integer& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer pow2(unsigned long bits) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, bits);
    return r;
}

Integer pow10(unsigned long digits) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, digits);
    return r;
}

Rat make_rat(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

int sign(const Integer& x) { return sgn(x); }
int sign(const Rat& x) { return sgn(x); }

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rat& x) { return x.get_str(); }

namespace {

bool all_digits(const std::string& s, std::size_t from) {
    if (from >= s.size()) return false;
    for (std::size_t i = from; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Integer parse_integer(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (!all_digits(text, start)) throw Error(ErrorCode::ParseError, "not an integer: '" + text + "'");
    return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

Rat parse_rat(const std::string& text) {
    if (auto slash = text.find('/'); slash != std::string::npos) {
        return make_rat(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string whole = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        if (!frac.empty() && !all_digits(frac, 0)) throw Error(ErrorCode::ParseError, "bad decimal: '" + text + "'");
        bool negative = !whole.empty() && whole[0] == '-';
        if (whole.empty() || whole == "-" || whole == "+") whole += "0";
        Integer w = parse_integer(whole);
        Rat f = frac.empty() ? Rat(0) : make_rat(Integer(frac, 10), pow10(frac.size()));
        return negative ? Rat(Rat(w) - f) : Rat(Rat(w) + f);
    }
    return Rat(parse_integer(text));
}

}  // namespace irrmeasure
