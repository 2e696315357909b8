#include "irrmeasure/expr.hpp"

#include <algorithm>

#include "irrmeasure/error.hpp"

namespace irrmeasure {

struct Expr::Node {
    enum class Kind { Leaf, Add, Sub, Mul, Div, Neg, Abs, Sqrt, Pow };

    Kind kind = Kind::Leaf;
    QuadExt leaf;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    unsigned exponent = 0;
};

namespace {

using Kind = Expr::Node::Kind;

// Extra bits carried by every intermediate result.
constexpr unsigned long kGuardBits = 8;

}  // namespace

Expr::Expr() : Expr(QuadExt()) {}

Expr::Expr(const QuadExt& value) {
    auto node = std::make_shared<Node>();
    node->leaf = value;
    node_ = std::move(node);
}

Expr::Expr(const Rat& value) : Expr(QuadExt(value)) {}
Expr::Expr(long value) : Expr(QuadExt(value)) {}
Expr::Expr(const Integer& value) : Expr(QuadExt(value)) {}

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make_node(Kind kind, NodePtr lhs, NodePtr rhs = nullptr, unsigned exponent = 0) {
    auto node = std::make_shared<Expr::Node>();
    node->kind = kind;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    node->exponent = exponent;
    return node;
}

std::optional<QuadExt> exact_value(const Expr::Node& n);
std::optional<Interval> evaluate_node(const Expr::Node& n, unsigned long bits);

}  // namespace

Expr operator+(const Expr& x, const Expr& y) { return Expr(make_node(Kind::Add, x.node_, y.node_)); }
Expr operator-(const Expr& x, const Expr& y) { return Expr(make_node(Kind::Sub, x.node_, y.node_)); }
Expr operator*(const Expr& x, const Expr& y) { return Expr(make_node(Kind::Mul, x.node_, y.node_)); }
Expr operator/(const Expr& x, const Expr& y) { return Expr(make_node(Kind::Div, x.node_, y.node_)); }
Expr operator-(const Expr& x) { return Expr(make_node(Kind::Neg, x.node_)); }
Expr abs(const Expr& x) { return Expr(make_node(Kind::Abs, x.node_)); }
Expr sqrt(const Expr& x) { return Expr(make_node(Kind::Sqrt, x.node_)); }
Expr pow(const Expr& x, unsigned exponent) { return Expr(make_node(Kind::Pow, x.node_, nullptr, exponent)); }

std::optional<QuadExt> Expr::try_exact() const { return exact_value(*node_); }
std::optional<Interval> Expr::evaluate(unsigned long bits) const { return evaluate_node(*node_, bits); }

namespace {

std::optional<QuadExt> exact_value(const Expr::Node& n) {
    if (n.kind == Kind::Leaf) return n.leaf;
    auto x = exact_value(*n.lhs);
    if (!x) return std::nullopt;
    switch (n.kind) {
        case Kind::Neg: return -*x;
        case Kind::Abs: return x->abs();
        case Kind::Pow: {
            QuadExt r(1L);
            for (unsigned i = 0; i < n.exponent; ++i) r *= *x;
            return r;
        }
        case Kind::Sqrt: {
            if (!x->is_rational() || sgn(x->a()) < 0) return std::nullopt;
            const Rat& a = x->a();
            if (!is_perfect_square(a.get_num()) || !is_perfect_square(a.get_den())) return std::nullopt;
            return QuadExt(make_rat(isqrt(a.get_num()), isqrt(a.get_den())));
        }
        default: break;
    }
    auto y = exact_value(*n.rhs);
    if (!y || !same_field(*x, *y)) return std::nullopt;
    switch (n.kind) {
        case Kind::Add: return *x + *y;
        case Kind::Sub: return *x - *y;
        case Kind::Mul: return *x * *y;
        case Kind::Div:
            if (y->sign() == 0) return std::nullopt;
            return *x / *y;
        default: return std::nullopt;
    }
}

std::optional<Interval> evaluate_node(const Expr::Node& n, unsigned long bits) {
    const unsigned long working = bits + kGuardBits;
    if (n.kind == Kind::Leaf) return n.leaf.to_interval(working);

    auto x = evaluate_node(*n.lhs, bits);
    if (!x) return std::nullopt;
    switch (n.kind) {
        case Kind::Neg: return -*x;
        case Kind::Abs: return abs(*x);
        case Kind::Pow: return pow(*x, n.exponent).rounded_outward(working);
        case Kind::Sqrt: {
            if (sgn(x->hi()) < 0) throw Error(ErrorCode::NegativeArgument, "sqrt of a negative expression");
            // The argument of a real sqrt is nonnegative; drop the part of the
            // enclosure below zero.
            Interval clamped(std::max(x->lo(), Rat(0)), x->hi(), x->precision_bits());
            return sqrt_interval(clamped).rounded_outward(working);
        }
        default: break;
    }
    auto y = evaluate_node(*n.rhs, bits);
    if (!y) return std::nullopt;
    switch (n.kind) {
        case Kind::Add: return (*x + *y).rounded_outward(working);
        case Kind::Sub: return (*x - *y).rounded_outward(working);
        case Kind::Mul: return (*x * *y).rounded_outward(working);
        case Kind::Div:
            if (y->contains_zero()) return std::nullopt;
            return (*x / *y).rounded_outward(working);
        default: return std::nullopt;
    }
}

}  // namespace

std::string_view to_string(Ordering ordering) {
    switch (ordering) {
        case Ordering::Less: return "Less";
        case Ordering::Equal: return "Equal";
        case Ordering::Greater: return "Greater";
        case Ordering::Undecided: return "Undecided";
    }
    return "Undecided";
}

Ordering refine_compare(const Expr& lhs, const Expr& rhs, unsigned long cap_bits) {
    auto l = lhs.try_exact();
    auto r = rhs.try_exact();
    if (l && r && same_field(*l, *r)) {
        int s = (*l - *r).sign();
        return s < 0 ? Ordering::Less : (s > 0 ? Ordering::Greater : Ordering::Equal);
    }
    Expr diff = lhs - rhs;
    for (unsigned long bits = std::min<unsigned long>(64, cap_bits); bits <= cap_bits; bits *= 2) {
        auto iv = diff.evaluate(bits);
        if (!iv) continue;
        if (sgn(iv->lo()) > 0) return Ordering::Greater;
        if (sgn(iv->hi()) < 0) return Ordering::Less;
    }
    return Ordering::Undecided;
}

int decide_sign(const Expr& x, unsigned long cap_bits) {
    switch (refine_compare(x, Expr(0L), cap_bits)) {
        case Ordering::Less: return -1;
        case Ordering::Equal: return 0;
        case Ordering::Greater: return 1;
        case Ordering::Undecided: break;
    }
    throw Error(ErrorCode::UndecidedSign, "sign undecided at " + std::to_string(cap_bits) + " bits");
}

Interval enclose(const Expr& x, unsigned long bits, unsigned long cap_bits) {
    const Rat target = make_rat(1, pow2(bits));
    const unsigned long limit = cap_bits + bits;
    for (unsigned long p = bits + kGuardBits; p <= limit; p *= 2) {
        auto iv = x.evaluate(p);
        if (iv && iv->width() <= target) return *iv;
    }
    throw Error(ErrorCode::UndecidedSign, "enclosure not reached within precision cap");
}

namespace {

// Round half away from zero to an integer multiple of 10^-digits.
Integer round_scaled(const Rat& x, const Integer& scale) {
    Rat scaled = x * Rat(scale);
    if (sgn(scaled) >= 0) return floor(Rat(scaled + Rat(1, 2)));
    return -floor(Rat(-scaled + Rat(1, 2)));
}

std::string format_scaled(const Integer& n, unsigned digits) {
    std::string s = Integer(abs(n)).get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    return sgn(n) < 0 ? "-" + s : s;
}

}  // namespace

std::string render_decimal(const Expr& x, unsigned digits, unsigned long cap_bits) {
    const Integer scale = pow10(digits);
    if (auto exact = x.try_exact(); exact && exact->is_rational()) {
        return format_scaled(round_scaled(exact->a(), scale), digits);
    }
    const unsigned long limit = cap_bits + 4UL * digits;
    for (unsigned long bits = 64; bits <= limit; bits *= 2) {
        auto iv = x.evaluate(bits + 4UL * digits);
        if (!iv) continue;
        Integer lo = round_scaled(iv->lo(), scale);
        if (lo == round_scaled(iv->hi(), scale)) return format_scaled(lo, digits);
    }
    throw Error(ErrorCode::UndecidedSign, "decimal rounding undecided at precision cap");
}

namespace constants {

QuadExt tau() { return QuadExt(Rat(1, 2), Rat(1, 2), Integer(5)); }
QuadExt phi() { return QuadExt(Rat(-1, 2), Rat(1, 2), Integer(5)); }

Expr sqrt_tau() { return sqrt(Expr(tau())); }

Expr K() { return sqrt_tau() - Expr(1L); }

Expr C() {
    Expr sqrt5 = Expr(QuadExt(Rat(0), Rat(1), Integer(5)));
    return sqrt5 * (Expr(1L) - sqrt(Expr(phi())));
}

Expr C_via_K() {
    Expr root = sqrt_tau();
    return K() * (root + Expr(1L) / (Expr(tau()) * root));
}

Expr expr(Name name) {
    switch (name) {
        case Name::Tau: return Expr(tau());
        case Name::Phi: return Expr(phi());
        case Name::K: return K();
        case Name::C: return C();
    }
    return C();
}

std::optional<Name> parse_name(std::string_view text) {
    if (text == "tau") return Name::Tau;
    if (text == "phi") return Name::Phi;
    if (text == "K") return Name::K;
    if (text == "C") return Name::C;
    return std::nullopt;
}

std::string_view to_string(Name name) {
    switch (name) {
        case Name::Tau: return "tau";
        case Name::Phi: return "phi";
        case Name::K: return "K";
        case Name::C: return "C";
    }
    return "C";
}

Interval value(Name name, unsigned long precision_bits) { return enclose(expr(name), precision_bits); }

}  // namespace constants

}  // namespace irrmeasure
