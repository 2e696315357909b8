#include "irrmeasure/certificates.hpp"

namespace irrmeasure {

using nlohmann::json;

namespace {

std::string dec(const Expr& x, const RenderOptions& opt) { return render_decimal(x, opt.digits, opt.cap_bits); }

json interval_json(const Interval& iv, unsigned digits) {
    // Outward decimal ends, plus the exact rational ends.
    std::string text = to_string(iv, digits);
    auto comma = text.find(", ");
    return {{"lo", text.substr(1, comma - 1)},
            {"hi", text.substr(comma + 2, text.size() - comma - 3)},
            {"lo_exact", iv.lo().get_str()},
            {"hi_exact", iv.hi().get_str()}};
}

json words(const std::vector<Integer>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(x.get_str());
    return out;
}

}  // namespace

json to_json(const Witness& w, const RenderOptions& opt) {
    Expr magnitude = abs(w.d.expr());
    return {
        {"kind", "witness"},
        {"indices", {{"r_alpha", w.r_alpha}, {"r_beta", w.r_beta}}},
        {"t", w.t.get_str()},
        {"exact_values", {{"inv_psi_alpha", w.d.inv_psi_alpha.to_string()}, {"inv_psi_beta", w.d.inv_psi_beta.to_string()}}},
        {"decimal",
         {{"digits", opt.digits},
          {"d", w.d.decimal(opt.digits, opt.cap_bits)},
          {"abs_d_over_t", dec(magnitude / Expr(Rat(w.t)), opt)},
          {"C_times_t", dec(constants::C() * Expr(Rat(w.t)), opt)}}},
        {"ratio_lower_bound", w.ratio_lower_bound.get_str()},
        {"verdict", w.comparison == Ordering::Greater ? "Greater" : "GreaterOrEqual"},
    };
}

json to_json(const Coincidence& c, std::string_view kind) {
    return {{"kind", kind},
            {"indices", {{"n", c.n}, {"m", c.m}}},
            {"exact_values", {{"first", c.first.get_str()}, {"second", c.second.get_str()}}},
            {"verdict", "coincidence"}};
}

json to_json(const DichotomyReport& r, const RenderOptions& opt) {
    return {{"kind", "dichotomy"},
            {"indices", {{"n", r.n}, {"s", r.s}}},
            {"decimal",
             {{"digits", opt.digits},
              {"first_lhs", dec(r.first_lhs, opt)},
              {"first_rhs", dec(r.first_rhs, opt)},
              {"second_lhs", dec(r.second_lhs, opt)},
              {"second_rhs", dec(r.second_rhs, opt)}}},
            {"verdict", to_string(r.branch)}};
}

json to_json(const GapCertificate& c, const RenderOptions& opt) {
    const bool alpha_side = c.side == GapCertificate::Side::Alpha;
    return {{"kind", "interleave_gap"},
            {"indices", {{"side", alpha_side ? "alpha" : "beta"}, {"n", c.n}, {"m", c.m}}},
            {"t", c.witness_t.get_str()},
            {"points", {c.lower_t.get_str(), c.upper_t.get_str()}},
            {"pivot", c.pivot.get_str()},
            {"quotient", c.quotient.get_str()},
            {"exact_values",
             {{"lower", {{"inv_psi_alpha", c.d_lower.inv_psi_alpha.to_string()},
                         {"inv_psi_beta", c.d_lower.inv_psi_beta.to_string()}}},
              {"upper", {{"inv_psi_alpha", c.d_upper.inv_psi_alpha.to_string()},
                         {"inv_psi_beta", c.d_upper.inv_psi_beta.to_string()}}}}},
            {"decimal",
             {{"digits", opt.digits},
              {"d_lower", c.d_lower.decimal(opt.digits, opt.cap_bits)},
              {"d_upper", c.d_upper.decimal(opt.digits, opt.cap_bits)}}},
            {"verdict", c.chain_verified ? "verified" : "unverified"}};
}

json to_json(const OptimalPair& p, const RenderOptions& opt) {
    json xs = words(p.x_sequence(p.k + 6));
    return {{"kind", "optimal_pair"},
            {"epsilon", p.epsilon.get_str()},
            {"U", p.U.get_str()},
            {"V", p.V.get_str()},
            {"A", p.A.to_string()},
            {"A_decimal", dec(Expr(p.A), opt)},
            {"error", interval_json(p.error, opt.digits)},
            {"k", p.k},
            {"w", p.w},
            {"b", words(p.b)},
            {"theta", "cf:" + p.theta.to_string()},
            {"index_shift", p.index_shift},
            {"X", xs},
            {"verdict", "constructed"}};
}

json to_json(const NearOptimalityReport& r, const RenderOptions& opt) {
    return {{"kind", "near_optimality"},
            {"t", r.argmax_t.get_str()},
            {"steps", r.steps},
            {"max_ratio", interval_json(r.max_ratio, opt.digits)},
            {"C", dec(constants::C(), opt)},
            {"verdict", r.pass ? "pass" : "fail"}};
}

json to_json(const PsiValue& v, const RenderOptions& opt) {
    return {{"kind", "psi"},
            {"indices", {{"r", v.index}}},
            {"q", v.q.get_str()},
            {"exact_values", {{"psi", v.value.to_string()}, {"inv_psi", v.inv_value.to_string()}}},
            {"decimal", {{"digits", opt.digits}, {"psi", dec(Expr(v.value), opt)}, {"inv_psi", dec(Expr(v.inv_value), opt)}}}};
}

json to_json(const MergedWord& word) {
    json letters = json::array();
    json values = json::array();
    for (const auto& l : word) {
        letters.push_back(l.to_string());
        values.push_back(l.value.get_str());
    }
    return {{"kind", "merged_word"}, {"letters", letters}, {"values", values}};
}

json to_json(const Error& e) {
    return {{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
}

}  // namespace irrmeasure
