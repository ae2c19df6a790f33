#include "lcprop/json_io.hpp"

namespace lcprop {

using nlohmann::json;

json rat_to_json(const Rat& q) { return rat_str(q); }

Rat rat_from_json(const json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
    throw std::invalid_argument("expected a rational as \"num/den\" string or integer");
}

json seq_to_json(const ExactSeq& s) {
    json out = json::array();
    for (const Rat& v : s.values()) out.push_back(rat_to_json(v));
    return out;
}

ExactSeq seq_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("expected a non-empty array of rationals");
    std::vector<Rat> vals;
    vals.reserve(j.size());
    for (const auto& item : j) vals.push_back(rat_from_json(item));
    return ExactSeq(std::move(vals));
}

json poly_to_json(const ExactPoly& p) {
    json out = json::array();
    for (const Rat& c : p.coeffs()) out.push_back(rat_to_json(c));
    return out;
}

ExactPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of coefficients");
    std::vector<Rat> coeffs;
    coeffs.reserve(j.size());
    for (const auto& item : j) coeffs.push_back(rat_from_json(item));
    return ExactPoly(std::move(coeffs));
}

json kernel_to_json(const Kernel& k) {
    json out;
    switch (k.kind()) {
        case KernelKind::tabular: {
            out["kind"] = "tabular";
            json rows = json::object();
            for (std::size_t v = 0; v < k.rows().size(); ++v) {
                json row = json::array();
                for (const Rat& x : k.rows()[v]) row.push_back(rat_to_json(x));
                rows[std::to_string(v)] = std::move(row);
            }
            out["rows"] = std::move(rows);
            break;
        }
        case KernelKind::independent:
            out["kind"] = "independent";
            out["pW"] = seq_to_json(k.pw());
            break;
        case KernelKind::stirling2:
            out["kind"] = "stirling2";
            break;
        case KernelKind::eulerian:
            out["kind"] = "eulerian";
            out["n"] = k.eulerian_n();
            break;
        case KernelKind::geom_joint:
            out["kind"] = "geom_joint";
            out["p"] = rat_to_json(k.geom_p());
            out["alpha"] = rat_to_json(k.geom_alpha());
            out["horizon"] = k.horizon();
            break;
    }
    return out;
}

Kernel kernel_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("kernel: expected an object with a \"kind\" field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "tabular") {
        const auto& rows_json = j.at("rows");
        if (!rows_json.is_object()) throw std::invalid_argument("tabular kernel: rows must be an object");
        long v_max = -1;
        for (auto it = rows_json.begin(); it != rows_json.end(); ++it)
            v_max = std::max(v_max, std::stol(it.key()));
        std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(v_max + 1));
        for (auto it = rows_json.begin(); it != rows_json.end(); ++it) {
            std::vector<Rat> row;
            for (const auto& item : it.value()) row.push_back(rat_from_json(item));
            rows[static_cast<std::size_t>(std::stol(it.key()))] = std::move(row);
        }
        return Kernel::tabular(std::move(rows));
    }
    if (kind == "independent") return Kernel::independent(seq_from_json(j.at("pW")));
    if (kind == "stirling2") return Kernel::stirling2();
    if (kind == "eulerian") return Kernel::eulerian(j.at("n").get<long>());
    if (kind == "geom_joint")
        return Kernel::geometric_joint(rat_from_json(j.at("p")), rat_from_json(j.at("alpha")),
                                       j.at("horizon").get<long>());
    throw std::invalid_argument("kernel: unknown kind '" + kind + "'");
}

json lc_report_to_json(const LcReport& r) {
    json deficits = json::array();
    for (const auto& [i, d] : r.deficits) deficits.push_back({{"i", i}, {"value", rat_to_json(d)}});
    json out{{"is_lc", r.is_lc}, {"deficits", std::move(deficits)}};
    if (r.first_violation) out["first_violation"] = *r.first_violation;
    return out;
}

json condition1_report_to_json(const Condition1Report& r) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts)
        verdicts.push_back({{"i", v.i},
                            {"m", v.m},
                            {"t", v.t},
                            {"sum_a", rat_to_json(v.sum_a)},
                            {"sum_b", rat_to_json(v.sum_b)}});
    json out{{"i_max", r.i_max},
             {"adjusted", r.adjusted},
             {"holds_a", r.holds_a},
             {"holds_b", r.holds_b},
             {"holds", r.holds()},
             {"verdicts", std::move(verdicts)}};
    if (r.first_failure)
        out["first_failure"] = {{"i", r.first_failure->i},
                                {"m", r.first_failure->m},
                                {"t", r.first_failure->t},
                                {"part", std::string(1, r.first_failure->part)}};
    return out;
}

json triangle_row_to_json(const TriangleRow& r) {
    json out{{"family", family_name(r.family)}, {"n", r.n}, {"row", seq_to_json(r.row)}};
    if (r.q) out["q"] = rat_to_json(*r.q);
    return out;
}

json geom_analysis_to_json(const GeomSumAnalysis& a) {
    json crit = json::array();
    for (const auto& [i, v] : a.criterion_values)
        crit.push_back({{"i", i}, {"value", rat_to_json(v)}});
    json out{{"px", seq_to_json(a.px)},
             {"p", rat_to_json(a.p)},
             {"horizon", a.horizon},
             {"q_values", seq_to_json(a.q_values)},
             {"criterion_values", std::move(crit)},
             {"is_lc", a.is_lc},
             {"decisive", a.decisive}};
    if (a.first_violation) out["first_violation"] = *a.first_violation;
    return out;
}

json threshold_to_json(const ThresholdInterval& t) {
    return {{"lo", rat_to_json(t.lo)},
            {"hi", rat_to_json(t.hi)},
            {"lc_at_hi", t.lc_at_hi},
            {"probes", t.probes}};
}

json order_report_to_json(const OrderReport& r) {
    return {{"lc_at_p1", r.lc_at_p1},
            {"lc_at_p2", r.lc_at_p2},
            {"implication_holds", r.implication_holds},
            {"brackets_nonneg", r.brackets_nonneg},
            {"identity_exact", r.identity_exact}};
}

json main_theorem_report_to_json(const MainTheoremReport& r) {
    return {{"base_lc", lc_report_to_json(r.base_lc)},
            {"condition1", condition1_report_to_json(r.condition1)},
            {"sum", seq_to_json(r.sum)},
            {"sum_lc", lc_report_to_json(r.sum_lc)},
            {"decomposition_exact", r.decomposition_exact},
            {"sum_lc_window", r.sum_lc_window},
            {"certified", r.certified}};
}

}  // namespace lcprop
