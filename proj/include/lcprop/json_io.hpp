#pragma once

/// JSON forms for the CLI and file interfaces. Rationals travel as exact
/// "num/den" strings (plain integers accepted on input) so every value
/// round-trips bit-exactly.

#include <json.hpp>

#include "lcprop/combinat.hpp"
#include "lcprop/geom.hpp"
#include "lcprop/kernel.hpp"
#include "lcprop/polyroots.hpp"
#include "lcprop/seq.hpp"

namespace lcprop {

nlohmann::json rat_to_json(const Rat& q);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json seq_to_json(const ExactSeq& s);      // ["5/8","1/4","1/8"]
ExactSeq seq_from_json(const nlohmann::json& j);    // strings or integers

nlohmann::json poly_to_json(const ExactPoly& p);    // ascending coefficients
ExactPoly poly_from_json(const nlohmann::json& j);

// {"kind":"tabular","rows":{"0":[...]}} | {"kind":"stirling2"}
// | {"kind":"eulerian","n":N} | {"kind":"independent","pW":[...]}
// | {"kind":"geom_joint","p":"1/2","alpha":"1/3","horizon":H}
nlohmann::json kernel_to_json(const Kernel& k);
Kernel kernel_from_json(const nlohmann::json& j);

nlohmann::json lc_report_to_json(const LcReport& r);
nlohmann::json condition1_report_to_json(const Condition1Report& r);
nlohmann::json triangle_row_to_json(const TriangleRow& r);
nlohmann::json geom_analysis_to_json(const GeomSumAnalysis& a);
nlohmann::json threshold_to_json(const ThresholdInterval& t);
nlohmann::json order_report_to_json(const OrderReport& r);
nlohmann::json main_theorem_report_to_json(const MainTheoremReport& r);

}  // namespace lcprop
