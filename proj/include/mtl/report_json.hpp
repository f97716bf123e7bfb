#pragma once

// JSON views of the report types. Big integers are written as decimal
// strings; values that are not finite become null.

#include <cmath>
#include <optional>

#include "json.hpp"
#include "mtl/bigint.hpp"
#include "mtl/moments.hpp"
#include "mtl/skewdet.hpp"
#include "mtl/symchar.hpp"
#include "mtl/zeta_moments.hpp"

namespace mtl::json {

using Json = nlohmann::ordered_json;

inline Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

inline Json number(const std::optional<double>& x) { return x ? number(*x) : Json(nullptr); }

inline Json big(const BigInt& x) { return to_decimal(x); }

inline Json to_json(const LogReal& r) {
    return Json{{"log", number(r.log)}, {"value", number(r.value)}};
}

inline Json to_json(const TheoremReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"b", number(c.b)}, {"tail", number(c.tail)}, {"bound", number(c.bound)}, {"holds", c.holds}});
    return Json{{"a", number(r.a)}, {"max", number(r.max_value)}, {"degenerate", r.degenerate}, {"checks", checks}};
}

inline Json to_json(const zeta::MomentEstimate& e) {
    return Json{{"T", number(e.T)},
                {"H", number(e.H)},
                {"k", e.k},
                {"value", number(e.value)},
                {"nodes", e.nodes},
                {"step", number(e.step)},
                {"refined_value", number(e.refined_value)},
                {"relative_change", number(e.relative_change)},
                {"converged", e.converged},
                {"coarse_step_warning", e.coarse_step_warning}};
}

inline Json to_json(const zeta::RestrictedFourthMoment& m) {
    return Json{{"coefficient", number(m.coefficient)},
                {"threshold", number(m.threshold)},
                {"restricted_fourth", number(m.restricted_fourth)},
                {"measure_of_set", number(m.measure_of_set)}};
}

inline Json to_json(const zeta::TailMomentReport& r) {
    return Json{{"T", number(r.T)},
                {"H", number(r.H)},
                {"step", number(r.step)},
                {"nodes", r.nodes},
                {"threshold_coefficient", number(r.threshold_coefficient)},
                {"threshold", number(r.threshold)},
                {"restricted_fourth", number(r.restricted_fourth)},
                {"measure_of_set", number(r.measure_of_set)},
                {"threshold_inv_4pi2", to_json(r.at_inv_four_pi_sq)},
                {"threshold_inv_2pi", to_json(r.at_inv_two_pi)},
                {"second_moment", number(r.second_moment)},
                {"fourth_moment", number(r.fourth_moment)},
                {"e_xi", number(r.e_xi)},
                {"a", number(r.a)},
                {"b", number(r.b)},
                {"tail", number(r.tail)},
                {"bound", number(r.bound)},
                {"holds", r.holds},
                {"degenerate", r.degenerate},
                {"xi_cutoff", number(r.xi_cutoff)},
                {"corollary_main_term", number(r.corollary_main_term)},
                {"main_term_ratio", number(r.main_term_ratio)},
                {"h_exceeds_t_two_thirds", r.h_exceeds_t_two_thirds}};
}

inline Json to_json(const skewdet::DetStats& s) {
    Json j{{"n", s.n},
           {"mode", skewdet::to_string(s.mode)},
           {"convention", skewdet::to_string(s.convention)},
           {"count", s.count},
           {"s1", number(s.s1)},
           {"s2", number(s.s2)},
           {"sum_abs_det", big(s.sum_abs_det)},
           {"sum_det2", big(s.sum_det2)},
           {"max_abs_det", big(s.max_abs_det)}};
    if (s.mode == skewdet::StatsMode::monte_carlo) {
        j["stderr_s1"] = number(s.stderr_s1);
        j["stderr_s2"] = number(s.stderr_s2);
        j["seed"] = s.seed ? Json(*s.seed) : Json(nullptr);
    }
    return j;
}

inline Json to_json(const skewdet::SkewSignMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.n(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.n(); ++j) row.push_back(m.entry(i, j));
        rows.push_back(row);
    }
    return rows;
}

inline Json to_json(const skewdet::SearchResult& r) {
    return Json{{"n", r.best.n()},
                {"convention", skewdet::to_string(r.best.convention())},
                {"best_abs_det", big(r.best_abs_det)},
                {"log_abs_det", number(r.log_abs_det)},
                {"evaluations", r.evaluations},
                {"restarts", r.restarts},
                {"ratio_to_corollary2_bound", number(r.ratio_to_corollary2)},
                {"ratio_to_szekeres_s1", number(r.ratio_to_szekeres_s1)},
                {"matrix", to_json(r.best)}};
}

inline Json to_json(const symchar::XiMoments& m) {
    return Json{{"n", m.n},
                {"e_xi", number(m.e_xi)},
                {"e_xi2", number(m.e_xi2)},
                {"e_xi2_denominator", big(m.e_xi2_denominator)},
                {"e_xi_asym", to_json(m.e_xi_asym)},
                {"e_xi2_asym", to_json(m.e_xi2_asym)}};
}

inline Json to_json(const symchar::DegreeBound& b) {
    return Json{{"numerator", big(b.numerator)},
                {"denominator", big(b.denominator)},
                {"log_value", number(b.log_value)},
                {"value", number(b.value)}};
}

}  // namespace mtl::json
