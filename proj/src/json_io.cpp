#include "lcone/json_io.hpp"

namespace lcone {

nlohmann::ordered_json plan_to_json(const ShotPlan& plan) {
    nlohmann::ordered_json j;
    j["mode"] = plan.mode == ShotPlan::Mode::Causal ? "causal" : "algebraic";
    j["target_variance"] = plan.target_variance;
    j["sqrt_lambda"] = plan.sqrt_lambda;
    if (plan.mode == ShotPlan::Mode::Causal)
        j["k1"] = plan.k1;
    else
        j["weighted_task_sum"] = plan.weighted_task_sum;
    j["k_tot_continuous"] = plan.k_tot_continuous;
    j["k_tot"] = plan.k_tot;
    j["shots_per_task"] = plan.shots_per_task;
    j["task_count"] = plan.task_count;
    return j;
}

nlohmann::ordered_json report_to_json(const EstimateReport& rep, bool include_timing) {
    nlohmann::ordered_json j;
    j["method"] = rep.method;
    j["estimate"] = rep.estimate;
    if (rep.method == "algebraic") j["imag_diagnostic"] = rep.imag_diagnostic;
    j["term_estimates"] = rep.term_estimates;
    j["total_shots"] = rep.total_shots;
    j["variance_bound"] = rep.variance_bound;
    if (rep.oracle) j["oracle"] = *rep.oracle;
    j["max_device_qubits"] = rep.max_device_qubits;
    j["circuit_depth"] = rep.circuit_depth;
    if (rep.hadamard_depth > 0) j["hadamard_depth"] = rep.hadamard_depth;
    if (rep.method != "oracle") j["plan"] = plan_to_json(rep.plan);
    if (!rep.components.empty()) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : rep.components)
            arr.push_back({{"term", c.term},
                           {"component", c.component},
                           {"shots", c.shots},
                           {"estimate", c.estimate},
                           {"exact", c.exact}});
        j["components"] = std::move(arr);
    }
    if (include_timing) j["wall_seconds"] = rep.wall_seconds;
    return j;
}

}  // namespace lcone
