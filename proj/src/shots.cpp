#include "lcone/shots.hpp"

#include <cmath>
#include <stdexcept>

#include "lcone/errors.hpp"

namespace lcone {

namespace {

void check_inputs(const Observable& obs, size_t aligned, double epsilon) {
    if (epsilon <= 0.0) throw ConfigError("epsilon must be positive");
    if (obs.terms().empty()) throw ConfigError("degenerate observable: no terms");
    if (aligned != obs.terms().size())
        throw ConfigError("cone/expansion list not aligned with observable terms");
}

}  // namespace

ShotPlan plan_causal(const Observable& obs, const std::vector<LightCone>& cones,
                     double epsilon, double delta) {
    check_inputs(obs, cones.size(), epsilon);
    ShotPlan plan;
    plan.mode = ShotPlan::Mode::Causal;
    plan.target_variance = delta * epsilon * epsilon;

    size_t m = obs.terms().size();
    plan.shots_per_task.assign(m, 0);
    plan.task_count.assign(m, 0);
    for (size_t a = 0; a < m; ++a) {
        if (cones[a].identity) continue;
        plan.task_count[a] = static_cast<long>(cones[a].components.size());
        plan.k1 += plan.task_count[a] * std::abs(obs.terms()[a].coeff);
    }
    plan.sqrt_lambda = plan.k1 / plan.target_variance;
    plan.k_tot_continuous = plan.k1 * plan.k1 / plan.target_variance;
    for (size_t a = 0; a < m; ++a) {
        if (plan.task_count[a] == 0) continue;
        plan.shots_per_task[a] =
            static_cast<long>(std::ceil(plan.sqrt_lambda * std::abs(obs.terms()[a].coeff)));
        plan.k_tot += plan.task_count[a] * plan.shots_per_task[a];
    }
    return plan;
}

ShotPlan plan_algebraic(const Observable& obs, const std::vector<ExpansionShape>& shapes,
                        double epsilon, double delta, double variance_constant) {
    check_inputs(obs, shapes.size(), epsilon);
    ShotPlan plan;
    plan.mode = ShotPlan::Mode::Algebraic;
    plan.target_variance = delta * epsilon * epsilon;

    size_t m = obs.terms().size();
    plan.shots_per_task.assign(m, 0);
    plan.task_count.assign(m, 0);
    for (size_t a = 0; a < m; ++a) {
        if (shapes[a].size == 0) continue;  // identity term, evaluated exactly
        plan.task_count[a] = shapes[a].branches * shapes[a].branches * shapes[a].size;
        plan.weighted_task_sum += plan.task_count[a] * std::abs(obs.terms()[a].coeff);
    }
    plan.sqrt_lambda = variance_constant / plan.target_variance * plan.weighted_task_sum;
    plan.k_tot_continuous = variance_constant / plan.target_variance *
                            plan.weighted_task_sum * plan.weighted_task_sum;
    for (size_t a = 0; a < m; ++a) {
        if (plan.task_count[a] == 0) continue;
        plan.shots_per_task[a] =
            static_cast<long>(std::ceil(plan.sqrt_lambda * std::abs(obs.terms()[a].coeff)));
        plan.k_tot += plan.task_count[a] * plan.shots_per_task[a];
    }
    return plan;
}

}  // namespace lcone
