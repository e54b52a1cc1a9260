#pragma once

#include <vector>

#include "lcone/lightcone.hpp"
#include "lcone/pauli.hpp"

namespace lcone {

/// Lagrangian-optimal shot allocation. All tasks of one term receive the
/// same count, proportional to |c_alpha|; counts are ceiled to integers so
/// the variance target stays one-sided.
struct ShotPlan {
    enum class Mode { Causal, Algebraic };
    Mode mode = Mode::Causal;
    double target_variance = 0.0;  // V = delta * epsilon^2
    double sqrt_lambda = 0.0;
    double k1 = 0.0;                  // causal: sum_alpha k_alpha |c_alpha|
    double weighted_task_sum = 0.0;   // algebraic: sum |c_alpha| N^2 Size
    double k_tot_continuous = 0.0;    // closed form before ceiling
    long k_tot = 0;                   // after ceiling
    std::vector<long> shots_per_task;  // per term alpha (0 for identity terms)
    std::vector<long> task_count;      // tasks of term alpha (k_alpha or N^2*Size)
};

ShotPlan plan_causal(const Observable& obs, const std::vector<LightCone>& cones,
                     double epsilon, double delta = 1.0 / 3.0);

/// Shape of a term's local expansion: branch count N_alpha and cone size.
struct ExpansionShape {
    long branches = 1;  // N_alpha
    long size = 0;      // Size_alpha (clusters in the cone)
};

ShotPlan plan_algebraic(const Observable& obs, const std::vector<ExpansionShape>& shapes,
                        double epsilon, double delta = 1.0 / 3.0,
                        double variance_constant = 2.0);

}  // namespace lcone
